/* Copyright (C) 2026 The xhc Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef XHC_ERRORS_HPP
#define XHC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xhc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct AxiomError : Error { using Error::Error; };
struct InverseError : Error { using Error::Error; };
struct CentralityError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };
struct NotCocycleError : Error { using Error::Error; };
struct TraceError : Error { using Error::Error; };
struct EmptyAlgebraError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

/// Raised when an operator does not descend to a quotient. The message
/// carries the violating relation vector in scalar text syntax.
struct WellDefinednessError : Error { using Error::Error; };

}  // namespace xhc

#endif
