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

#ifndef XHC_TENSOR_HPP
#define XHC_TENSOR_HPP

#include <functional>
#include <vector>

#include "xhc/linalg.hpp"

namespace xhc {

/// A formula on pure tensors: ambient digit tuple -> vector in a target
/// ambient space.
using Formula = std::function<SparseVec(const std::vector<std::size_t>& digits)>;

/// The map on the full ambient space given by a formula on basis tuples.
LinMap ambient_map(const LinSpace& src, const LinSpace& tgt, const Formula& f);

/// Induced operator src.quotient -> tgt.quotient of an ambient formula,
/// with the well-definedness check of induced_map.
LinMap build_operator(const QuotientSpace& src, const QuotientSpace& tgt, const Formula& f);
LinMap build_operator(const QuotientSpace& src, const QuotientSpace& tgt, const LinMap& f);

/// Same as build_operator but evaluates the formula only on the section
/// representatives; no descent check.
LinMap lift_operator(const QuotientSpace& src, const QuotientSpace& tgt, const Formula& f);

/// Basis vector with factor `pos` of `digits` replaced by v.
SparseVec embed(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims,
                std::size_t pos, const SparseVec& v);
/// Pure basis tensor e_{d0}⊗...⊗e_{dk}.
SparseVec pure(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims);

/// X ⊗_B Y where B acts on the right of X.quotient and on the left of
/// Y.quotient through operators indexed by a basis of B. The result is a
/// quotient of X.ambient ⊗ Y.ambient.
QuotientSpace balanced_pair(const QuotientSpace& X, const std::vector<LinMap>& xright,
                            const QuotientSpace& Y, const std::vector<LinMap>& yleft);

/// The operator on q.quotient obtained by applying op to ambient factor
/// `pos` of the section representatives.
LinMap factor_op(const QuotientSpace& q, std::size_t pos, const LinMap& op);

/// Applies op to the `count` consecutive factors starting at `pos` of an
/// ambient vector x over factor dimensions `dims`. The op's target may have
/// any dimension; it occupies a single slot in the output indexing.
SparseVec splice(const SparseVec& x, const std::vector<std::size_t>& dims, std::size_t pos,
                 std::size_t count, const LinMap& op);
/// Factor dimensions after splice.
std::vector<std::size_t> splice_dims(const std::vector<std::size_t>& dims, std::size_t pos,
                                     std::size_t count, const std::vector<std::size_t>& out);

/// Concatenates digit tuples.
std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b);

}  // namespace xhc

#endif
