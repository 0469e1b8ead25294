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

#ifndef XHC_MODEL_HPP
#define XHC_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xhc/instances.hpp"

namespace xhc {

/// Line-oriented model files:
///
///   # comment
///   field cyclotomic <N>
///   name <text>
///   instance <kind> <key>=<value> ...
///   task <key> <value>
///   space <name> dim <d> [labels <l0> <l1> ...]
///   tensor <name> <arity> <space> [<slot space> ...]
///   <i1> ... <ik> : <scalar>*e<j> [+ ...]
///   map <name> <src> <tgt>
///   <col> : <scalar>*e<j> [+ ...]
///
/// Space expressions are declared names joined by '*' (tensor products);
/// Q is the 1-dimensional ground field.
struct ModelSpace {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
};

struct ModelTensor {
  std::string name;
  std::size_t arity = 0;
  std::string space;
  std::vector<std::string> slots;
  std::vector<std::pair<std::vector<std::size_t>, SparseVec>> entries;
};

struct ModelMap {
  std::string name, src, tgt;
  std::vector<std::pair<std::size_t, SparseVec>> cols;
};

struct ModelFile {
  int conductor = 1;
  std::string name;
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> instances;
  std::vector<std::pair<std::string, std::string>> tasks;
  std::vector<ModelSpace> spaces;
  std::vector<ModelTensor> tensors;
  std::vector<ModelMap> maps;

  const CyclotomicField* field() const;
  const ModelTensor* tensor(const std::string& n) const;
  const ModelMap* map(const std::string& n) const;
  std::optional<std::string> task(const std::string& key) const;
  /// Space of a '*'-joined expression; throws ParseError on unknown names.
  LinSpace space(const std::string& expr) const;
  /// A map as a LinMap between its declared spaces.
  LinMap linmap(const std::string& n) const;
  /// An arity-0 tensor as a vector.
  SparseVec vector(const std::string& n) const;
};

/// Throws ParseError (line and column) or ShapeError (line).
ModelFile parse_model(std::string_view text);
ModelFile parse_model_file(const std::string& path);
/// Canonical text; parse_model(export_model(m)) exports to the same bytes.
std::string export_model(const ModelFile& m);

/// Structure maps of a bundle: spaces R, K; tensors mult_R, unit_R, mult_K,
/// unit_K, sigma; maps s, t, Delta, eps, trans and, when present, delta,
/// haar, phi.
ModelFile model_from_bundle(const InstanceBundle& b);
/// Adds the module algebra A (space A; tensors mult_A, unit_A, act_A).
void add_module_algebra(ModelFile& m, const ModuleAlgebra& A);

/// Certification of a model: the bundle (when it assembles) and the report
/// of every check that ran.
struct ModelCheck {
  std::optional<InstanceBundle> bundle;
  CheckReport report;
};
/// Built from structure maps when present, else from the first instance
/// line.
ModelCheck certify_model(const ModelFile& m);
/// certify_model, throwing AxiomError when the bundle does not assemble.
InstanceBundle bundle_from_model(const ModelFile& m);
/// The module algebra stored in the file, if any.
std::optional<ModuleAlgebra> module_algebra_from_model(const ModelFile& m, const XHopfAlgebra& X);

/// Built-in instances: torus N=<n>; enveloping R={dual|z2|q};
/// hopf G={z2|z3|s3|sweedler}; cm and kadison H={z2|s3|sweedler}
/// A={trivial|swap}.
InstanceBundle builtin_instance(const std::string& kind, const std::map<std::string, std::string>& params);

}  // namespace xhc

#endif
