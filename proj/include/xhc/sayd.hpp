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

#ifndef XHC_SAYD_HPP
#define XHC_SAYD_HPP

#include <vector>

#include "xhc/xhopf.hpp"

namespace xhc {

/// Right K-module, left K-comodule. The coaction lands in the ambient
/// K ⊗ M and is read in KM = K ⊗_R M, where M carries r·m = m t(r) and
/// m·r = m s(r).
struct SaydModule {
  LinSpace M;
  std::vector<LinMap> act;  // act[k](m) = m·e_k
  LinMap coact;             // M -> K ⊗ M
  Bimodule Mbim;
  QuotientSpace KM;

  std::size_t dim() const { return M.dim(); }
  /// m ↦ m·k for a vector k.
  LinMap action_of(const SparseVec& k) const;
};

SaydModule assemble_sayd(const XHopfAlgebra& X, LinSpace M, std::vector<LinMap> act, LinMap coact);
/// Module, comodule, bimodule compatibility, AYD and stability. The two
/// coaction displays that accompany the canonical right action are
/// recorded as informational items.
CheckReport check_sayd(const XHopfAlgebra& X, const SaydModule& M);
SaydModule make_sayd(const XHopfAlgebra& X, LinSpace M, std::vector<LinMap> act, LinMap coact);

/// The two compatibility equations and stability for ^σR_δ.
CheckReport check_base_sayd(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta);
/// R with r ◁ k = δ(s(r)k) and r ↦ s(r)σ ⊗ 1, fully certified.
SaydModule sayd_on_base(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta);
/// Same structure without certification, for negative tests.
SaydModule base_module(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta);

/// m·r := m₍₀₎ t(ε(m₍₋₁₎ s(r))), the right R-action of a comodule, indexed by
/// a basis of R. The checks of that action against m s(r) and the coaction
/// displays go to rep when given.
std::vector<LinMap> canonical_right_action(const XHopfAlgebra& X, const SaydModule& M,
                                           CheckReport* rep = nullptr);

}  // namespace xhc

#endif
