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

#ifndef XHC_INSTANCES_HPP
#define XHC_INSTANCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "xhc/cyclic.hpp"
#include "xhc/sayd.hpp"
#include "xhc/xhopf.hpp"

namespace xhc {

/// Hopf algebra over the ground field; eps lands in scalars().
struct HopfData {
  FinAlgebra H;
  LinMap Delta, eps, S;
};

/// Left H-module algebra: act[h] is the operator of the basis element h.
struct HModuleAlgebra {
  FinAlgebra A;
  std::vector<LinMap> act;

  LinMap action_of(const SparseVec& h) const;
};

struct InstanceBundle {
  std::string name;
  int conductor = 1;  // scalars live in Q(ζ_conductor)
  XHopfAlgebra X;
  std::optional<HopfData> hopf;
  std::vector<SparseVec> grouplikes;
  SparseVec sigma;
  std::optional<LinMap> delta;
  std::optional<SaydModule> sayd;
  std::optional<LinMap> haar;  // K -> R
  std::optional<LinMap> phi;   // R -> scalars
  std::vector<std::string> notes;
  CheckReport report;
};

using GroupTable = std::vector<std::vector<std::size_t>>;

GroupTable cyclic_group(std::size_t n);
/// S₃ with elements listed as permutations of {0,1,2} in lexicographic order.
GroupTable symmetric_group3();

/// Q[x]/(x²) with basis 1, x.
FinAlgebra dual_numbers();
FinAlgebra group_algebra(const GroupTable& g, const CyclotomicField* F = nullptr);
/// Q ⊕ Q with idempotent basis e0, e1.
FinAlgebra diagonal_pair();

HopfData group_hopf_data(const GroupTable& g, const CyclotomicField* F = nullptr);
/// Sweedler's four-dimensional algebra: g² = 1, x² = 0, xg = -gx,
/// Δx = x ⊗ 1 + g ⊗ x.
HopfData sweedler_data();
/// A = scalars, trivial action.
HModuleAlgebra trivial_module_algebra(const HopfData& H);
/// Q[Z/2] acting on Q ⊕ Q by exchanging the summands.
HModuleAlgebra swap_module_algebra(const HopfData& H);
CheckReport check_h_module_algebra(const HopfData& H, const HModuleAlgebra& A);

InstanceBundle hopf_instance(const HopfData& H, const std::string& name);
InstanceBundle group_hopf(const GroupTable& g);
InstanceBundle sweedler();

InstanceBundle enveloping(const FinAlgebra& R);
/// Adds ^{x⊗x⁻¹}R_δ and the unital functional phi (R -> scalars).
InstanceBundle enveloping_extras(InstanceBundle b, const SparseVec& x, const LinMap& phi);
/// 𝐬_n : C^n -> C^{n-1} on the simplified complex of an enveloping
/// instance, (a⊗b) ⊗ k₂ ⊗ ⋯ ↦ φ(a) s(b)k₂ ⊗ ⋯; entry 0 is empty.
std::vector<LinMap> enveloping_homotopy(const InstanceBundle& b, const CocyclicModule& simple);
/// 𝐬 d_0 = id and 𝐬 d_i = d_{i-1} 𝐬 wherever both sides exist.
CheckReport check_homotopy(const CocyclicModule& cx, const std::vector<LinMap>& s);

InstanceBundle quantum_torus(std::size_t N);
/// ϱ s = id and ϱ(s(r)k) = rϱ(k).
CheckReport check_haar(const InstanceBundle& b);
/// Derived ν against the closed form q^{-mr} U^nV^m ⊗ U^rV^{s-m}.
CheckReport torus_closed_form_nu(const InstanceBundle& b, std::size_t N);

/// f(a) = |G|⁻¹ Σ g▷a for a group algebra H.
LinMap averaging_map(const HopfData& H, const HModuleAlgebra& A);
/// unital, f² = f, f(h▷a) = ε(h)f(a).
CheckReport check_f_laws(const HopfData& H, const HModuleAlgebra& A, const LinMap& f);
/// A ⋊ H ⋉ A^op with basis a ⋊ h ⋉ b.
InstanceBundle cm_smash(const HopfData& H, const HModuleAlgebra& A, std::optional<LinMap> f = std::nullopt);
/// (A ⊗ A^op) ⋈ H with basis a ⊗ b ⊗ h. Closed formulas are tried first;
/// when any fails the structure is transported from cm_smash along χ.
InstanceBundle kadison(const HopfData& H, const HModuleAlgebra& A);

struct ChiResult {
  LinMap chi, chi_inv;  // Kadison -> CM and back
  CheckReport report;
};
ChiResult chi(const HopfData& H, const HModuleAlgebra& A, const InstanceBundle& kad, const InstanceBundle& cm);

}  // namespace xhc

#endif
