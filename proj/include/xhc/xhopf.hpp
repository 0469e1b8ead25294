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

#ifndef XHC_XHOPF_HPP
#define XHC_XHOPF_HPP

#include <vector>

#include "xhc/algebra.hpp"
#include "xhc/report.hpp"

namespace xhc {

/// Left bialgebroid (K, s, t, Δ, ε) over R. Delta lands in the plain
/// ambient K ⊗ K and is read through the quotient KK = K ⊗_R K, where
/// (t(r)k) ⊗ k' = k ⊗ (s(r)k').
struct LeftBialgebroid {
  FinAlgebra K, R;
  LinMap s, t;
  LinMap Delta;
  LinMap eps;

  Bimodule Kbim;       // r·k = s(r)k, k·r = t(r)k
  QuotientSpace KK;    // K ⊗_R K
  QuotientSpace KKK;   // K ⊗_R K ⊗_R K
  LinMap Delta_q;      // K -> KK.quotient

  std::size_t dimK() const { return K.dim(); }
  std::size_t dimR() const { return R.dim(); }
  /// s(r) and t(r) for a vector r of R.
  SparseVec s_of(const SparseVec& r) const { return s.apply(r); }
  SparseVec t_of(const SparseVec& r) const { return t.apply(r); }
  /// K^{⊗_R n}, n >= 1.
  QuotientSpace power(std::size_t n) const;
};

/// Fills the derived fields without checking any axiom.
LeftBialgebroid assemble_bialgebroid(FinAlgebra K, FinAlgebra R, LinMap s, LinMap t, LinMap Delta,
                                     LinMap eps);
CheckReport check_bialgebroid(const LeftBialgebroid& B);
/// Assembles and certifies; throws AxiomError naming the axiom and witness.
LeftBialgebroid make_bialgebroid(FinAlgebra K, FinAlgebra R, LinMap s, LinMap t, LinMap Delta,
                                 LinMap eps);

/// ×_R-Hopf algebra: a bialgebroid with translation map k ↦ k⁻ ⊗ k⁺.
struct XHopfAlgebra {
  LeftBialgebroid B;
  LinMap trans;          // K -> ambient K ⊗ K
  QuotientSpace KopK;    // K ⊗_{R^op} K: k t(r) ⊗ k' = k ⊗ t(r)k'
  LinMap nu;             // KopK -> KK, k ⊗ k' ↦ k₁ ⊗ k₂k'
  LinMap nuhat;          // KK -> KopK, k ⊗ k' ↦ k⁻ ⊗ k⁺k'
};

/// Builds ν and ν̂ (raising WellDefinednessError when one does not descend)
/// and reports the inverse and translation-map identities.
CheckReport check_xhopf(XHopfAlgebra& X);
XHopfAlgebra assemble_xhopf(LeftBialgebroid B, LinMap trans);
/// Certifies; throws InverseError or AxiomError with a witness.
XHopfAlgebra make_xhopf(LeftBialgebroid B, LinMap trans);

/// Hopf algebra H over the ground field: R = scalars, s = t = unit.
/// Delta: H -> H ⊗ H, eps: H -> scalars, S: H -> H.
CheckReport check_hopf(const FinAlgebra& H, const LinMap& Delta, const LinMap& eps, const LinMap& S);
XHopfAlgebra from_hopf(const FinAlgebra& H, const LinMap& Delta, const LinMap& eps, const LinMap& S);

/// (char-1)..(char-3) for δ: K -> R.
CheckReport check_right_character(const XHopfAlgebra& X, const LinMap& delta);
LinMap make_right_character(const XHopfAlgebra& X, const LinMap& delta);

/// Δσ = σ ⊗_R σ and ε(σ) = 1.
bool is_grouplike(const XHopfAlgebra& X, const SparseVec& sigma, std::string* why = nullptr);
std::vector<SparseVec> grouplikes(const XHopfAlgebra& X, const std::vector<SparseVec>& candidates);

/// Helpers shared by the complexes.
/// ambient K⊗K representative of Δ(k) for a vector k.
SparseVec coproduct(const LeftBialgebroid& B, const SparseVec& k);
/// ambient K⊗K representative of k⁻ ⊗ k⁺.
SparseVec translation(const XHopfAlgebra& X, const SparseVec& k);

}  // namespace xhc

#endif
