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

#ifndef XHC_PAIRING_HPP
#define XHC_PAIRING_HPP

#include <vector>

#include "xhc/cyclic.hpp"

namespace xhc {

/// Left action of a module coring C on a module algebra A.
struct CoringAction {
  std::vector<LinMap> act;  // act[c](a) = e_c ▷ a
};

/// C = K acting through the module-algebra action.
CoringAction action_from_module(const ModuleAlgebra& A);
/// (kc)a = k(ca), c(ab) = (c₍₁₎a)(c₍₂₎b), c▷1 = ε(c)▷1 on basis elements.
CheckReport check_coring_action(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                                const CoringAction& action);

/// Maps C -> A that are K-linear and R-linear, with the convolution
/// product. A map f is stored flat: index c * dim A + a holds the
/// coefficient of e_a in f(e_c).
struct ConvolutionAlgebra {
  FinAlgebra B;
  std::vector<SparseVec> maps;  // basis of B as flat maps
  LinSpace hom;                 // flat Hom(C, A)
  std::size_t dimC = 0, dimA = 0;
  CheckReport report;

  /// f(c) for basis element f of B.
  SparseVec eval(std::size_t f, std::size_t c) const;
  /// Coordinates in B of a flat map; throws AxiomError outside B.
  SparseVec coords(const SparseVec& flat) const;
};

ConvolutionAlgebra convolution_algebra(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                                       const CoringAction& action);

/// λ(a)(c) = c▷a as a map A -> B, with multiplicativity and unit checks.
struct LambdaMap {
  LinMap lambda;
  CheckReport report;
};
LambdaMap lambda_map(const ConvolutionAlgebra& B, const ModuleAlgebra& A, const CoringAction& action);
/// Precomposition with λ^{⊗(n+1)}: C^n(B) -> C^n(A), degrees 0..top.
std::vector<LinMap> lambda_pullback(const LinMap& lambda, std::size_t top);

/// Diagonal cocyclic module: degree n is alg^n ⊗ cor^n, operators act
/// factorwise.
CocyclicModule diagonal(const CocyclicModule& alg, const CocyclicModule& cor);

/// psi[n]: alg^n ⊗ cor^n -> C^n(B), φ ⊠ (m ⊗ c₀ ⊗ ... ⊗ cₙ) ↦
/// (f₀ ⊗ ... ⊗ fₙ ↦ φ(m ⊗ f₀(c₀) ⊗ ... ⊗ fₙ(cₙ))). Relations of the coring
/// quotient are checked to vanish (WellDefinednessError).
std::vector<LinMap> psi_c(const CocyclicModule& alg, const CocyclicModule& cor, const ConvolutionAlgebra& B,
                          std::size_t top);
/// Single evaluation of psi_c on a pair.
SparseVec psi_c(const std::vector<LinMap>& psi, std::size_t n, const SparseVec& phi, const SparseVec& chain,
                std::size_t cor_dim);

/// Tot^n = ⊕_{p+q=n} alg^p ⊗ cor^q with D = b ⊗ 1 + (-1)^p 1 ⊗ b.
struct TotComplex {
  std::vector<LinSpace> spaces;
  std::vector<std::vector<std::size_t>> offset;  // offset[n][p]
  std::vector<LinMap> D;                         // D[n]: Tot^n -> Tot^{n+1}

  /// Embeds a (p,q) component.
  SparseVec inject(std::size_t p, std::size_t q, const SparseVec& x) const;
};
TotComplex tot_complex(const CocyclicModule& alg, const CocyclicModule& cor, std::size_t nmax);

/// AW_{p,q}: alg^p ⊗ cor^q -> alg^n ⊗ cor^n, last coface q times on the
/// algebra side and d_0 p times on the coring side.
LinMap aw(const CocyclicModule& alg, const CocyclicModule& cor, std::size_t p, std::size_t q);
/// AW summed over the components of Tot^n.
LinMap aw_total(const CocyclicModule& alg, const CocyclicModule& cor, const TotComplex& T, std::size_t n);

/// Everything needed to push diagonal cochains to cochains on A.
struct Pairing {
  CocyclicModule alg, cor, diag, stdB, stdA;
  ConvolutionAlgebra B;
  LambdaMap lambda;
  std::vector<LinMap> psic;  // diag -> stdB
  std::vector<LinMap> lam;   // stdB -> stdA
  std::vector<LinMap> psi;   // diag -> stdA
  CheckReport report;

  std::size_t top() const { return diag.top(); }
};
/// Builds both complexes to degree top, B, λ, Ψ_c and Ψ = λ* ∘ Ψ_c, and
/// checks that Ψ_c and λ* are cocyclic maps.
Pairing make_pairing(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                     const CoringAction& action, const SaydModule& M, std::size_t top);

/// Ψ(AW(φ ⊗ ψ)) for λ-cocycles φ (degree p) and ψ (degree q). Throws
/// NotCocycleError on inputs; the report records b-closure and λ-invariance
/// of the output.
struct CupResult {
  SparseVec cochain;
  CheckReport report;
};
CupResult cup(const Pairing& P, std::size_t p, const SparseVec& phi, std::size_t q, const SparseVec& psi);

/// σ-trace and δ-trace data. omega: R -> scalars turns R-valued
/// expressions into numbers.
struct TraceData {
  LinMap Tr;  // A -> R
  SparseVec sigma;
  LinMap delta;
  LinMap omega;
  CheckReport report;
};
/// Both trace laws and the unital R-variant, exhaustively on basis elements.
CheckReport trace_report(const XHopfAlgebra& X, const ModuleAlgebra& A, const LinMap& Tr, const SparseVec& sigma,
                         const LinMap& delta);
/// trace_report, throwing TraceError with the first failure.
TraceData check_trace(const LinMap& Tr, const SparseVec& sigma, const LinMap& delta, const ModuleAlgebra& A,
                      const XHopfAlgebra& X, const LinMap& omega);

/// (a₀, ..., aₙ) ↦ ω(Tr(a₀ (k₁▷a₁) ⋯ (kₙ▷aₙ))) for k in degree n of the
/// simplified complex; degree 0 uses ω(Tr(s(r)▷a₀)). Verifies the input is
/// a λ-cocycle and the output is b-closed and λ-invariant.
struct CharResult {
  SparseVec cochain;  // in degree n of algebra_standard_cocyclic(A)
  CheckReport report;
};
CharResult char_map0(const XHopfAlgebra& X, const TraceData& T, const ModuleAlgebra& A,
                     const CocyclicModule& simple, std::size_t n, const SparseVec& cocycle);

/// Functional on R ⊗_K A in degree 0 of an algebra complex with M = R:
/// r ⊗ a ↦ ω(Tr(s(r)▷a)).
SparseVec trace_cochain(const TraceData& T, const ModuleAlgebra& A, const CocyclicModule& alg);

/// True when v lies in b(C^{n-1}), restricted to λ-cochains when cyclic.
bool is_coboundary(const CocyclicModule& cx, std::size_t n, const SparseVec& v, bool cyclic);
/// b-closed and t-invariant up to the sign (-1)^n.
bool is_lambda_cocycle(const CocyclicModule& cx, std::size_t n, const SparseVec& v);

}  // namespace xhc

#endif
