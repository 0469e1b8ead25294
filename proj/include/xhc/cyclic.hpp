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

#ifndef XHC_CYCLIC_HPP
#define XHC_CYCLIC_HPP

#include <string>
#include <vector>

#include "xhc/sayd.hpp"

namespace xhc {

/// Left K-module coring C over R. The R-bimodule structure is
/// r·c = s(r)▷c, c·r = t(r)▷c.
struct ModuleCoring {
  LinSpace C;
  LinMap Delta;             // C -> C ⊗ C
  LinMap eps;               // C -> R
  std::vector<LinMap> act;  // act[k](c) = e_k ▷ c
  Bimodule Cbim;
};

ModuleCoring make_module_coring(const LeftBialgebroid& B, LinSpace C, LinMap Delta, LinMap eps,
                                std::vector<LinMap> act);
/// C = K with left multiplication.
ModuleCoring coring_from_K(const LeftBialgebroid& B);
/// R-coring laws and K-linearity of ε and Δ.
CheckReport check_module_coring(const XHopfAlgebra& X, const ModuleCoring& C);

/// Left K-module algebra, with r·a = s(r)▷a, a·r = t(r)▷a.
struct ModuleAlgebra {
  FinAlgebra A;
  std::vector<LinMap> act;  // act[k](a) = e_k ▷ a
  Bimodule Abim;

  LinMap action_of(const SparseVec& k) const;
};

ModuleAlgebra make_module_algebra(const LeftBialgebroid& B, FinAlgebra A, std::vector<LinMap> act);
/// A = R with k ▷ r = ε(k s(r)).
ModuleAlgebra base_module_algebra(const LeftBialgebroid& B);
/// Conditions (i)-(iii) of a module algebra and the module laws.
CheckReport check_module_algebra(const XHopfAlgebra& X, const ModuleAlgebra& A);

/// Degrees 0..top. cofaces[n][i]: C^n -> C^{n+1} (0 <= i <= n+1, n < top);
/// codegen[n][i]: C^n -> C^{n-1} (0 <= i < n); cyclic[n]: C^n -> C^n.
/// For dual complexes, chain[n] is the predual quotient and every operator
/// is a transpose of a chain-level map.
struct CocyclicModule {
  std::string kind;
  bool dual = false;
  std::vector<QuotientSpace> chain;
  std::vector<LinSpace> spaces;
  std::vector<std::vector<LinMap>> cofaces;
  std::vector<std::vector<LinMap>> codegen;
  std::vector<LinMap> cyclic;
  std::vector<LinMap> theta;  // algebra complexes only

  std::size_t top() const { return spaces.size() - 1; }
  std::size_t dim(std::size_t n) const { return spaces.at(n).dim(); }
};

/// Dimension limit for intermediate tensor constructions (XHC_MAX_DIM).
std::size_t max_dim();
constexpr std::size_t kMaxDegree = 7;

CocyclicModule coring_cocyclic(const XHopfAlgebra& X, const ModuleCoring& C, const SaydModule& M,
                               std::size_t top);
CocyclicModule algebra_cocyclic(const XHopfAlgebra& X, const ModuleAlgebra& A, const SaydModule& M,
                                std::size_t top);
/// K^{⊗_R n} with the operators transported from the coring complex of
/// ^σR_δ; degree 0 is R.
CocyclicModule simplified_cocyclic(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta,
                                   std::size_t top);

struct SimplifiedBundle {
  CocyclicModule simple;
  CocyclicModule coring;
  std::vector<LinMap> rho;      // coring -> simple
  std::vector<LinMap> rho_inv;  // simple -> coring
  CheckReport report;           // inverse pair and intertwining
};
SimplifiedBundle simplified_base_cocyclic(const XHopfAlgebra& X, const SparseVec& sigma,
                                          const LinMap& delta, std::size_t top);

/// Standard cocyclic module of an algebra: C^n = dual of B^{⊗(n+1)}.
CocyclicModule algebra_standard_cocyclic(const FinAlgebra& B, std::size_t top);

/// Every cocyclic identity at every degree whose spaces are present.
CheckReport verify_cocyclic(const CocyclicModule& cx);
/// f[n]: a^n -> b^n commutes with all cofaces, codegeneracies and cyclic maps.
CheckReport check_cocyclic_map(const CocyclicModule& a, const CocyclicModule& b,
                               const std::vector<LinMap>& f);

struct CohomologyTable {
  std::string theory;
  std::vector<std::size_t> dims;
  std::vector<std::vector<SparseVec>> reps;
  std::vector<LinSpace> spaces;

  std::string csv(bool with_reps = false) const;
};

/// b_n = Σ (-1)^i d_i : C^n -> C^{n+1}.
LinMap hochschild_b(const CocyclicModule& cx, std::size_t n);
/// Basis of ker(1 - (-1)^n t_n).
std::vector<SparseVec> lambda_basis(const CocyclicModule& cx, std::size_t n);

CohomologyTable hochschild(const CocyclicModule& cx, std::size_t nmax);
CohomologyTable cyclic_lambda(const CocyclicModule& cx, std::size_t nmax);

}  // namespace xhc

#endif
