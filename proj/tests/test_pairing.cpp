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

#include "doctest.h"
#include "oracle.hpp"
#include "xhc/errors.hpp"
#include "xhc/instances.hpp"
#include "xhc/pairing.hpp"

using namespace xhc;

namespace {

struct TorusPairing {
  InstanceBundle b;
  ModuleAlgebra A;
  Pairing P;
};

const TorusPairing& torus_pairing() {
  static TorusPairing tp = [] {
    InstanceBundle b = quantum_torus(2);
    ModuleAlgebra A = base_module_algebra(b.X.B);
    Pairing P = make_pairing(b.X, coring_from_K(b.X.B), A, action_from_module(A), *b.sayd, 3);
    return TorusPairing{b, A, P};
  }();
  return tp;
}

/// φ ⊗ ψ over λ-bases of both sides, inside Tot^n.
std::vector<SparseVec> lambda_products(const Pairing& P, const TotComplex& T, std::size_t n) {
  std::vector<SparseVec> out;
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    for (const auto& phi : lambda_basis(P.alg, p))
      for (const auto& psi : lambda_basis(P.cor, q)) out.push_back(T.inject(p, q, kron(phi, psi, P.cor.dim(q))));
  }
  return out;
}

SparseVec combine(const std::vector<SparseVec>& basis, const SparseVec& coeffs) {
  SparseVec v;
  for (const auto& [i, c] : coeffs.entries()) v.axpy(c, basis[i]);
  return v;
}

}  // namespace

TEST_CASE("pairing structures on the torus") {
  const auto& tp = torus_pairing();
  INFO(tp.P.report.str());
  CHECK(tp.P.report.ok());
  CHECK(check_coring_action(tp.b.X, coring_from_K(tp.b.X.B), tp.A, action_from_module(tp.A)).ok());
  CHECK(tp.P.B.B.dim() == 2);
  CHECK(check_cocyclic_map(tp.P.diag, tp.P.stdB, tp.P.psic).ok());
}

TEST_CASE("Ψ_c intertwines operators on random inputs") {
  const auto& tp = torus_pairing();
  const Pairing& P = tp.P;
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = rng() % 3;
    SparseVec x = oracle::random_vec(rng, P.diag.dim(n), CyclotomicField::get(2), 1);
    SparseVec y = P.psic[n].apply(x);
    const std::size_t i = rng() % (n + 2);
    REQUIRE(P.psic[n + 1].apply(P.diag.cofaces[n][i].apply(x)) == P.stdB.cofaces[n][i].apply(y));
    REQUIRE(P.psic[n].apply(P.diag.cyclic[n].apply(x)) == P.stdB.cyclic[n].apply(y));
    if (n > 0) {
      const std::size_t j = rng() % n;
      REQUIRE(P.psic[n - 1].apply(P.diag.codegen[n][j].apply(x)) == P.stdB.codegen[n][j].apply(y));
    }
    // the single-pair evaluation agrees with the matrix form
    SparseVec phi = oracle::random_vec(rng, P.alg.dim(n), nullptr, 1);
    SparseVec c = oracle::random_vec(rng, P.cor.dim(n), nullptr, 1);
    REQUIRE(psi_c(P.psic, n, phi, c, P.cor.dim(n)) == P.psic[n].apply(kron(phi, c, P.cor.dim(n))));
  }
}

TEST_CASE("AW is a chain map from Tot to the diagonal") {
  const Pairing& P = torus_pairing().P;
  TotComplex T = tot_complex(P.alg, P.cor, 2);
  for (std::size_t n = 0; n < 2; ++n) {
    LinMap lhs = compose(aw_total(P.alg, P.cor, T, n + 1), T.D[n]);
    LinMap rhs = compose(hochschild_b(P.diag, n), aw_total(P.alg, P.cor, T, n));
    CHECK(lhs == rhs);
    CHECK(compose(T.D[n + 1], T.D[n]).is_zero());
  }
}

TEST_CASE("Tot cocycles go to cyclic cocycles and coboundaries to coboundaries") {
  const Pairing& P = torus_pairing().P;
  TotComplex T = tot_complex(P.alg, P.cor, 2);
  std::size_t cocycles = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    auto basis = lambda_products(P, T, n);
    if (basis.empty()) continue;
    LinMap Db(LinSpace(basis.size()), T.spaces[n + 1]);
    for (std::size_t j = 0; j < basis.size(); ++j) Db.set_col(j, T.D[n].apply(basis[j]));
    LinMap push = compose(P.psi[n], aw_total(P.alg, P.cor, T, n));
    for (const auto& k : rank_kernel(Db).kernel) {
      SparseVec out = push.apply(combine(basis, k));
      CHECK(is_lambda_cocycle(P.stdA, n, out));
      ++cocycles;
    }
    if (n + 1 <= 2) {
      LinMap push1 = compose(P.psi[n + 1], aw_total(P.alg, P.cor, T, n + 1));
      for (const auto& x : basis) {
        SparseVec out = push1.apply(T.D[n].apply(x));
        CHECK(is_coboundary(P.stdA, n + 1, out, true));
      }
    }
  }
  CHECK(cocycles > 0);
}

TEST_CASE("cup at the listed bidegrees") {
  const Pairing& P = torus_pairing().P;
  using PQ = std::pair<std::size_t, std::size_t>;
  for (auto [p, q] : {PQ{0, 0}, PQ{0, 1}, PQ{1, 0}, PQ{0, 2}}) {
    for (const auto& phi : lambda_basis(P.alg, p)) {
      if (!is_lambda_cocycle(P.alg, p, phi)) continue;
      for (const auto& psi : lambda_basis(P.cor, q)) {
        if (!is_lambda_cocycle(P.cor, q, psi)) continue;
        CupResult r = cup(P, p, phi, q, psi);
        INFO(p << "," << q << "\n" << r.report.str());
        CHECK(r.report.ok());
      }
      // coboundary on the coring side
      if (q > 0)
        for (const auto& y : lambda_basis(P.cor, q - 1)) {
          SparseVec by = hochschild_b(P.cor, q - 1).apply(y);
          if (by.empty()) continue;
          CupResult r = cup(P, p, phi, q, by);
          CHECK(is_coboundary(P.stdA, p + q, r.cochain, true));
        }
    }
  }
  // non-cocycles are refused
  for (const auto& psi : lambda_basis(P.cor, 1))
    if (!hochschild_b(P.cor, 1).apply(psi).empty()) {
      CHECK_THROWS_AS(cup(P, 0, lambda_basis(P.alg, 0).front(), 1, psi), NotCocycleError);
      break;
    }
}

TEST_CASE("characteristic map on Q[Z/2] acting on Q ⊕ Q") {
  HopfData H = group_hopf_data(cyclic_group(2));
  InstanceBundle b = group_hopf(cyclic_group(2));
  HModuleAlgebra hm = swap_module_algebra(H);
  ModuleAlgebra A = make_module_algebra(b.X.B, hm.A, hm.act);
  CHECK(check_module_algebra(b.X, A).ok());
  LinMap Tr(A.A.space(), b.X.B.R.space());
  for (std::size_t a = 0; a < A.A.dim(); ++a) Tr.set_col(a, SparseVec::unit(0));
  LinMap omega = LinMap::identity(b.X.B.R.space());
  TraceData T = check_trace(Tr, b.sigma, *b.delta, A, b.X, omega);
  SimplifiedBundle sb = simplified_base_cocyclic(b.X, b.sigma, *b.delta, 3);
  Pairing P = make_pairing(b.X, coring_from_K(b.X.B), A, action_from_module(A), *b.sayd, 3);
  CHECK(P.report.ok());

  // degree 0 returns the trace itself
  CharResult r0 = char_map0(b.X, T, A, sb.simple, 0, sb.simple.chain[0].project_vec(SparseVec::unit(0)));
  CHECK(r0.report.ok());
  CHECK(r0.cochain == SparseVec::unit(0) + SparseVec::unit(1));

  // agreement with the cup of the trace cochain, and coboundaries to coboundaries
  SparseVec phi = trace_cochain(T, A, P.alg);
  for (std::size_t n = 0; n < 3; ++n)
    for (const auto& k : lambda_basis(sb.simple, n)) {
      if (!is_lambda_cocycle(sb.simple, n, k)) continue;
      CharResult r = char_map0(b.X, T, A, sb.simple, n, k);
      CHECK(r.report.ok());
      CHECK(r.cochain == cup(P, 0, phi, n, sb.rho_inv[n].apply(k)).cochain);
    }
  for (const auto& y : lambda_basis(sb.simple, 1)) {
    SparseVec by = hochschild_b(sb.simple, 1).apply(y);
    if (by.empty()) continue;
    CharResult r = char_map0(b.X, T, A, sb.simple, 2, by);
    CHECK(is_coboundary(P.stdA, 2, r.cochain, true));
  }
  // a functional that is not a σ-trace is refused
  LinMap bad(A.A.space(), b.X.B.R.space());
  bad.set_col(0, SparseVec::unit(0));
  CHECK_THROWS_AS(check_trace(bad, b.sigma, *b.delta, A, b.X, omega), TraceError);
}

TEST_CASE("no nonzero δ-trace on the torus base algebra") {
  // Tr(k▷a) = δ(s(Tr(a))k) at k = UV, a = 1 forces Tr(1) = 0, hence Tr = 0 on R
  InstanceBundle b = quantum_torus(2);
  ModuleAlgebra A = base_module_algebra(b.X.B);
  LinMap Tr = LinMap::identity(b.X.B.R.space());
  CheckReport r = trace_report(b.X, A, Tr, b.sigma, *b.delta);
  CHECK_FALSE(r.ok());
  LinMap zero = LinMap::zero(b.X.B.R.space(), b.X.B.R.space());
  CHECK(trace_report(b.X, A, zero, b.sigma, *b.delta).ok());
}
