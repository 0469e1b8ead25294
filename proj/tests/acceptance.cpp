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

// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "oracle.hpp"
#include "xhc/instances.hpp"
#include "xhc/model.hpp"
#include "xhc/pairing.hpp"

using namespace xhc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool c, const std::string& what) {
    if (!c && ok) detail = what;
    ok = ok && c;
  }
  void need(const CheckReport& r, const std::string& what) {
    const Check* f = r.first_failure();
    need(f == nullptr, what + (f ? ": " + f->name + (f->witness.empty() ? "" : " @ " + f->witness) : ""));
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

Outcome axioms() {
  Outcome o;
  HopfData H = group_hopf_data(cyclic_group(2));
  std::vector<InstanceBundle> all{enveloping(dual_numbers()), enveloping(group_algebra(cyclic_group(2))),
                                  quantum_torus(2), quantum_torus(3), group_hopf(cyclic_group(2)),
                                  group_hopf(symmetric_group3()), sweedler(), cm_smash(H, swap_module_algebra(H))};
  for (auto& b : all) {
    o.need(check_bialgebroid(b.X.B), b.name);
    o.need(check_xhopf(b.X), b.name);
    o.need(b.report, b.name);
  }
  return o;
}

CocyclicModule complex_of(const InstanceBundle& b, const std::string& kind, std::size_t top) {
  if (kind == "coring") return coring_cocyclic(b.X, coring_from_K(b.X.B), *b.sayd, top);
  if (kind == "algebra") return algebra_cocyclic(b.X, base_module_algebra(b.X.B), *b.sayd, top);
  return simplified_cocyclic(b.X, b.sigma, *b.delta, top);
}

Outcome cocyclic_identities() {
  Outcome o;
  for (const auto& b : {quantum_torus(2), quantum_torus(3), enveloping(dual_numbers())})
    for (const char* kind : {"coring", "algebra", "simplified"}) {
      CocyclicModule cx = complex_of(b, kind, 3);
      o.need(verify_cocyclic(cx), b.name + " " + kind);
      for (std::size_t n = 0; n <= 3; ++n)
        o.need(power(cx.cyclic[n], n + 1).is_identity(), b.name + " " + kind + " t^{n+1}");
    }
  return o;
}

Outcome rho_iso() {
  Outcome o;
  InstanceBundle b = quantum_torus(2);
  SimplifiedBundle sb = simplified_base_cocyclic(b.X, b.sigma, *b.delta, 3);
  o.need(sb.report, "ρ report");
  o.need(check_cocyclic_map(sb.coring, sb.simple, sb.rho), "ρ");
  o.need(check_cocyclic_map(sb.simple, sb.coring, sb.rho_inv), "ρ⁻¹");
  for (std::size_t n = 0; n <= 3; ++n) {
    o.need(compose(sb.rho[n], sb.rho_inv[n]).is_identity(), "ρρ⁻¹ degree " + std::to_string(n));
    o.need(compose(sb.rho_inv[n], sb.rho[n]).is_identity(), "ρ⁻¹ρ degree " + std::to_string(n));
  }
  return o;
}

Outcome trivial_coefficients() {
  Outcome o;
  InstanceBundle b = group_hopf(cyclic_group(1));
  CocyclicModule s = simplified_cocyclic(b.X, b.sigma, *b.delta, 4);
  const std::vector<std::size_t> want{1, 0, 1, 0};
  auto sparse = cyclic_lambda(s, 3).dims, dense = oracle::cyclic_dims(s, 3, 1);
  o.need(sparse == want, "sparse " + join(sparse));
  o.need(dense == want, "dense " + join(dense));
  o.detail = o.ok ? join(sparse) : o.detail;
  return o;
}

Outcome collapse() {
  Outcome o;
  InstanceBundle b = builtin_instance("enveloping", {{"R", "dual"}});
  CocyclicModule s = simplified_cocyclic(b.X, b.sigma, *b.delta, 4);
  o.need(check_homotopy(s, enveloping_homotopy(b, s)), "homotopy");
  const std::vector<std::size_t> want{1, 0, 1, 0};
  auto sparse = cyclic_lambda(s, 3).dims, dense = oracle::cyclic_dims(s, 3, 1);
  o.need(sparse == want, "sparse " + join(sparse));
  o.need(dense == want, "dense " + join(dense));
  if (o.ok) o.detail = join(sparse);
  return o;
}

Outcome torus_parity() {
  Outcome o;
  std::string d;
  for (std::size_t N : {2u, 3u}) {
    InstanceBundle b = quantum_torus(N);
    CocyclicModule s = simplified_cocyclic(b.X, b.sigma, *b.delta, 4);
    const std::vector<std::size_t> want{N, 0, N, 0};
    auto sparse = cyclic_lambda(s, 3).dims, dense = oracle::cyclic_dims(s, 3, static_cast<int>(N));
    o.need(sparse == want, b.name + " sparse " + join(sparse));
    o.need(dense == want, b.name + " dense " + join(dense));
    d += b.name + " " + join(sparse) + " ";
  }
  if (o.ok) o.detail = d + "(odd degrees vanish through degree 3)";
  return o;
}

std::vector<SparseVec> lambda_products(const Pairing& P, const TotComplex& T, std::size_t p, std::size_t q) {
  std::vector<SparseVec> out;
  for (const auto& phi : lambda_basis(P.alg, p))
    for (const auto& psi : lambda_basis(P.cor, q)) out.push_back(T.inject(p, q, kron(phi, psi, P.cor.dim(q))));
  return out;
}

Outcome pairing() {
  Outcome o;
  InstanceBundle b = quantum_torus(2);
  ModuleAlgebra A = base_module_algebra(b.X.B);
  Pairing P = make_pairing(b.X, coring_from_K(b.X.B), A, action_from_module(A), *b.sayd, 3);
  o.need(P.report, "pairing");
  o.need(check_cocyclic_map(P.diag, P.stdB, P.psic), "Ψ_c exhaustive");
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = rng() % 3, i = rng() % (n + 2);
    SparseVec x = oracle::random_vec(rng, P.diag.dim(n), nullptr, 1);
    o.need(P.psic[n + 1].apply(P.diag.cofaces[n][i].apply(x)) == P.stdB.cofaces[n][i].apply(P.psic[n].apply(x)),
           "Ψ_c random coface");
    o.need(P.psic[n].apply(P.diag.cyclic[n].apply(x)) == P.stdB.cyclic[n].apply(P.psic[n].apply(x)),
           "Ψ_c random cyclic");
  }
  TotComplex T = tot_complex(P.alg, P.cor, 2);
  using PQ = std::pair<std::size_t, std::size_t>;
  std::size_t pushed = 0;
  for (auto [p, q] : {PQ{0, 0}, PQ{0, 1}, PQ{1, 0}, PQ{0, 2}}) {
    const std::size_t n = p + q;
    LinMap push = compose(P.psi[n], aw(P.alg, P.cor, p, q));
    // Tot-cocycles inside this bidegree
    auto basis = lambda_products(P, T, p, q);
    std::vector<SparseVec> raw;
    for (const auto& phi : lambda_basis(P.alg, p))
      for (const auto& psi : lambda_basis(P.cor, q)) raw.push_back(kron(phi, psi, P.cor.dim(q)));
    if (!basis.empty()) {
      LinMap Db(LinSpace(basis.size()), T.spaces[n + 1]);
      for (std::size_t j = 0; j < basis.size(); ++j) Db.set_col(j, T.D[n].apply(basis[j]));
      for (const auto& k : rank_kernel(Db).kernel) {
        SparseVec x;
        for (const auto& [j, c] : k.entries()) x.axpy(c, raw[j]);
        o.need(is_lambda_cocycle(P.stdA, n, push.apply(x)), "cocycle at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        ++pushed;
      }
    }
    // coboundaries D(y) with y of total degree n-1 land in bidegree (p,q) components
    if (n > 0) {
      LinMap pushT = compose(P.psi[n], aw_total(P.alg, P.cor, T, n));
      for (std::size_t pp = 0; pp < n; ++pp)
        for (const auto& y : lambda_products(P, T, pp, n - 1 - pp))
          o.need(is_coboundary(P.stdA, n, pushT.apply(T.D[n - 1].apply(y)), true), "coboundary in degree " + std::to_string(n));
    }
  }
  o.need(pushed > 0, "no Tot-cocycles found");
  // char_map0 at n = 0 on Q[Z/2] acting on Q ⊕ Q
  HopfData H = group_hopf_data(cyclic_group(2));
  InstanceBundle g = group_hopf(cyclic_group(2));
  HModuleAlgebra hm = swap_module_algebra(H);
  ModuleAlgebra S = make_module_algebra(g.X.B, hm.A, hm.act);
  LinMap Tr(S.A.space(), g.X.B.R.space());
  for (std::size_t a = 0; a < S.A.dim(); ++a) Tr.set_col(a, SparseVec::unit(0));
  TraceData td = check_trace(Tr, g.sigma, *g.delta, S, g.X, LinMap::identity(g.X.B.R.space()));
  CocyclicModule simple = simplified_cocyclic(g.X, g.sigma, *g.delta, 2);
  CharResult r = char_map0(g.X, td, S, simple, 0, simple.chain[0].project_vec(SparseVec::unit(0)));
  o.need(r.report, "char_map0");
  SparseVec tr;
  for (std::size_t a = 0; a < S.A.dim(); ++a) tr.axpy(Tr.col(a).at(0), SparseVec::unit(a));
  o.need(r.cochain == tr, "char_map0 degree 0 returns " + r.cochain.str());
  if (o.ok) o.detail = std::to_string(pushed) + " Tot-cocycles pushed";
  return o;
}

Outcome chi_iso() {
  Outcome o;
  HopfData H = group_hopf_data(cyclic_group(2));
  HModuleAlgebra A = swap_module_algebra(H);
  InstanceBundle cm = cm_smash(H, A), kd = kadison(H, A);
  o.need(chi(H, A, kd, cm).report, "χ");
  InstanceBundle cq = cm_smash(H, trivial_module_algebra(H)), h = group_hopf(cyclic_group(2));
  auto a = hochschild(simplified_cocyclic(cq.X, cq.sigma, *cq.delta, 4), 3).dims;
  auto c = hochschild(simplified_cocyclic(h.X, h.sigma, *h.delta, 4), 3).dims;
  o.need(a == c, "HH " + join(a) + " vs " + join(c));
  if (o.ok) o.detail = "HH " + join(a);
  return o;
}

Outcome closed_form_nu() {
  Outcome o;
  std::string witness;
  for (std::size_t N : {2u, 3u}) {
    InstanceBundle b = quantum_torus(N);
    CheckReport r = torus_closed_form_nu(b, N);
    o.need(r, b.name);
    for (const auto& c : r.items)
      if (c.info && !c.passed) witness = c.witness;
    XHopfAlgebra X = b.X;
    o.need(compose(X.nu, X.nuhat).is_identity() && compose(X.nuhat, X.nu).is_identity(), "ν∘ν̂");
  }
  o.need(!witness.empty(), "closed form never disagrees");
  if (o.ok) o.detail = "witness " + witness;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite", axioms},
      {"cocyclic identities", cocyclic_identities},
      {"rho isomorphism", rho_iso},
      {"trivial coefficients", trivial_coefficients},
      {"collapse for the enveloping algebra", collapse},
      {"torus parity pattern", torus_parity},
      {"pairing suite", pairing},
      {"chi isomorphism", chi_iso},
      {"closed-form nu regression", closed_form_nu},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << " ["
              << std::fixed << std::setprecision(2) << s << " s]" << (o.detail.empty() ? "" : " " + o.detail) << "\n";
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
