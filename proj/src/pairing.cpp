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

#include "xhc/pairing.hpp"

#include <algorithm>

#include "xhc/errors.hpp"
#include "xhc/tensor.hpp"

namespace xhc {

namespace {

SparseVec act_on(const std::vector<LinMap>& act, const SparseVec& c, const SparseVec& a) {
  Accumulator acc;
  for (const auto& [i, x] : c.entries()) acc.add(act[i].apply(a), x);
  return acc.finish();
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// mixed radix, last digit fastest
std::vector<std::size_t> digits_of(std::size_t idx, std::size_t base, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (std::size_t j = len; j-- > 0;) {
    d[j] = idx % base;
    idx /= base;
  }
  return d;
}

void guard(std::size_t dim, const std::string& what) {
  if (dim > max_dim())
    throw DegreeError(what + " needs dimension " + std::to_string(dim) + " (limit " + std::to_string(max_dim()) +
                      ", XHC_MAX_DIM)");
}

std::string pair_label(const LinSpace& a, std::size_t i, const LinSpace& b, std::size_t j) {
  return "(" + a.label(i) + ", " + b.label(j) + ")";
}

LinMap tensor_power(const LinMap& m, std::size_t k) {
  LinMap out = m;
  for (std::size_t i = 1; i < k; ++i) out = kron(out, m);
  return out;
}

std::string sign_name(std::size_t n) { return n % 2 == 0 ? "t φ = φ" : "t φ = -φ"; }

}  // namespace

// ------------------------------------------------------------ coring action

CoringAction action_from_module(const ModuleAlgebra& A) { return CoringAction{A.act}; }

CheckReport check_coring_action(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                                const CoringAction& action) {
  CheckReport rep;
  const FinAlgebra& Al = A.A;
  const std::size_t dc = C.C.dim(), da = Al.dim(), dk = X.B.dimK();
  if (action.act.size() != dc) throw ShapeError("coring action needs one operator per basis of C");
  std::string w1, w2, w3;
  for (std::size_t k = 0; k < dk && w1.empty(); ++k)
    for (std::size_t c = 0; c < dc && w1.empty(); ++c)
      for (std::size_t a = 0; a < da && w1.empty(); ++a) {
        SparseVec lhs = act_on(action.act, C.act[k].col(c), SparseVec::unit(a));
        SparseVec rhs = A.act[k].apply(action.act[c].col(a));
        if (lhs != rhs) w1 = X.B.K.space().label(k) + ", " + C.C.label(c) + ", " + Al.space().label(a);
      }
  rep.add("(kc)a = k(ca)", w1.empty(), w1);
  for (std::size_t c = 0; c < dc && w2.empty(); ++c) {
    const SparseVec& dl = C.Delta.col(c);
    for (std::size_t a = 0; a < da && w2.empty(); ++a)
      for (std::size_t b = 0; b < da && w2.empty(); ++b) {
        SparseVec lhs = action.act[c].apply(Al.mul_basis(a, b));
        Accumulator acc;
        for (const auto& [i, x] : dl.entries())
          acc.add(Al.mul(action.act[i / dc].col(a), action.act[i % dc].col(b)), x);
        if (lhs != acc.finish()) w2 = C.C.label(c) + ", " + Al.space().label(a) + ", " + Al.space().label(b);
      }
  }
  rep.add("c(ab) = (c₍₁₎a)(c₍₂₎b)", w2.empty(), w2);
  for (std::size_t c = 0; c < dc && w3.empty(); ++c) {
    SparseVec rhs = act_on(A.Abim.left, C.eps.col(c), Al.unit());
    if (action.act[c].apply(Al.unit()) != rhs) w3 = C.C.label(c);
  }
  rep.add("c▷1 = ε(c)▷1", w3.empty(), w3);
  return rep;
}

// ------------------------------------------------------------ convolution

SparseVec ConvolutionAlgebra::eval(std::size_t f, std::size_t c) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, x] : maps[f].entries())
    if (i / dimA == c) out.emplace_back(i % dimA, x);
  return SparseVec::from_unsorted(std::move(out));
}

SparseVec ConvolutionAlgebra::coords(const SparseVec& flat) const {
  SparseVec co;
  if (!solve_in_span(maps, flat, &co)) throw AxiomError("map is not in the convolution algebra: " + flat.str(&hom));
  return co;
}

ConvolutionAlgebra convolution_algebra(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                                       const CoringAction& action) {
  ConvolutionAlgebra cv;
  CheckReport ca = check_coring_action(X, C, A, action);
  cv.report.merge(ca, "action: ");
  if (!ca.ok()) throw AxiomError("coring action: " + ca.first_failure()->name + " at " + ca.first_failure()->witness);
  const FinAlgebra& Al = A.A;
  const std::size_t dc = C.C.dim(), da = Al.dim(), dk = X.B.dimK(), dr = X.B.dimR();
  cv.dimC = dc;
  cv.dimA = da;
  std::vector<std::string> hl;
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t a = 0; a < da; ++a) hl.push_back(C.C.label(c) + "↦" + Al.space().label(a));
  cv.hom = LinSpace(hl);
  // f(op_C c) = op_A f(c) for the K-action and both R-actions
  std::vector<std::pair<const LinMap*, const LinMap*>> ops;
  for (std::size_t k = 0; k < dk; ++k) ops.emplace_back(&C.act[k], &A.act[k]);
  for (std::size_t r = 0; r < dr; ++r) {
    ops.emplace_back(&C.Cbim.left[r], &A.Abim.left[r]);
    ops.emplace_back(&C.Cbim.right[r], &A.Abim.right[r]);
  }
  LinMap cons(cv.hom, LinSpace(ops.size() * dc * da));
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t a = 0; a < da; ++a) {
      Accumulator acc;
      for (std::size_t o = 0; o < ops.size(); ++o) {
        const LinMap& oc = *ops[o].first;
        const LinMap& oa = *ops[o].second;
        for (std::size_t c2 = 0; c2 < dc; ++c2) {
          Scalar x = oc.col(c2).at(c);
          if (!x.is_zero()) acc.add((o * dc + c2) * da + a, x);
        }
        for (const auto& [a2, y] : oa.col(a).entries()) acc.add((o * dc + c) * da + a2, -y);
      }
      cons.set_col(c * da + a, acc.finish());
    }
  cv.maps = rank_kernel(cons).kernel;
  if (cv.maps.empty()) throw EmptyAlgebraError("Hom_K(C, A) is zero");
  const std::size_t db = cv.maps.size();
  auto flat_eval = [&](const SparseVec& f, const SparseVec& c) {
    Accumulator acc;
    for (const auto& [i, x] : f.entries())
      if (Scalar y = c.at(i / da); !y.is_zero()) acc.add(i % da, x * y);
    return acc.finish();
  };
  std::vector<SparseVec> table(db * db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      Accumulator acc;
      for (std::size_t c = 0; c < dc; ++c)
        for (const auto& [t, x] : C.Delta.col(c).entries()) {
          SparseVec v = Al.mul(flat_eval(cv.maps[i], SparseVec::unit(t / dc)), flat_eval(cv.maps[j], SparseVec::unit(t % dc)));
          for (const auto& [a, y] : v.entries()) acc.add(c * da + a, x * y);
        }
      table[i * db + j] = cv.coords(acc.finish());
    }
  Accumulator ua;
  for (std::size_t c = 0; c < dc; ++c) {
    SparseVec e = act_on(A.Abim.left, C.eps.col(c), Al.unit());
    for (const auto& [a, y] : e.entries()) ua.add(c * da + a, y);
  }
  SparseVec unit = cv.coords(ua.finish());
  std::string bw;
  for (std::size_t i = 0; i < db && bw.empty(); ++i)
    for (std::size_t j = 0; j < db && bw.empty(); ++j)
      for (std::size_t r = 0; r < dr && bw.empty(); ++r)
        for (std::size_t c = 0; c < dc && bw.empty(); ++c)
          for (std::size_t c2 = 0; c2 < dc && bw.empty(); ++c2) {
            SparseVec lhs = Al.mul(flat_eval(cv.maps[i], C.Cbim.right[r].col(c)), flat_eval(cv.maps[j], SparseVec::unit(c2)));
            SparseVec rhs = Al.mul(flat_eval(cv.maps[i], SparseVec::unit(c)), flat_eval(cv.maps[j], C.Cbim.left[r].col(c2)));
            if (lhs != rhs) bw = "f" + std::to_string(i) + ", f" + std::to_string(j) + " at " + C.C.label(c) + " ⊗ " + C.C.label(c2);
          }
  cv.report.add("convolution is balanced over R", bw.empty(), bw);
  cv.B = make_algebra(LinSpace(db, "f"), std::move(table), std::move(unit));
  cv.report.merge(check_algebra(cv.B), "B: ");
  return cv;
}

LambdaMap lambda_map(const ConvolutionAlgebra& B, const ModuleAlgebra& A, const CoringAction& action) {
  LambdaMap lm;
  const std::size_t da = A.A.dim();
  lm.lambda = LinMap(A.A.space(), B.B.space());
  for (std::size_t a = 0; a < da; ++a) {
    Accumulator acc;
    for (std::size_t c = 0; c < B.dimC; ++c)
      for (const auto& [a2, y] : action.act[c].col(a).entries()) acc.add(c * da + a2, y);
    lm.lambda.set_col(a, B.coords(acc.finish()));
  }
  lm.report.merge(check_algebra_hom(lm.lambda, A.A, B.B), "λ: ");
  return lm;
}

std::vector<LinMap> lambda_pullback(const LinMap& lambda, std::size_t top) {
  std::vector<LinMap> out;
  for (std::size_t n = 0; n <= top; ++n) out.push_back(tensor_power(lambda, n + 1).transpose());
  return out;
}

// ------------------------------------------------------------ diagonal, Ψ_c

CocyclicModule diagonal(const CocyclicModule& alg, const CocyclicModule& cor) {
  CocyclicModule d;
  d.kind = "diagonal";
  d.dual = true;
  const std::size_t top = std::min(alg.top(), cor.top());
  for (std::size_t n = 0; n <= top; ++n) {
    guard(alg.dim(n) * cor.dim(n), "diagonal degree " + std::to_string(n));
    d.spaces.push_back(LinSpace::product({alg.spaces[n], cor.spaces[n]}));
    d.chain.push_back(trivial_quotient(d.spaces.back()));
  }
  d.cofaces.resize(top + 1);
  d.codegen.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    if (n < top)
      for (std::size_t i = 0; i <= n + 1; ++i) d.cofaces[n].push_back(kron(alg.cofaces[n][i], cor.cofaces[n][i]));
    for (std::size_t i = 0; i < n; ++i) d.codegen[n].push_back(kron(alg.codegen[n][i], cor.codegen[n][i]));
    d.cyclic.push_back(kron(alg.cyclic[n], cor.cyclic[n]));
  }
  return d;
}

std::vector<LinMap> psi_c(const CocyclicModule& alg, const CocyclicModule& cor, const ConvolutionAlgebra& B,
                          std::size_t top) {
  if (top > alg.top() || top > cor.top()) throw DegreeError("psi_c beyond the complexes");
  const std::size_t db = B.B.dim();
  std::vector<LinMap> out;
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Qa = alg.chain[n];
    const QuotientSpace& Qc = cor.chain[n];
    const std::size_t na = Qa.dim(), nc = Qc.dim(), nt = ipow(db, n + 1);
    guard(nt * na, "psi_c degree " + std::to_string(n));
    auto adims = Qa.ambient.radix();
    // G: coring ambient -> (tuple, algebra quotient)
    LinMap G(Qc.ambient, LinSpace(nt * na));
    for (std::size_t y = 0; y < Qc.ambient.dim(); ++y) {
      auto d = Qc.ambient.decode(y);
      Accumulator acc;
      for (std::size_t tup = 0; tup < nt; ++tup) {
        auto f = digits_of(tup, db, n + 1);
        std::vector<SparseVec> parts{SparseVec::unit(d[0])};
        bool zero = false;
        for (std::size_t j = 0; j <= n && !zero; ++j) {
          parts.push_back(B.eval(f[j], d[j + 1]));
          zero = parts.back().empty();
        }
        if (zero) continue;
        SparseVec w = Qa.project.apply(kron_all(parts, adims));
        for (const auto& [p, x] : w.entries()) acc.add(tup * na + p, x);
      }
      G.set_col(y, acc.finish());
    }
    for (const auto& r : Qc.relation_span())
      if (!G.apply(r).empty())
        throw WellDefinednessError("psi_c degree " + std::to_string(n) + ": relation " + r.str(&Qc.ambient) +
                                   " does not vanish");
    LinSpace tgt = LinSpace::product(std::vector<LinSpace>(n + 1, B.B.space()));
    std::vector<Accumulator> cols(na * nc);
    for (std::size_t q = 0; q < nc; ++q) {
      SparseVec g = G.apply(Qc.section.col(q));
      for (const auto& [i, x] : g.entries()) cols[(i % na) * nc + q].add(i / na, x);
    }
    LinMap psi(LinSpace::product({alg.spaces[n], cor.spaces[n]}), tgt);
    for (std::size_t j = 0; j < cols.size(); ++j) psi.set_col(j, cols[j].finish());
    out.push_back(std::move(psi));
  }
  return out;
}

SparseVec psi_c(const std::vector<LinMap>& psi, std::size_t n, const SparseVec& phi, const SparseVec& chain,
                std::size_t cor_dim) {
  return psi.at(n).apply(kron(phi, chain, cor_dim));
}

// ------------------------------------------------------------ Tot and AW

SparseVec TotComplex::inject(std::size_t p, std::size_t q, const SparseVec& x) const {
  const std::size_t n = p + q, off = offset.at(n).at(p);
  std::vector<SparseVec::Entry> e;
  for (const auto& [i, c] : x.entries()) e.emplace_back(i + off, c);
  return SparseVec::from_unsorted(std::move(e));
}

TotComplex tot_complex(const CocyclicModule& alg, const CocyclicModule& cor, std::size_t nmax) {
  if (nmax + 1 > alg.top() || nmax + 1 > cor.top()) throw DegreeError("tot_complex needs degree " + std::to_string(nmax + 1));
  TotComplex T;
  for (std::size_t n = 0; n <= nmax + 1; ++n) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      off.push_back(total);
      total += alg.dim(p) * cor.dim(n - p);
    }
    guard(total, "Tot degree " + std::to_string(n));
    T.offset.push_back(off);
    T.spaces.emplace_back(total, "x");
  }
  std::vector<LinMap> ba, bc;
  for (std::size_t n = 0; n <= nmax; ++n) {
    ba.push_back(hochschild_b(alg, n));
    bc.push_back(hochschild_b(cor, n));
  }
  for (std::size_t n = 0; n <= nmax; ++n) {
    LinMap D(T.spaces[n], T.spaces[n + 1]);
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p, dq = cor.dim(q), dq1 = cor.dim(q + 1);
      const Scalar sg(p % 2 == 0 ? 1 : -1);
      for (std::size_t x = 0; x < alg.dim(p); ++x)
        for (std::size_t y = 0; y < dq; ++y) {
          SparseVec v = T.inject(p + 1, q, kron(ba[p].col(x), SparseVec::unit(y), dq));
          v.axpy(sg, T.inject(p, q + 1, kron(SparseVec::unit(x), bc[q].col(y), dq1)));
          D.set_col(T.offset[n][p] + x * dq + y, std::move(v));
        }
    }
    T.D.push_back(std::move(D));
  }
  return T;
}

LinMap aw(const CocyclicModule& alg, const CocyclicModule& cor, std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (n > alg.top() || n > cor.top()) throw DegreeError("aw beyond the complexes");
  LinMap a = LinMap::identity(alg.spaces[p]);
  for (std::size_t m = p; m < n; ++m) a = compose(alg.cofaces[m][m + 1], a);
  LinMap c = LinMap::identity(cor.spaces[q]);
  for (std::size_t m = q; m < n; ++m) c = compose(cor.cofaces[m][0], c);
  return kron(a, c);
}

LinMap aw_total(const CocyclicModule& alg, const CocyclicModule& cor, const TotComplex& T, std::size_t n) {
  LinMap out(T.spaces.at(n), LinSpace::product({alg.spaces[n], cor.spaces[n]}));
  for (std::size_t p = 0; p <= n; ++p) {
    LinMap m = aw(alg, cor, p, n - p);
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(T.offset[n][p] + j, m.col(j));
  }
  return out;
}

// ------------------------------------------------------------ pairing

Pairing make_pairing(const XHopfAlgebra& X, const ModuleCoring& C, const ModuleAlgebra& A,
                     const CoringAction& action, const SaydModule& M, std::size_t top) {
  Pairing P;
  P.alg = algebra_cocyclic(X, A, M, top);
  P.cor = coring_cocyclic(X, C, M, top);
  P.diag = diagonal(P.alg, P.cor);
  P.B = convolution_algebra(X, C, A, action);
  P.report.merge(P.B.report);
  P.lambda = lambda_map(P.B, A, action);
  P.report.merge(P.lambda.report);
  P.stdB = algebra_standard_cocyclic(P.B.B, top);
  P.stdA = algebra_standard_cocyclic(A.A, top);
  P.psic = psi_c(P.alg, P.cor, P.B, top);
  P.report.merge(check_cocyclic_map(P.diag, P.stdB, P.psic), "Ψ_c: ");
  P.lam = lambda_pullback(P.lambda.lambda, top);
  P.report.merge(check_cocyclic_map(P.stdB, P.stdA, P.lam), "λ*: ");
  for (std::size_t n = 0; n <= top; ++n) P.psi.push_back(compose(P.lam[n], P.psic[n]));
  return P;
}

bool is_lambda_cocycle(const CocyclicModule& cx, std::size_t n, const SparseVec& v) {
  SparseVec tv = cx.cyclic.at(n).apply(v);
  if (tv != (n % 2 == 0 ? v : v.scaled(Scalar(-1)))) return false;
  return hochschild_b(cx, n).apply(v).empty();
}

bool is_coboundary(const CocyclicModule& cx, std::size_t n, const SparseVec& v, bool cyclic) {
  if (n == 0) return v.empty();
  LinMap b = hochschild_b(cx, n - 1);
  Echelon e;
  if (cyclic) {
    for (const auto& x : lambda_basis(cx, n - 1)) e.insert(b.apply(x));
  } else {
    for (const auto& c : b.columns()) e.insert(c);
  }
  return e.contains(v);
}

CupResult cup(const Pairing& P, std::size_t p, const SparseVec& phi, std::size_t q, const SparseVec& psi) {
  const std::size_t n = p + q;
  if (n + 1 > P.top()) throw DegreeError("cup needs degree " + std::to_string(n + 1));
  if (!is_lambda_cocycle(P.alg, p, phi)) throw NotCocycleError("algebra-side input is not a λ-cocycle");
  if (!is_lambda_cocycle(P.cor, q, psi)) throw NotCocycleError("coring-side input is not a λ-cocycle");
  CupResult r;
  r.cochain = P.psi[n].apply(aw(P.alg, P.cor, p, q).apply(kron(phi, psi, P.cor.dim(q))));
  r.report.add("cup output is b-closed", hochschild_b(P.stdA, n).apply(r.cochain).empty());
  r.report.add("cup output satisfies " + sign_name(n), is_lambda_cocycle(P.stdA, n, r.cochain));
  return r;
}

// ------------------------------------------------------------ traces

CheckReport trace_report(const XHopfAlgebra& X, const ModuleAlgebra& A, const LinMap& Tr, const SparseVec& sigma,
                         const LinMap& delta) {
  CheckReport rep;
  const FinAlgebra& Al = A.A;
  const FinAlgebra& K = X.B.K;
  const LinSpace& AS = Al.space();
  const std::size_t da = Al.dim(), dk = K.dim(), dr = X.B.dimR();
  LinMap sg = A.action_of(sigma);
  std::string w1, w2, w3;
  for (std::size_t a = 0; a < da && w1.empty(); ++a)
    for (std::size_t b = 0; b < da && w1.empty(); ++b)
      if (Tr.apply(Al.mul_basis(a, b)) != Tr.apply(Al.mul(SparseVec::unit(b), sg.col(a)))) w1 = pair_label(AS, a, AS, b);
  rep.add("σ-trace law Tr(a₁a₂) = Tr(a₂(σ▷a₁))", w1.empty(), w1);
  for (std::size_t k = 0; k < dk && w2.empty(); ++k)
    for (std::size_t a = 0; a < da && w2.empty(); ++a) {
      SparseVec lhs = Tr.apply(A.act[k].col(a));
      SparseVec rhs = delta.apply(K.mul(X.B.s.apply(Tr.col(a)), SparseVec::unit(k)));
      if (lhs != rhs) w2 = pair_label(K.space(), k, AS, a);
    }
  rep.add("δ-trace law Tr(k▷a) = δ(s(Tr(a))k)", w2.empty(), w2);
  for (std::size_t r = 0; r < dr && w3.empty(); ++r) {
    LinMap sr = A.action_of(X.B.s.col(r));
    LinMap srs = A.action_of(K.mul(X.B.s.col(r), sigma));
    for (std::size_t a = 0; a < da && w3.empty(); ++a)
      for (std::size_t b = 0; b < da && w3.empty(); ++b)
        if (Tr.apply(sr.apply(Al.mul_basis(a, b))) != Tr.apply(Al.mul(SparseVec::unit(b), srs.col(a))))
          w3 = X.B.R.space().label(r) + ", " + pair_label(AS, a, AS, b);
  }
  rep.add("Tr(s(r)▷(a₁a₂)) = Tr(a₂(s(r)σ▷a₁))", w3.empty(), w3);
  return rep;
}

TraceData check_trace(const LinMap& Tr, const SparseVec& sigma, const LinMap& delta, const ModuleAlgebra& A,
                      const XHopfAlgebra& X, const LinMap& omega) {
  TraceData T{Tr, sigma, delta, omega, trace_report(X, A, Tr, sigma, delta)};
  if (const Check* f = T.report.first_failure()) throw TraceError(f->name + " fails at " + f->witness);
  return T;
}

// ------------------------------------------------------------ characteristic map

CharResult char_map0(const XHopfAlgebra& X, const TraceData& T, const ModuleAlgebra& A,
                     const CocyclicModule& simple, std::size_t n, const SparseVec& cocycle) {
  if (const Check* f = T.report.first_failure()) throw TraceError(f->name + " fails at " + f->witness);
  if (n + 1 > simple.top()) throw DegreeError("char_map0 needs degree " + std::to_string(n + 1));
  if (!is_lambda_cocycle(simple, n, cocycle)) throw NotCocycleError("input is not a λ-cocycle of the simplified complex");
  const FinAlgebra& Al = A.A;
  const std::size_t da = Al.dim(), nt = ipow(da, n + 1);
  guard(nt, "char_map0 degree " + std::to_string(n));
  const QuotientSpace& Q = simple.chain[n];
  LinSpace tgt = LinSpace::product(std::vector<LinSpace>(n + 1, Al.space()));
  auto value = [&](const SparseVec& a) { return T.omega.apply(T.Tr.apply(a)).at(0); };
  LinMap Phi(Q.ambient, tgt);
  for (std::size_t y = 0; y < Q.ambient.dim(); ++y) {
    auto k = Q.ambient.decode(y);
    Accumulator acc;
    for (std::size_t tup = 0; tup < nt; ++tup) {
      auto a = digits_of(tup, da, n + 1);
      SparseVec prod;
      if (n == 0) {
        prod = A.action_of(X.B.s.col(k[0])).col(a[0]);
      } else {
        prod = SparseVec::unit(a[0]);
        for (std::size_t j = 1; j <= n && !prod.empty(); ++j) prod = Al.mul(prod, A.act[k[j - 1]].col(a[j]));
      }
      if (Scalar v = value(prod); !v.is_zero()) acc.add(tup, v);
    }
    Phi.set_col(y, acc.finish());
  }
  for (const auto& r : Q.relation_span())
    if (!Phi.apply(r).empty())
      throw WellDefinednessError("char_map0 degree " + std::to_string(n) + ": relation " + r.str(&Q.ambient) +
                                 " does not vanish");
  CharResult res;
  res.cochain = Phi.apply(Q.section.apply(cocycle));
  CocyclicModule stdA = algebra_standard_cocyclic(Al, n + 1);
  res.report.add("characteristic cochain is b-closed", hochschild_b(stdA, n).apply(res.cochain).empty());
  res.report.add("characteristic cochain satisfies " + sign_name(n), is_lambda_cocycle(stdA, n, res.cochain));
  return res;
}

SparseVec trace_cochain(const TraceData& T, const ModuleAlgebra& A, const CocyclicModule& alg) {
  const QuotientSpace& Q = alg.chain.at(0);
  auto dims = Q.ambient.radix();
  if (dims.size() != 2 || dims[1] != A.A.dim()) throw ShapeError("trace_cochain needs degree 0 = M ⊗ A");
  // M = R, and r ⊗ a is read as s(r)▷a
  LinMap f(Q.ambient, LinSpace(1));
  for (std::size_t y = 0; y < Q.ambient.dim(); ++y) {
    auto d = Q.ambient.decode(y);
    SparseVec sa = A.Abim.left.at(d[0]).col(d[1]);
    f.set_col(y, T.omega.apply(T.Tr.apply(sa)));
  }
  for (const auto& r : Q.relation_span())
    if (!f.apply(r).empty()) throw WellDefinednessError("trace functional does not descend to R ⊗_K A");
  Accumulator acc;
  for (std::size_t i = 0; i < Q.dim(); ++i)
    if (Scalar v = f.apply(Q.section.col(i)).at(0); !v.is_zero()) acc.add(i, v);
  return acc.finish();
}

}  // namespace xhc
