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

#include "xhc/cyclic.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "xhc/errors.hpp"
#include "xhc/tensor.hpp"

namespace xhc {

std::size_t max_dim() {
  if (const char* v = std::getenv("XHC_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && x > 0) return static_cast<std::size_t>(x);
  }
  return 4096;
}

namespace {

void cap(std::size_t predicted, const std::string& what) {
  if (predicted > max_dim())
    throw DegreeError(what + ": predicted dimension " + std::to_string(predicted) + " exceeds limit " +
                      std::to_string(max_dim()) + " (set XHC_MAX_DIM to raise it)");
}

void check_top(std::size_t top) {
  if (top > kMaxDegree) throw DegreeError("degree cap: at most " + std::to_string(kMaxDegree) + " supported");
}

LinMap act_sum(const std::vector<LinMap>& act, const SparseVec& k, const LinSpace& sp) {
  LinMap out = LinMap::zero(sp, sp);
  for (const auto& [i, c] : k.entries()) out += act.at(i).scaled(c);
  return out;
}

/// Iterated coproduct Δ^{(n-1)}(v) in K^{⊗n}.
SparseVec iterated_coproduct(const LeftBialgebroid& B, const SparseVec& v, std::size_t n) {
  SparseVec x = v;
  std::vector<std::size_t> dims{B.dimK()};
  for (std::size_t j = 1; j < n; ++j) {
    x = splice(x, dims, dims.size() - 1, 1, B.Delta);
    dims.push_back(B.dimK());
  }
  return x;
}

/// (t(lead(k⁻)) k⁺) ▷ x summed over the translation of k, with K acting
/// diagonally on x ∈ K^{⊗n} by left multiplication. For n = 0 the element
/// acts on 1_R, giving ε(t(lead(k⁻)) k⁺).
SparseVec translated(const XHopfAlgebra& X, std::size_t k, const std::vector<SparseVec>& x,
                     const std::function<SparseVec(const SparseVec&)>& lead) {
  const LeftBialgebroid& B = X.B;
  const std::size_t dk = B.dimK(), n = x.size();
  LinSpace ks = LinSpace::product(std::vector<LinSpace>(std::max<std::size_t>(n, 1), B.K.space()));
  std::vector<std::size_t> dims(n, dk);
  Accumulator acc;
  for (const auto& [i, c] : X.trans.col(k).entries()) {
    const std::size_t u = i / dk, v = i % dk;
    SparseVec g = B.K.mul(B.t.apply(lead(SparseVec::unit(u))), SparseVec::unit(v));
    if (n == 0) {
      acc.add(B.eps.apply(g), c);
      continue;
    }
    SparseVec kv = iterated_coproduct(B, g, n);
    for (const auto& [j, e] : kv.entries()) {
      auto d = n == 1 ? std::vector<std::size_t>{j} : ks.decode(j);
      std::vector<SparseVec> parts;
      for (std::size_t p = 0; p < n; ++p) parts.push_back(B.K.mul(SparseVec::unit(d[p]), x[p]));
      acc.add(kron_all(parts, dims), c * e);
    }
  }
  return acc.finish();
}

/// Applies act[k_j] to factor j, for every pure term k_0⊗...⊗k_n of kv.
SparseVec act_diag(const std::vector<LinMap>& act, std::size_t dk, const SparseVec& kv,
                   const std::vector<SparseVec>& parts, std::size_t dc) {
  const std::size_t n = parts.size();
  std::vector<std::size_t> kd(n, dk), cd(n, dc);
  LinSpace ks = LinSpace::product(std::vector<LinSpace>(n, LinSpace(dk)));
  Accumulator acc;
  for (const auto& [i, c] : kv.entries()) {
    auto d = n == 1 ? std::vector<std::size_t>{i} : ks.decode(i);
    std::vector<SparseVec> f;
    f.reserve(n);
    for (std::size_t j = 0; j < n; ++j) f.push_back(act[d[j]].apply(parts[j]));
    acc.add(kron_all(f, cd), c);
  }
  return acc.finish();
}

std::vector<SparseVec> units(const std::vector<std::size_t>& d, std::size_t from, std::size_t to) {
  std::vector<SparseVec> out;
  for (std::size_t j = from; j < to; ++j) out.push_back(SparseVec::unit(d[j]));
  return out;
}

/// Degree-n chain spaces M ⊗_K V^{⊗_R(n+1)} for n = 0..top, with K acting
/// diagonally on V^{⊗_R(n+1)}.
std::vector<QuotientSpace> module_tower(const LeftBialgebroid& B, const LinSpace& V, const Bimodule& Vbim,
                                        const std::vector<LinMap>& act, const SaydModule& M,
                                        std::size_t top, const std::string& what) {
  const std::size_t dk = B.dimK(), dv = V.dim(), dm = M.dim();
  std::vector<QuotientSpace> out;
  QuotientSpace T = trivial_quotient(V);
  std::vector<LinMap> right = Vbim.right;
  for (std::size_t n = 0; n <= top; ++n) {
    if (n > 0) {
      cap(T.dim() * dv, what + " degree " + std::to_string(n) + " tensor stage");
      T = balanced_pair(T, right, trivial_quotient(V), Vbim.left);
      if (n < top) right = right_actions_on(T, Vbim);
    }
    cap(dm * T.dim(), what + " degree " + std::to_string(n) + " coefficient stage");
    std::vector<std::size_t> dims(n + 1, dv);
    std::vector<LinMap> diag;
    for (std::size_t k = 0; k < dk; ++k) {
      SparseVec kv = iterated_coproduct(B, SparseVec::unit(k), n + 1);
      LinMap op(T.quotient, T.quotient);
      for (std::size_t i = 0; i < T.dim(); ++i) {
        auto d = T.ambient.decode(T.reps[i]);
        op.set_col(i, T.project.apply(act_diag(act, dk, kv, units(d, 0, d.size()), dv)));
      }
      diag.push_back(std::move(op));
    }
    out.push_back(balanced_pair(trivial_quotient(M.M), M.act, T, diag));
  }
  return out;
}

std::vector<std::size_t> dims_of(const QuotientSpace& q) { return q.ambient.radix(); }

}  // namespace

// ------------------------------------------------------------ module data

ModuleCoring make_module_coring(const LeftBialgebroid& B, LinSpace C, LinMap Delta, LinMap eps,
                                std::vector<LinMap> act) {
  ModuleCoring mc;
  mc.C = C;
  mc.Delta = LinMap(C, LinSpace::product({C, C}), Delta.columns());
  mc.eps = LinMap(C, B.R.space(), eps.columns());
  mc.act = std::move(act);
  if (mc.act.size() != B.dimK()) throw ShapeError("coring action needs one operator per basis of K");
  mc.Cbim.carrier = C;
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    mc.Cbim.left.push_back(act_sum(mc.act, B.s.col(r), C));
    mc.Cbim.right.push_back(act_sum(mc.act, B.t.col(r), C));
  }
  return mc;
}

ModuleCoring coring_from_K(const LeftBialgebroid& B) {
  std::vector<LinMap> act;
  for (std::size_t k = 0; k < B.dimK(); ++k) act.push_back(B.K.left_mult(SparseVec::unit(k)));
  return make_module_coring(B, B.K.space(), B.Delta, B.eps, std::move(act));
}

CheckReport check_module_coring(const XHopfAlgebra& X, const ModuleCoring& C) {
  const LeftBialgebroid& B = X.B;
  const std::size_t dc = C.C.dim(), dk = B.dimK();
  const std::vector<std::size_t> d2{dc, dc};
  CheckReport rep;
  QuotientSpace CC = balanced_tensor({C.Cbim, C.Cbim});
  QuotientSpace CCC = balanced_tensor({C.Cbim, C.Cbim, C.Cbim});
  std::string wa, wc, we, wd;
  {
    std::string wmod;
    for (std::size_t a = 0; a < dk && wmod.empty(); ++a)
      for (std::size_t b = 0; b < dk && wmod.empty(); ++b)
        if (act_sum(C.act, B.K.mul_basis(a, b), C.C) != compose(C.act[a], C.act[b]))
          wmod = "(" + B.K.space().label(a) + "," + B.K.space().label(b) + ")";
    if (!act_sum(C.act, B.K.unit(), C.C).is_identity()) wmod = "unit";
    rep.add("left K-module", wmod.empty(), wmod);
  }
  for (std::size_t c = 0; c < dc; ++c) {
    SparseVec x = C.Delta.col(c);
    if (wa.empty() && CCC.project.apply(splice(x, d2, 0, 1, C.Delta)) != CCC.project.apply(splice(x, d2, 1, 1, C.Delta)))
      wa = "c=" + C.C.label(c);
    Accumulator l, r;
    LinSpace cc = LinSpace::product({C.C, C.C});
    for (const auto& [i, v] : x.entries()) {
      auto d = cc.decode(i);
      l.add(act_sum(C.act, B.s.apply(C.eps.col(d[0])), C.C).col(d[1]), v);
      r.add(act_sum(C.act, B.t.apply(C.eps.col(d[1])), C.C).col(d[0]), v);
    }
    if (wc.empty() && (l.finish() != SparseVec::unit(c) || r.finish() != SparseVec::unit(c)))
      wc = "c=" + C.C.label(c);
    for (std::size_t k = 0; k < dk; ++k) {
      SparseVec kc = C.act[k].col(c);
      if (we.empty() && C.eps.apply(kc) != B.eps.apply(B.K.mul(SparseVec::unit(k), B.s.apply(C.eps.col(c)))))
        we = "k=" + B.K.space().label(k) + " c=" + C.C.label(c);
      if (wd.empty()) {
        SparseVec lhs = CC.project.apply(C.Delta.apply(kc));
        Accumulator acc;
        LinSpace kk = LinSpace::product({B.K.space(), B.K.space()});
        LinSpace cc2 = LinSpace::product({C.C, C.C});
        for (const auto& [i, v] : B.Delta.col(k).entries()) {
          auto dkk = kk.decode(i);
          for (const auto& [j, u] : x.entries()) {
            auto dcc = cc2.decode(j);
            acc.add(kron(C.act[dkk[0]].col(dcc[0]), C.act[dkk[1]].col(dcc[1]), dc), v * u);
          }
        }
        if (lhs != CC.project.apply(acc.finish())) wd = "k=" + B.K.space().label(k) + " c=" + C.C.label(c);
      }
    }
  }
  rep.add("coring coassociativity", wa.empty(), wa);
  rep.add("coring counit", wc.empty(), wc);
  rep.add("eps K-linear", we.empty(), we);
  rep.add("Delta K-linear", wd.empty(), wd);
  return rep;
}

LinMap ModuleAlgebra::action_of(const SparseVec& k) const { return act_sum(act, k, A.space()); }

ModuleAlgebra make_module_algebra(const LeftBialgebroid& B, FinAlgebra A, std::vector<LinMap> act) {
  ModuleAlgebra ma;
  ma.A = std::move(A);
  ma.act = std::move(act);
  if (ma.act.size() != B.dimK()) throw ShapeError("module algebra action needs one operator per basis of K");
  ma.Abim.carrier = ma.A.space();
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    ma.Abim.left.push_back(ma.action_of(B.s.col(r)));
    ma.Abim.right.push_back(ma.action_of(B.t.col(r)));
  }
  return ma;
}

ModuleAlgebra base_module_algebra(const LeftBialgebroid& B) {
  std::vector<LinMap> act;
  for (std::size_t k = 0; k < B.dimK(); ++k) {
    LinMap a(B.R.space(), B.R.space());
    for (std::size_t r = 0; r < B.dimR(); ++r)
      a.set_col(r, B.eps.apply(B.K.mul(SparseVec::unit(k), B.s.col(r))));
    act.push_back(std::move(a));
  }
  return make_module_algebra(B, B.R, std::move(act));
}

CheckReport check_module_algebra(const XHopfAlgebra& X, const ModuleAlgebra& A) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& Al = A.A;
  const std::size_t dk = B.dimK(), da = Al.dim();
  CheckReport rep = check_algebra(Al);
  std::string wm, w1, w2, w3;
  for (std::size_t a = 0; a < dk && wm.empty(); ++a)
    for (std::size_t b = 0; b < dk && wm.empty(); ++b)
      if (A.action_of(B.K.mul_basis(a, b)) != compose(A.act[a], A.act[b]))
        wm = "(" + B.K.space().label(a) + "," + B.K.space().label(b) + ")";
  if (!A.action_of(B.K.unit()).is_identity()) wm = "unit";
  rep.add("left K-module", wm.empty(), wm);
  LinSpace kk = LinSpace::product({B.K.space(), B.K.space()});
  for (std::size_t k = 0; k < dk; ++k) {
    SparseVec lhs = A.act[k].apply(Al.unit());
    SparseVec rhs = A.action_of(B.s.apply(B.eps.col(k))).apply(Al.unit());
    if (w1.empty() && lhs != rhs) w1 = "k=" + B.K.space().label(k);
    for (std::size_t a = 0; a < da && w2.empty(); ++a)
      for (std::size_t b = 0; b < da && w2.empty(); ++b) {
        SparseVec l = A.act[k].apply(Al.mul_basis(a, b));
        Accumulator acc;
        for (const auto& [i, c] : B.Delta.col(k).entries()) {
          auto d = kk.decode(i);
          acc.add(Al.mul(A.act[d[0]].col(a), A.act[d[1]].col(b)), c);
        }
        if (l != acc.finish()) w2 = "k=" + B.K.space().label(k) + " a=" + Al.space().label(a) + " a'=" + Al.space().label(b);
      }
  }
  for (std::size_t r = 0; r < B.dimR() && w3.empty(); ++r)
    for (std::size_t a = 0; a < da && w3.empty(); ++a)
      for (std::size_t b = 0; b < da && w3.empty(); ++b)
        if (Al.mul(A.Abim.right[r].col(a), SparseVec::unit(b)) != Al.mul(SparseVec::unit(a), A.Abim.left[r].col(b)))
          w3 = "r=" + B.R.space().label(r) + " a=" + Al.space().label(a) + " a'=" + Al.space().label(b);
  rep.add("(i) k▷1 = s(eps(k))▷1", w1.empty(), w1);
  rep.add("(ii) k▷(aa') = (k₍₁₎▷a)(k₍₂₎▷a')", w2.empty(), w2);
  rep.add("(iii) multiplication R-balanced", w3.empty(), w3);
  return rep;
}

// ------------------------------------------------------------ complexes

CocyclicModule coring_cocyclic(const XHopfAlgebra& X, const ModuleCoring& C, const SaydModule& M,
                               std::size_t top) {
  check_top(top);
  const LeftBialgebroid& B = X.B;
  LinSpace KMs = LinSpace::product({B.K.space(), M.M});
  LinSpace CCs = LinSpace::product({C.C, C.C});
  CocyclicModule cx;
  cx.kind = "coring";
  cx.chain = module_tower(B, C.C, C.Cbim, C.act, M, top, "coring complex");
  for (const auto& q : cx.chain) cx.spaces.push_back(q.quotient);
  cx.cofaces.resize(top + 1);
  cx.codegen.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Q = cx.chain[n];
    auto dims = dims_of(Q);
    if (n < top) {
      const QuotientSpace& Q1 = cx.chain[n + 1];
      auto dims1 = dims_of(Q1);
      for (std::size_t i = 0; i <= n; ++i)
        cx.cofaces[n].push_back(build_operator(Q, Q1, [&, i](const std::vector<std::size_t>& d) {
          return splice(pure(d, dims), dims, 1 + i, 1, C.Delta);
        }));
      cx.cofaces[n].push_back(build_operator(Q, Q1, [&](const std::vector<std::size_t>& d) {
        Accumulator acc;
        for (const auto& [i1, c1] : M.coact.col(d[0]).entries()) {
          auto xm = KMs.decode(i1);
          for (const auto& [i2, c2] : C.Delta.col(d[1]).entries()) {
            auto ab = CCs.decode(i2);
            std::vector<SparseVec> parts{SparseVec::unit(xm[1]), SparseVec::unit(ab[1])};
            for (std::size_t j = 2; j < d.size(); ++j) parts.push_back(SparseVec::unit(d[j]));
            parts.push_back(C.act[xm[0]].col(ab[0]));
            acc.add(kron_all(parts, dims1), c1 * c2);
          }
        }
        return acc.finish();
      }));
    }
    if (n >= 1) {
      const QuotientSpace& Qm = cx.chain[n - 1];
      auto dimsm = dims_of(Qm);
      for (std::size_t i = 0; i < n; ++i)
        cx.codegen[n].push_back(build_operator(Q, Qm, [&, i](const std::vector<std::size_t>& d) {
          // ε on c_{i+1}; its R-value acts on c_{i+2} from the left, else on c_i from the right
          SparseVec r = C.eps.col(d[i + 2]);
          std::size_t absorb = (i + 2 <= n) ? i + 3 : i + 1;
          const std::vector<LinMap>& side = (i + 2 <= n) ? C.Cbim.left : C.Cbim.right;
          SparseVec moved = act_sum(side, r, C.C).col(d[absorb]);
          std::vector<SparseVec> parts;
          for (std::size_t j = 0; j < d.size(); ++j) {
            if (j == i + 2) continue;
            parts.push_back(j == absorb ? moved : SparseVec::unit(d[j]));
          }
          return kron_all(parts, dimsm);
        }));
    }
    cx.cyclic.push_back(build_operator(Q, Q, [&](const std::vector<std::size_t>& d) {
      Accumulator acc;
      for (const auto& [i1, c1] : M.coact.col(d[0]).entries()) {
        auto xm = KMs.decode(i1);
        std::vector<SparseVec> parts{SparseVec::unit(xm[1])};
        for (std::size_t j = 2; j < d.size(); ++j) parts.push_back(SparseVec::unit(d[j]));
        parts.push_back(C.act[xm[0]].col(d[1]));
        acc.add(kron_all(parts, dims), c1);
      }
      return acc.finish();
    }));
  }
  return cx;
}

CocyclicModule algebra_cocyclic(const XHopfAlgebra& X, const ModuleAlgebra& A, const SaydModule& M,
                                std::size_t top) {
  check_top(top);
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& Al = A.A;
  const std::size_t dk = B.dimK();
  LinSpace KMs = LinSpace::product({B.K.space(), M.M});
  CocyclicModule cx;
  cx.kind = "algebra";
  cx.dual = true;
  cx.chain = module_tower(B, Al.space(), A.Abim, A.act, M, top, "algebra complex");
  for (const auto& q : cx.chain) cx.spaces.push_back(q.quotient);
  cx.cofaces.resize(top + 1);
  cx.codegen.resize(top + 1);
  // m₀ ⊗ (k₁▷x₁) ⊗ ... for the iterated coaction of m, with x a list of factors
  auto coacted = [&](std::size_t m, const std::vector<SparseVec>& lead, const std::vector<std::size_t>& ai,
                     const std::vector<std::size_t>& dims, bool fold_first) {
    Accumulator acc;
    const std::size_t n = ai.size();
    for (const auto& [i1, c1] : M.coact.col(m).entries()) {
      auto xm = KMs.decode(i1);
      SparseVec kv = iterated_coproduct(B, SparseVec::unit(xm[0]), n);
      LinSpace ks = LinSpace::product(std::vector<LinSpace>(n, LinSpace(dk)));
      for (const auto& [i2, c2] : kv.entries()) {
        auto kd = n == 1 ? std::vector<std::size_t>{i2} : ks.decode(i2);
        std::vector<SparseVec> parts{SparseVec::unit(xm[1])};
        for (std::size_t j = 0; j < n; ++j) {
          SparseVec v = A.act[kd[j]].col(ai[j]);
          if (j == 0 && fold_first) v = Al.mul(lead[0], v);
          if (j == 0 && !fold_first)
            for (const auto& l : lead) parts.push_back(l);
          parts.push_back(std::move(v));
        }
        acc.add(kron_all(parts, dims), c1 * c2);
      }
    }
    return acc.finish();
  };
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Q = cx.chain[n];
    auto dims = dims_of(Q);
    if (n < top) {
      // chain maps X_{n+1} -> X_n
      const QuotientSpace& Q1 = cx.chain[n + 1];
      for (std::size_t i = 0; i <= n; ++i)
        cx.cofaces[n].push_back(build_operator(Q1, Q, [&, i](const std::vector<std::size_t>& d) {
          std::vector<SparseVec> parts{SparseVec::unit(d[0])};
          for (std::size_t j = 1; j < d.size(); ++j) {
            if (j == i + 1) {
              parts.push_back(Al.mul_basis(d[j], d[j + 1]));
              ++j;
            } else {
              parts.push_back(SparseVec::unit(d[j]));
            }
          }
          return kron_all(parts, dims);
        }).transpose());
      cx.cofaces[n].push_back(build_operator(Q1, Q, [&](const std::vector<std::size_t>& d) {
        // m₀ ⊗ a_{n+1}(k₁▷a₀) ⊗ k₂▷a₁ ⊗ ... ⊗ k_{n+1}▷a_n
        std::vector<std::size_t> ai(d.begin() + 1, d.end() - 1);
        return coacted(d[0], {SparseVec::unit(d.back())}, ai, dims, true);
      }).transpose());
    }
    if (n >= 1) {
      const QuotientSpace& Qm = cx.chain[n - 1];
      for (std::size_t i = 0; i < n; ++i)
        cx.codegen[n].push_back(build_operator(Qm, Q, [&, i](const std::vector<std::size_t>& d) {
          std::vector<SparseVec> parts;
          for (std::size_t j = 0; j < d.size(); ++j) {
            parts.push_back(SparseVec::unit(d[j]));
            if (j == i + 1) parts.push_back(Al.unit());
          }
          return kron_all(parts, dims);
        }).transpose());
    }
    if (n == 0) {
      cx.cyclic.push_back(LinMap::identity(Q.quotient));
    } else {
      cx.cyclic.push_back(build_operator(Q, Q, [&](const std::vector<std::size_t>& d) {
        std::vector<std::size_t> ai(d.begin() + 1, d.end() - 1);
        return coacted(d[0], {SparseVec::unit(d.back())}, ai, dims, false);
      }).transpose());
    }
    cx.theta.push_back(build_operator(Q, Q, [&](const std::vector<std::size_t>& d) {
      Accumulator acc;
      for (const auto& [i1, c1] : M.coact.col(d[0]).entries()) {
        auto xm = KMs.decode(i1);
        std::vector<SparseVec> parts{SparseVec::unit(xm[1])};
        for (std::size_t j = 2; j < d.size(); ++j) parts.push_back(SparseVec::unit(d[j]));
        parts.push_back(A.act[xm[0]].col(d[1]));
        acc.add(kron_all(parts, dims), c1);
      }
      return acc.finish();
    }).transpose());
  }
  return cx;
}

CocyclicModule algebra_standard_cocyclic(const FinAlgebra& Bal, std::size_t top) {
  check_top(top);
  const std::size_t db = Bal.dim();
  CocyclicModule cx;
  cx.kind = "standard";
  cx.dual = true;
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t total = 1;
    for (std::size_t j = 0; j <= n; ++j) total *= db;
    cap(total, "standard complex degree " + std::to_string(n));
    cx.chain.push_back(trivial_quotient(LinSpace::product(std::vector<LinSpace>(n + 1, Bal.space()))));
    cx.spaces.push_back(cx.chain.back().quotient);
  }
  cx.cofaces.resize(top + 1);
  cx.codegen.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Q = cx.chain[n];
    std::vector<std::size_t> dims(n + 1, db);
    if (n < top) {
      const QuotientSpace& Q1 = cx.chain[n + 1];
      for (std::size_t i = 0; i <= n; ++i)
        cx.cofaces[n].push_back(ambient_map(Q1.ambient, Q.ambient, [&, i](const std::vector<std::size_t>& d) {
          std::vector<SparseVec> parts;
          for (std::size_t j = 0; j < d.size(); ++j) {
            if (j == i) {
              parts.push_back(Bal.mul_basis(d[j], d[j + 1]));
              ++j;
            } else {
              parts.push_back(SparseVec::unit(d[j]));
            }
          }
          return kron_all(parts, dims);
        }).transpose());
      cx.cofaces[n].push_back(ambient_map(Q1.ambient, Q.ambient, [&](const std::vector<std::size_t>& d) {
        std::vector<SparseVec> parts{Bal.mul_basis(d.back(), d[0])};
        for (std::size_t j = 1; j + 1 < d.size(); ++j) parts.push_back(SparseVec::unit(d[j]));
        return kron_all(parts, dims);
      }).transpose());
    }
    if (n >= 1) {
      std::vector<std::size_t> dm(n, db);
      for (std::size_t i = 0; i < n; ++i)
        cx.codegen[n].push_back(ambient_map(cx.chain[n - 1].ambient, Q.ambient, [&, i](const std::vector<std::size_t>& d) {
          std::vector<SparseVec> parts;
          for (std::size_t j = 0; j < d.size(); ++j) {
            parts.push_back(SparseVec::unit(d[j]));
            if (j == i) parts.push_back(Bal.unit());
          }
          return kron_all(parts, dims);
        }).transpose());
    }
    cx.cyclic.push_back(ambient_map(Q.ambient, Q.ambient, [&](const std::vector<std::size_t>& d) {
      std::vector<std::size_t> r{d.back()};
      r.insert(r.end(), d.begin(), d.end() - 1);
      return pure(r, dims);
    }).transpose());
  }
  return cx;
}

CocyclicModule simplified_cocyclic(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta,
                                   std::size_t top) {
  check_top(top);
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim();
  CocyclicModule cx;
  cx.kind = "simplified";
  cx.chain.push_back(trivial_quotient(B.R.space()));
  for (std::size_t n = 1; n <= top; ++n) {
    if (n >= 2) cap(cx.chain.back().dim() * dk, "simplified complex degree " + std::to_string(n));
    cx.chain.push_back(n == 1 ? trivial_quotient(K.space())
                              : balanced_pair(cx.chain.back(), right_actions_on(cx.chain.back(), B.Kbim),
                                              trivial_quotient(K.space()), B.Kbim.left));
  }
  for (const auto& q : cx.chain) cx.spaces.push_back(q.quotient);
  cx.cofaces.resize(top + 1);
  cx.codegen.resize(top + 1);
  auto kdims = [&](std::size_t n) { return std::vector<std::size_t>(n, dk); };
  auto eps_at = [&](std::size_t k) { return B.eps.col(k); };
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Q = cx.chain[n];
    if (n < top) {
      const QuotientSpace& Q1 = cx.chain[n + 1];
      auto d1 = kdims(n + 1);
      if (n == 0) {
        cx.cofaces[0].push_back(build_operator(Q, Q1, [&](const std::vector<std::size_t>& d) { return B.t.col(d[0]); }));
        cx.cofaces[0].push_back(build_operator(Q, Q1, [&](const std::vector<std::size_t>& d) {
          return K.mul(B.s.col(d[0]), sigma);
        }));
      } else {
        cx.cofaces[n].push_back(build_operator(Q, Q1, [&](const std::vector<std::size_t>& d) {
          return kron(K.unit(), pure(d, kdims(n)), Q.ambient.dim());
        }));
        for (std::size_t i = 1; i <= n; ++i)
          cx.cofaces[n].push_back(build_operator(Q, Q1, [&, i](const std::vector<std::size_t>& d) {
            return splice(pure(d, kdims(n)), kdims(n), i - 1, 1, B.Delta);
          }));
        cx.cofaces[n].push_back(build_operator(Q, Q1, [&](const std::vector<std::size_t>& d) {
          return kron(pure(d, kdims(n)), sigma, dk);
        }));
      }
    }
    if (n == 1) {
      cx.codegen[1].push_back(build_operator(Q, cx.chain[0], [&](const std::vector<std::size_t>& d) {
        return delta.apply(B.t.apply(eps_at(d[0])));
      }));
    } else if (n >= 2) {
      auto dm = kdims(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        cx.codegen[n].push_back(build_operator(Q, cx.chain[n - 1], [&, i](const std::vector<std::size_t>& d) {
          std::vector<SparseVec> parts;
          if (i + 2 <= n) {
            // s(ε(k_{i+1})) k_{i+2}
            for (std::size_t j = 0; j < n; ++j) {
              if (j == i) continue;
              parts.push_back(j == i + 1 ? K.mul(B.s.apply(eps_at(d[i])), SparseVec::unit(d[j]))
                                         : SparseVec::unit(d[j]));
            }
          } else {
            // t(ε(k_n)) k_{n-1}
            for (std::size_t j = 0; j + 1 < n; ++j)
              parts.push_back(j + 2 == n ? K.mul(B.t.apply(eps_at(d[n - 1])), SparseVec::unit(d[j]))
                                         : SparseVec::unit(d[j]));
          }
          return kron_all(parts, dm);
        }));
    }
    cx.cyclic.push_back(build_operator(Q, Q, [&](const std::vector<std::size_t>& d) {
      if (n == 0) {
        // (t(1 ◁ g⁻) g⁺) ▷ 1 for g = s(r)σ
        SparseVec g = K.mul(B.s.col(d[0]), sigma);
        Accumulator acc;
        for (const auto& [j, c] : g.entries())
          acc.add(translated(X, j, {}, [&](const SparseVec& u) { return delta.apply(u); }), c);
        return acc.finish();
      }
      // (t(δ(k₁⁻)) k₁⁺) ▷ (k₂ ⊗ ⋯ ⊗ k_n ⊗ σ)
      std::vector<SparseVec> rest;
      for (std::size_t j = 1; j < n; ++j) rest.push_back(SparseVec::unit(d[j]));
      rest.push_back(sigma);
      return translated(X, d[0], rest, [&](const SparseVec& u) { return delta.apply(u); });
    }));
  }
  return cx;
}

SimplifiedBundle simplified_base_cocyclic(const XHopfAlgebra& X, const SparseVec& sigma,
                                          const LinMap& delta, std::size_t top) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim(), dr = B.dimR();
  SimplifiedBundle sb;
  sb.simple = simplified_cocyclic(X, sigma, delta, top);
  SaydModule M = sayd_on_base(X, sigma, delta);
  sb.coring = coring_cocyclic(X, coring_from_K(B), M, top);
  for (std::size_t n = 0; n <= top; ++n) {
    const QuotientSpace& Qc = sb.coring.chain[n];
    const QuotientSpace& Qs = sb.simple.chain[n];
    std::vector<std::size_t> sd(n, dk);
    sb.rho.push_back(build_operator(Qc, Qs, [&](const std::vector<std::size_t>& d) {
      // (t(r ◁ k₀⁻) k₀⁺) ▷ (k₁ ⊗ ⋯ ⊗ k_n)
      std::vector<SparseVec> rest;
      for (std::size_t j = 2; j < d.size(); ++j) rest.push_back(SparseVec::unit(d[j]));
      return translated(X, d[1], rest, [&](const SparseVec& u) { return delta.apply(K.mul(B.s.col(d[0]), u)); });
    }));
    sb.rho_inv.push_back(build_operator(Qs, Qc, [&](const std::vector<std::size_t>& d) {
      if (n == 0) return kron(SparseVec::unit(d[0]), K.unit(), dk);
      std::vector<SparseVec> parts{B.R.unit(), K.unit()};
      std::vector<std::size_t> dims{dr, dk};
      for (std::size_t j = 0; j < n; ++j) {
        parts.push_back(SparseVec::unit(d[j]));
        dims.push_back(dk);
      }
      return kron_all(parts, dims);
    }));
    LinMap a = compose(sb.rho[n], sb.rho_inv[n]), b = compose(sb.rho_inv[n], sb.rho[n]);
    sb.report.add("rho∘rho⁻¹ = id degree " + std::to_string(n), a.is_identity());
    sb.report.add("rho⁻¹∘rho = id degree " + std::to_string(n), b.is_identity());
  }
  sb.report.merge(check_cocyclic_map(sb.coring, sb.simple, sb.rho), "rho ");
  sb.report.merge(check_cocyclic_map(sb.simple, sb.coring, sb.rho_inv), "rho⁻¹ ");
  return sb;
}

}  // namespace xhc
