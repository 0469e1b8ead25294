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

#include "xhc/sayd.hpp"

#include "xhc/errors.hpp"
#include "xhc/tensor.hpp"

namespace xhc {

LinMap SaydModule::action_of(const SparseVec& k) const {
  LinMap out = LinMap::zero(M, M);
  for (const auto& [i, c] : k.entries()) out += act.at(i).scaled(c);
  return out;
}

SaydModule assemble_sayd(const XHopfAlgebra& X, LinSpace M, std::vector<LinMap> act, LinMap coact) {
  const LeftBialgebroid& B = X.B;
  if (act.size() != B.dimK()) throw ShapeError("action needs one operator per basis element of K");
  for (const auto& a : act)
    if (a.cols() != M.dim() || a.rows() != M.dim()) throw ShapeError("action operator shape");
  if (coact.cols() != M.dim() || coact.rows() != B.dimK() * M.dim())
    throw ShapeError("coaction must be M -> K⊗M");
  SaydModule S;
  S.M = M;
  S.act = std::move(act);
  S.coact = LinMap(M, LinSpace::product({B.K.space(), M}), coact.columns());
  S.Mbim.carrier = M;
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    S.Mbim.left.push_back(S.action_of(B.t.col(r)));
    S.Mbim.right.push_back(S.action_of(B.s.col(r)));
  }
  S.KM = balanced_tensor({B.Kbim, S.Mbim});
  return S;
}

std::vector<LinMap> canonical_right_action(const XHopfAlgebra& X, const SaydModule& S,
                                           CheckReport* rep) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim(), dm = S.dim();
  const std::vector<std::size_t> d2{dk, dm};
  LinSpace KMs = LinSpace::product({K.space(), S.M});
  std::vector<LinMap> out;
  std::string w;
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    LinMap a(S.M, S.M);
    for (std::size_t m = 0; m < dm; ++m) {
      Accumulator acc;
      for (const auto& [i, c] : S.coact.col(m).entries()) {
        auto d = KMs.decode(i);
        SparseVec e = B.eps.apply(K.mul(SparseVec::unit(d[0]), B.s.col(r)));
        acc.add(S.action_of(B.t.apply(e)).col(d[1]), c);
      }
      a.set_col(m, acc.finish());
    }
    long j = a.first_difference(S.Mbim.right[r]);
    if (w.empty() && j >= 0) w = "m=" + S.M.label(j) + " r=" + B.R.space().label(r);
    out.push_back(std::move(a));
  }
  if (!rep) return out;
  rep->add("(i) canonical right action equals m s(r)", w.empty(), w);
  // displays accompanying the canonical action, checked literally
  std::string w1, w2;
  auto P = [&](const SparseVec& v) { return S.KM.project.apply(v); };
  for (std::size_t m = 0; m < dm; ++m) {
    SparseVec rho = S.coact.col(m);
    for (std::size_t r = 0; r < B.dimR(); ++r) {
      for (std::size_t r2 = 0; r2 < B.dimR() && w1.empty(); ++r2) {
        SparseVec rmr = out[r2].apply(S.Mbim.left[r].col(m));
        SparseVec lhs = P(S.coact.apply(rmr));
        SparseVec x = splice(rho, d2, 0, 1, K.left_mult(B.s.col(r)));
        x = splice(x, d2, 0, 1, K.right_mult(B.s.col(r2)));
        if (lhs != P(x)) w1 = "m=" + S.M.label(m) + " r=" + std::to_string(r) + " r'=" + std::to_string(r2);
      }
      if (w2.empty()) {
        SparseVec lhs = P(splice(rho, d2, 1, 1, out[r]));
        SparseVec rhs = P(splice(rho, d2, 0, 1, K.right_mult(B.t.col(r))));
        if (lhs != rhs) w2 = "m=" + S.M.label(m) + " r=" + std::to_string(r);
      }
    }
  }
  rep->note("coaction display (r·m·r')₍₋₁₎⊗(r·m·r')₍₀₎ = s(r)m₍₋₁₎s(r')⊗m₍₀₎", w1.empty(), w1);
  rep->note("coaction display m₍₋₁₎⊗m₍₀₎·r = m₍₋₁₎t(r)⊗m₍₀₎", w2.empty(), w2);
  return out;
}

CheckReport check_sayd(const XHopfAlgebra& X, const SaydModule& S) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim(), dm = S.dim();
  const std::vector<std::size_t> d2{dk, dm};
  const LinSpace& KS = K.space();
  const LinSpace& MS = S.M;
  LinSpace KMs = LinSpace::product({KS, MS});
  CheckReport rep;
  {
    std::string w;
    if (!S.action_of(K.unit()).is_identity()) w = "m·1 != m";
    for (std::size_t a = 0; a < dk && w.empty(); ++a)
      for (std::size_t b = 0; b < dk && w.empty(); ++b)
        if (S.action_of(K.mul_basis(a, b)) != compose(S.act[b], S.act[a]))
          w = "(" + KS.label(a) + "," + KS.label(b) + ")";
    rep.add("right K-module", w.empty(), w);
  }
  auto P = [&](const SparseVec& v) { return S.KM.project.apply(v); };
  {
    QuotientSpace KKM = balanced_tensor({B.Kbim, B.Kbim, S.Mbim});
    std::string wa, wc, wl;
    for (std::size_t m = 0; m < dm; ++m) {
      SparseVec rho = S.coact.col(m);
      if (wa.empty() &&
          KKM.project.apply(splice(rho, d2, 0, 1, B.Delta)) != KKM.project.apply(splice(rho, d2, 1, 1, S.coact)))
        wa = "m=" + MS.label(m);
      Accumulator acc;
      for (const auto& [i, c] : rho.entries()) {
        auto d = KMs.decode(i);
        acc.add(S.action_of(B.t.apply(B.eps.col(d[0]))).col(d[1]), c);
      }
      if (wc.empty() && acc.finish() != SparseVec::unit(m)) wc = "m=" + MS.label(m);
      for (std::size_t r = 0; r < B.dimR() && wl.empty(); ++r) {
        SparseVec lhs = P(S.coact.apply(S.Mbim.left[r].col(m)));
        SparseVec rhs = P(splice(rho, d2, 0, 1, K.left_mult(B.s.col(r))));
        if (lhs != rhs) wl = "m=" + MS.label(m) + " r=" + B.R.space().label(r);
      }
    }
    rep.add("comodule coassociativity", wa.empty(), wa);
    rep.add("comodule counitality", wc.empty(), wc);
    rep.add("coaction left R-linear", wl.empty(), wl);
  }
  canonical_right_action(X, S, &rep);
  {
    std::string w;
    const std::vector<std::size_t> k2{dk, dk};
    LinSpace KKs = LinSpace::product({KS, KS});
    for (std::size_t m = 0; m < dm && w.empty(); ++m) {
      SparseVec rho = S.coact.col(m);
      for (std::size_t k = 0; k < dk && w.empty(); ++k) {
        SparseVec lhs = P(S.coact.apply(S.act[k].col(m)));
        Accumulator acc;
        for (const auto& [i1, c1] : B.Delta.col(k).entries()) {
          auto ab = KKs.decode(i1);
          for (const auto& [i2, c2] : X.trans.col(ab[1]).entries()) {
            auto pm = KKs.decode(i2);
            for (const auto& [i3, c3] : rho.entries()) {
              auto xm = KMs.decode(i3);
              SparseVec kk = K.mul(K.mul_basis(pm[1], xm[0]), SparseVec::unit(ab[0]));
              acc.add(kron(kk, S.act[pm[0]].col(xm[1]), dm), c1 * c2 * c3);
            }
          }
        }
        if (lhs != P(acc.finish())) w = "m=" + MS.label(m) + " k=" + KS.label(k);
      }
    }
    rep.add("AYD condition", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t m = 0; m < dm && w.empty(); ++m) {
      Accumulator acc;
      for (const auto& [i, c] : S.coact.col(m).entries()) {
        auto d = KMs.decode(i);
        acc.add(S.act[d[0]].col(d[1]), c);
      }
      if (acc.finish() != SparseVec::unit(m)) w = "m=" + MS.label(m);
    }
    rep.add("stability m₍₀₎m₍₋₁₎ = m", w.empty(), w);
  }
  return rep;
}

SaydModule make_sayd(const XHopfAlgebra& X, LinSpace M, std::vector<LinMap> act, LinMap coact) {
  SaydModule S = assemble_sayd(X, std::move(M), std::move(act), std::move(coact));
  CheckReport rep = check_sayd(X, S);
  if (const Check* c = rep.first_failure()) throw AxiomError(c->name + " fails at " + c->witness);
  return S;
}

SaydModule base_module(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dr = B.dimR();
  std::vector<LinMap> act;
  for (std::size_t k = 0; k < K.dim(); ++k) {
    LinMap a(B.R.space(), B.R.space());
    for (std::size_t r = 0; r < dr; ++r) a.set_col(r, delta.apply(K.mul(B.s.col(r), SparseVec::unit(k))));
    act.push_back(std::move(a));
  }
  LinMap co(B.R.space(), LinSpace::product({K.space(), B.R.space()}));
  for (std::size_t r = 0; r < dr; ++r) co.set_col(r, kron(K.mul(B.s.col(r), sigma), B.R.unit(), dr));
  return assemble_sayd(X, B.R.space(), std::move(act), std::move(co));
}

CheckReport check_base_sayd(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const LinSpace& KS = K.space();
  LinSpace KKs = LinSpace::product({KS, KS});
  CheckReport rep;
  std::string why;
  rep.add("sigma group-like", is_grouplike(X, sigma, &why), why);
  rep.merge(check_right_character(X, delta));
  std::string w1, w2, w3;
  for (std::size_t k = 0; k < K.dim() && w1.empty(); ++k) {
    SparseVec lhs = K.mul(B.s.apply(delta.col(k)), sigma);
    Accumulator acc;
    for (const auto& [i1, c1] : B.Delta.col(k).entries()) {
      auto ab = KKs.decode(i1);
      for (const auto& [i2, c2] : X.trans.col(ab[1]).entries()) {
        auto pm = KKs.decode(i2);
        SparseVec v = K.mul(B.t.apply(delta.col(pm[0])), SparseVec::unit(pm[1]));
        v = K.mul(K.mul(v, sigma), SparseVec::unit(ab[0]));
        acc.add(v, c1 * c2);
      }
    }
    if (lhs != acc.finish()) w1 = "k=" + KS.label(k);
  }
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    SparseVec sr = B.s.col(r);
    if (w2.empty() && B.eps.apply(K.mul(sigma, sr)) != delta.apply(sr)) w2 = "r=" + B.R.space().label(r);
    if (w3.empty() && delta.apply(K.mul(sr, sigma)) != SparseVec::unit(r)) w3 = "r=" + B.R.space().label(r);
  }
  rep.add("s(delta(k))sigma = t(delta(k₍₂₎⁻))k₍₂₎⁺ sigma k₍₁₎", w1.empty(), w1);
  rep.add("eps(sigma s(r)) = delta(s(r))", w2.empty(), w2);
  rep.add("stability delta(s(r)sigma) = r", w3.empty(), w3);
  return rep;
}

SaydModule sayd_on_base(const XHopfAlgebra& X, const SparseVec& sigma, const LinMap& delta) {
  CheckReport rep = check_base_sayd(X, sigma, delta);
  if (const Check* c = rep.first_failure()) throw AxiomError(c->name + " fails at " + c->witness);
  SaydModule S = base_module(X, sigma, delta);
  CheckReport full = check_sayd(X, S);
  if (const Check* c = full.first_failure()) throw AxiomError(c->name + " fails at " + c->witness);
  return S;
}

}  // namespace xhc
