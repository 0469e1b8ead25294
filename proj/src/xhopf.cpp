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

#include "xhc/xhopf.hpp"

#include "xhc/errors.hpp"
#include "xhc/tensor.hpp"

namespace xhc {

namespace {

std::string lab(const LinSpace& s, std::size_t i) { return s.label(i); }

void throw_first(const CheckReport& rep) {
  if (const Check* c = rep.first_failure()) throw AxiomError(c->name + " fails at " + c->witness);
}

}  // namespace

SparseVec coproduct(const LeftBialgebroid& B, const SparseVec& k) { return B.Delta.apply(k); }

SparseVec translation(const XHopfAlgebra& X, const SparseVec& k) { return X.trans.apply(k); }

QuotientSpace LeftBialgebroid::power(std::size_t n) const {
  if (n == 0) throw ShapeError("K^{⊗0} is R, not a tensor power");
  if (n == 1) return trivial_quotient(K.space());
  if (n == 2) return KK;
  if (n == 3) return KKK;
  return balanced_tensor(std::vector<Bimodule>(n, Kbim));
}

LeftBialgebroid assemble_bialgebroid(FinAlgebra K, FinAlgebra R, LinMap s, LinMap t, LinMap Delta,
                                     LinMap eps) {
  const std::size_t dk = K.dim(), dr = R.dim();
  if (s.cols() != dr || s.rows() != dk || t.cols() != dr || t.rows() != dk)
    throw ShapeError("source/target maps must be R -> K");
  if (Delta.cols() != dk || Delta.rows() != dk * dk) throw ShapeError("Delta must be K -> K⊗K");
  if (eps.cols() != dk || eps.rows() != dr) throw ShapeError("eps must be K -> R");
  LeftBialgebroid B;
  B.K = std::move(K);
  B.R = std::move(R);
  B.s = std::move(s);
  B.t = std::move(t);
  B.Delta = LinMap(B.K.space(), LinSpace::product({B.K.space(), B.K.space()}), Delta.columns());
  B.eps = LinMap(B.K.space(), B.R.space(), eps.columns());
  B.Kbim.carrier = B.K.space();
  for (std::size_t r = 0; r < dr; ++r) {
    B.Kbim.left.push_back(B.K.left_mult(B.s.col(r)));
    B.Kbim.right.push_back(B.K.left_mult(B.t.col(r)));
  }
  B.KK = balanced_tensor({B.Kbim, B.Kbim});
  B.KKK = balanced_tensor({B.Kbim, B.Kbim, B.Kbim});
  B.Delta_q = compose(B.KK.project, B.Delta);
  return B;
}

CheckReport check_bialgebroid(const LeftBialgebroid& B) {
  CheckReport rep;
  const FinAlgebra& K = B.K;
  const FinAlgebra& R = B.R;
  const std::size_t dk = K.dim(), dr = R.dim();
  const std::vector<std::size_t> d2{dk, dk};
  const LinSpace& KS = K.space();
  const LinSpace& RS = R.space();

  rep.merge(check_algebra_hom(B.s, R, K), "s ");
  rep.merge(check_algebra_hom(B.t, opposite(R), K), "t ");
  {
    std::string w;
    for (std::size_t i = 0; i < dr && w.empty(); ++i)
      for (std::size_t j = 0; j < dr && w.empty(); ++j)
        if (K.mul(B.s.col(i), B.t.col(j)) != K.mul(B.t.col(j), B.s.col(i)))
          w = "s(" + lab(RS, i) + "), t(" + lab(RS, j) + ")";
    rep.add("s,t ranges commute", w.empty(), w);
  }
  auto P = [&](const SparseVec& v) { return B.KK.project.apply(v); };
  {
    std::string w, we;
    for (std::size_t r = 0; r < dr; ++r) {
      LinMap ls = K.left_mult(B.s.col(r)), lt = K.left_mult(B.t.col(r));
      for (std::size_t k = 0; k < dk; ++k) {
        SparseVec dk_ = B.Delta.col(k);
        if (w.empty() && P(B.Delta.apply(ls.col(k))) != P(splice(dk_, d2, 0, 1, ls)))
          w = "left r=" + lab(RS, r) + " k=" + lab(KS, k);
        if (w.empty() && P(B.Delta.apply(lt.col(k))) != P(splice(dk_, d2, 1, 1, lt)))
          w = "right r=" + lab(RS, r) + " k=" + lab(KS, k);
        SparseVec ek = B.eps.col(k);
        if (we.empty() && B.eps.apply(ls.col(k)) != R.mul(SparseVec::unit(r), ek))
          we = "left r=" + lab(RS, r) + " k=" + lab(KS, k);
        if (we.empty() && B.eps.apply(lt.col(k)) != R.mul(ek, SparseVec::unit(r)))
          we = "right r=" + lab(RS, r) + " k=" + lab(KS, k);
      }
    }
    rep.add("Delta R-bimodule map", w.empty(), w);
    rep.add("eps R-bimodule map", we.empty(), we);
  }
  // coassociativity through induced maps KK -> KKK
  try {
    Formula dl = [&](const std::vector<std::size_t>& d) { return splice(pure(d, d2), d2, 0, 1, B.Delta); };
    Formula dr_ = [&](const std::vector<std::size_t>& d) { return splice(pure(d, d2), d2, 1, 1, B.Delta); };
    LinMap L = compose(build_operator(B.KK, B.KKK, dl), B.Delta_q);
    LinMap Rm = compose(build_operator(B.KK, B.KKK, dr_), B.Delta_q);
    long j = L.first_difference(Rm);
    rep.add("coassociativity", j < 0, j < 0 ? "" : "k=" + lab(KS, j));
  } catch (const WellDefinednessError& e) {
    rep.add("coassociativity", false, e.what());
  }
  try {
    QuotientSpace Kq = trivial_quotient(KS);
    Formula el = [&](const std::vector<std::size_t>& d) {
      return K.mul(B.s.apply(B.eps.col(d[0])), SparseVec::unit(d[1]));
    };
    Formula er = [&](const std::vector<std::size_t>& d) {
      return K.mul(B.t.apply(B.eps.col(d[1])), SparseVec::unit(d[0]));
    };
    LinMap L = compose(build_operator(B.KK, Kq, el), B.Delta_q);
    LinMap Rm = compose(build_operator(B.KK, Kq, er), B.Delta_q);
    std::string w;
    if (!L.is_identity()) w = "(eps⊗id) k=" + lab(KS, L.first_difference(LinMap::identity(KS)));
    if (w.empty() && !Rm.is_identity())
      w = "(id⊗eps) k=" + lab(KS, Rm.first_difference(LinMap::identity(KS)));
    rep.add("counitality", w.empty(), w);
  } catch (const WellDefinednessError& e) {
    rep.add("counitality", false, e.what());
  }
  {
    std::string w;
    for (std::size_t r = 0; r < dr && w.empty(); ++r) {
      LinMap rt = K.right_mult(B.t.col(r)), rs = K.right_mult(B.s.col(r));
      for (std::size_t k = 0; k < dk && w.empty(); ++k) {
        SparseVec x = B.Delta.col(k);
        if (P(splice(x, d2, 0, 1, rt)) != P(splice(x, d2, 1, 1, rs)))
          w = "k=" + lab(KS, k) + " r=" + lab(RS, r);
      }
    }
    rep.add("Takeuchi condition (i)", w.empty(), w);
  }
  {
    std::string w;
    if (P(B.Delta.apply(K.unit())) != P(kron(K.unit(), K.unit(), dk))) w = "Delta(1) != 1⊗1";
    for (std::size_t a = 0; a < dk && w.empty(); ++a)
      for (std::size_t b = 0; b < dk && w.empty(); ++b) {
        SparseVec lhs = B.Delta_q.apply(K.mul_basis(a, b));
        SparseVec rhs = P(tensor_power_mul(K, 2, B.Delta.col(a), B.Delta.col(b)));
        if (lhs != rhs) w = "(" + lab(KS, a) + "," + lab(KS, b) + ")";
      }
    rep.add("Delta unital multiplicative (ii)", w.empty(), w);
  }
  {
    std::string w;
    if (B.eps.apply(K.unit()) != R.unit()) w = "eps(1) != 1";
    for (std::size_t a = 0; a < dk && w.empty(); ++a)
      for (std::size_t b = 0; b < dk && w.empty(); ++b) {
        SparseVec lhs = B.eps.apply(K.mul_basis(a, b));
        SparseVec rhs = B.eps.apply(K.mul(SparseVec::unit(a), B.s.apply(B.eps.col(b))));
        if (lhs != rhs) w = "(" + lab(KS, a) + "," + lab(KS, b) + ")";
      }
    rep.add("eps unital and eps(kk')=eps(k s(eps k')) (iii)", w.empty(), w);
  }
  return rep;
}

LeftBialgebroid make_bialgebroid(FinAlgebra K, FinAlgebra R, LinMap s, LinMap t, LinMap Delta,
                                 LinMap eps) {
  throw_first(check_algebra(K));
  throw_first(check_algebra(R));
  LeftBialgebroid B = assemble_bialgebroid(std::move(K), std::move(R), std::move(s), std::move(t),
                                           std::move(Delta), std::move(eps));
  throw_first(check_bialgebroid(B));
  return B;
}

namespace {

void build_nu(XHopfAlgebra& X) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim();
  const std::vector<std::size_t> d2{dk, dk};
  std::vector<LinMap> rt, lt;
  for (std::size_t r = 0; r < B.dimR(); ++r) {
    rt.push_back(K.right_mult(B.t.col(r)));
    lt.push_back(K.left_mult(B.t.col(r)));
  }
  QuotientSpace Kq = trivial_quotient(K.space());
  X.KopK = balanced_pair(Kq, rt, Kq, lt);
  X.nu = build_operator(X.KopK, B.KK, [&](const std::vector<std::size_t>& d) {
    return splice(B.Delta.col(d[0]), d2, 1, 1, K.right_mult(SparseVec::unit(d[1])));
  });
  X.nuhat = build_operator(B.KK, X.KopK, [&](const std::vector<std::size_t>& d) {
    return splice(X.trans.col(d[0]), d2, 1, 1, K.right_mult(SparseVec::unit(d[1])));
  });
}

CheckReport check_nu(const XHopfAlgebra& X) {
  CheckReport rep;
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const std::size_t dk = K.dim();
  const std::vector<std::size_t> d2{dk, dk};
  const LinSpace& KS = K.space();
  {
    LinMap a = compose(X.nu, X.nuhat), b = compose(X.nuhat, X.nu);
    long ja = a.is_identity() ? -1 : a.first_difference(LinMap::identity(a.source()));
    long jb = b.is_identity() ? -1 : b.first_difference(LinMap::identity(b.source()));
    rep.add("nu∘nuhat = id", ja < 0, ja < 0 ? "" : B.KK.quotient.label(ja));
    rep.add("nuhat∘nu = id", jb < 0, jb < 0 ? "" : X.KopK.quotient.label(jb));
  }
  {
    std::string w;
    for (std::size_t k = 0; k < dk && w.empty(); ++k) {
      SparseVec lhs = splice(X.trans.col(k), d2, 0, 1, B.Delta);
      // k⁻₍₁₎ ⊗ k⁻₍₂₎k⁺ : multiply factor 1 by factor 2
      Accumulator acc;
      std::vector<std::size_t> d3{dk, dk, dk};
      LinSpace s3 = LinSpace::product({KS, KS, KS});
      for (const auto& [i, c] : lhs.entries()) {
        auto d = s3.decode(i);
        acc.add(kron(SparseVec::unit(d[0]), K.mul_basis(d[1], d[2]), dk), c);
      }
      SparseVec l = B.KK.project.apply(acc.finish());
      SparseVec r = B.KK.project.apply(kron(SparseVec::unit(k), K.unit(), dk));
      if (l != r) w = "k=" + lab(KS, k);
    }
    rep.add("translation identity k⁻₍₁₎⊗k⁻₍₂₎k⁺ = k⊗1", w.empty(), w);
  }
  {
    std::vector<LinMap> rt, lt;
    for (std::size_t r = 0; r < B.dimR(); ++r) {
      rt.push_back(factor_op(B.KK, 1, K.right_mult(B.t.col(r))));
      lt.push_back(K.left_mult(B.t.col(r)));
    }
    QuotientSpace W = balanced_pair(B.KK, rt, trivial_quotient(KS), lt);
    std::string w;
    for (std::size_t k = 0; k < dk && w.empty(); ++k) {
      SparseVec lhs = W.project.apply(splice(X.trans.col(k), d2, 0, 1, B.Delta));
      SparseVec rhs = W.project.apply(splice(B.Delta.col(k), d2, 1, 1, X.trans));
      if (lhs != rhs) w = "k=" + lab(KS, k);
    }
    rep.add("translation identity k⁻₍₁₎⊗k⁻₍₂₎⊗k⁺ = k₍₁₎⊗k₍₂₎⁻⊗k₍₂₎⁺", w.empty(), w);
  }
  return rep;
}

}  // namespace

XHopfAlgebra assemble_xhopf(LeftBialgebroid B, LinMap trans) {
  const std::size_t dk = B.dimK();
  if (trans.cols() != dk || trans.rows() != dk * dk) throw ShapeError("translation must be K -> K⊗K");
  XHopfAlgebra X;
  X.trans = LinMap(B.K.space(), LinSpace::product({B.K.space(), B.K.space()}), trans.columns());
  X.B = std::move(B);
  return X;
}

CheckReport check_xhopf(XHopfAlgebra& X) {
  try {
    build_nu(X);
  } catch (const WellDefinednessError& e) {
    CheckReport rep;
    rep.add("nu and nuhat descend", false, e.what());
    return rep;
  }
  CheckReport rep;
  rep.add("nu and nuhat descend", true);
  rep.merge(check_nu(X));
  return rep;
}

XHopfAlgebra make_xhopf(LeftBialgebroid B, LinMap trans) {
  XHopfAlgebra X = assemble_xhopf(std::move(B), std::move(trans));
  build_nu(X);
  CheckReport rep = check_nu(X);
  for (const auto& c : rep.items) {
    if (c.passed) continue;
    if (c.name.rfind("nu", 0) == 0) throw InverseError(c.name + " fails at " + c.witness);
    throw AxiomError(c.name + " fails at " + c.witness);
  }
  return X;
}

CheckReport check_hopf(const FinAlgebra& H, const LinMap& Delta, const LinMap& eps, const LinMap& S) {
  CheckReport rep = check_algebra(H);
  const std::size_t n = H.dim();
  const std::vector<std::size_t> d2{n, n};
  const LinSpace& HS = H.space();
  LinMap m = H.mult_map();
  std::string wc, wu, wm, wa;
  for (std::size_t h = 0; h < n; ++h) {
    SparseVec x = Delta.col(h);
    if (wc.empty() && splice(x, d2, 0, 1, Delta) != splice(x, d2, 1, 1, Delta)) wc = lab(HS, h);
    SparseVec e = SparseVec::unit(h);
    if (wu.empty() && (splice(x, d2, 0, 1, eps) != e || splice(x, d2, 1, 1, eps) != e)) wu = lab(HS, h);
    SparseVec ee = H.unit().scaled(eps.col(h).at(0));
    if (wa.empty() && (m.apply(splice(x, d2, 0, 1, S)) != ee || m.apply(splice(x, d2, 1, 1, S)) != ee))
      wa = lab(HS, h);
    for (std::size_t g = 0; g < n && wm.empty(); ++g) {
      SparseVec lhs = Delta.apply(H.mul_basis(h, g));
      SparseVec rhs = tensor_power_mul(H, 2, x, Delta.col(g));
      if (lhs != rhs || eps.apply(H.mul_basis(h, g)) != SparseVec::unit(0, eps.col(h).at(0) * eps.col(g).at(0)))
        wm = "(" + lab(HS, h) + "," + lab(HS, g) + ")";
    }
  }
  if (Delta.apply(H.unit()) != kron(H.unit(), H.unit(), n) || eps.apply(H.unit()) != SparseVec::unit(0))
    wm = "unit";
  rep.add("Hopf coassociativity", wc.empty(), wc);
  rep.add("Hopf counit", wu.empty(), wu);
  rep.add("Hopf Delta, eps algebra maps", wm.empty(), wm);
  rep.add("antipode", wa.empty(), wa);
  return rep;
}

XHopfAlgebra from_hopf(const FinAlgebra& H, const LinMap& Delta, const LinMap& eps, const LinMap& S) {
  throw_first(check_hopf(H, Delta, eps, S));
  FinAlgebra R = scalars();
  LinMap st(R.space(), H.space(), {H.unit()});
  const std::size_t n = H.dim();
  LinMap trans = ambient_map(H.space(), LinSpace::product({H.space(), H.space()}),
                             [&](const std::vector<std::size_t>& d) {
                               return splice(Delta.col(d[0]), {n, n}, 1, 1, S);
                             });
  LinMap e(H.space(), R.space(), eps.columns());
  return make_xhopf(make_bialgebroid(H, R, st, st, Delta, e), trans);
}

CheckReport check_right_character(const XHopfAlgebra& X, const LinMap& delta) {
  const LeftBialgebroid& B = X.B;
  const FinAlgebra& K = B.K;
  const FinAlgebra& R = B.R;
  if (delta.cols() != K.dim() || delta.rows() != R.dim()) throw ShapeError("delta must be K -> R");
  CheckReport rep;
  std::string w1, w2;
  for (std::size_t k = 0; k < K.dim(); ++k) {
    for (std::size_t r = 0; r < R.dim() && w1.empty(); ++r) {
      SparseVec lhs = delta.apply(K.mul(SparseVec::unit(k), B.s.col(r)));
      SparseVec rhs = R.mul(delta.col(k), SparseVec::unit(r));
      if (lhs != rhs) w1 = "k=" + lab(K.space(), k) + " r=" + lab(R.space(), r);
    }
    for (std::size_t k2 = 0; k2 < K.dim() && w2.empty(); ++k2) {
      SparseVec lhs = delta.apply(K.mul_basis(k, k2));
      SparseVec rhs = delta.apply(K.mul(B.s.apply(delta.col(k)), SparseVec::unit(k2)));
      if (lhs != rhs) w2 = "k1=" + lab(K.space(), k) + " k2=" + lab(K.space(), k2);
    }
  }
  rep.add("char-1 delta(k s(r)) = delta(k) r", w1.empty(), w1);
  rep.add("char-2 delta(k1 k2) = delta(s(delta(k1)) k2)", w2.empty(), w2);
  bool c3 = delta.apply(K.unit()) == R.unit();
  rep.add("char-3 delta(1) = 1", c3, c3 ? "" : delta.apply(K.unit()).str(&R.space()));
  return rep;
}

LinMap make_right_character(const XHopfAlgebra& X, const LinMap& delta) {
  throw_first(check_right_character(X, delta));
  return LinMap(X.B.K.space(), X.B.R.space(), delta.columns());
}

bool is_grouplike(const XHopfAlgebra& X, const SparseVec& sigma, std::string* why) {
  const LeftBialgebroid& B = X.B;
  SparseVec l = B.KK.project.apply(B.Delta.apply(sigma));
  SparseVec r = B.KK.project.apply(kron(sigma, sigma, B.dimK()));
  if (l != r) {
    if (why) *why = "Delta(sigma) = " + l.str(&B.KK.quotient) + " but sigma⊗sigma = " + r.str(&B.KK.quotient);
    return false;
  }
  SparseVec e = B.eps.apply(sigma);
  if (e != B.R.unit()) {
    if (why) *why = "eps(sigma) = " + e.str(&B.R.space());
    return false;
  }
  return true;
}

std::vector<SparseVec> grouplikes(const XHopfAlgebra& X, const std::vector<SparseVec>& candidates) {
  std::vector<SparseVec> out;
  for (const auto& c : candidates)
    if (is_grouplike(X, c)) out.push_back(c);
  return out;
}

}  // namespace xhc
