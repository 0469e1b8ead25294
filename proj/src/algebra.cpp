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

#include "xhc/algebra.hpp"

#include "xhc/errors.hpp"
#include "xhc/tensor.hpp"

namespace xhc {

FinAlgebra::FinAlgebra(LinSpace space, std::vector<SparseVec> table, SparseVec unit)
    : space_(std::move(space)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = space_.dim();
  if (table_.size() != n * n) throw ShapeError("multiplication table is not dim x dim");
  for (const auto& v : table_)
    if (!v.empty() && v.max_index() >= n) throw ShapeError("product outside algebra");
  if (!unit_.empty() && unit_.max_index() >= n) throw ShapeError("unit outside algebra");
}

SparseVec FinAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  if (a.nnz() == 1 && b.nnz() == 1)
    return mul_basis(a.entries()[0].first, b.entries()[0].first)
        .scaled(a.entries()[0].second * b.entries()[0].second);
  Accumulator acc;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) acc.add(mul_basis(i, j), x * y);
  return acc.finish();
}

LinMap FinAlgebra::left_mult(const SparseVec& a) const {
  LinMap m(space_, space_);
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(a, SparseVec::unit(j)));
  return m;
}

LinMap FinAlgebra::right_mult(const SparseVec& a) const {
  LinMap m(space_, space_);
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(SparseVec::unit(j), a));
  return m;
}

LinMap FinAlgebra::mult_map() const {
  return LinMap(LinSpace::product({space_, space_}), space_, table_);
}

SparseVec tensor_mul(const std::vector<const FinAlgebra*>& algs, const SparseVec& x, const SparseVec& y) {
  const std::size_t n = algs.size();
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> d(n);
    for (std::size_t k = n; k-- > 0;) {
      d[k] = idx % algs[k]->dim();
      idx /= algs[k]->dim();
    }
    return d;
  };
  Accumulator acc;
  for (const auto& [i, a] : x.entries()) {
    auto di = decode(i);
    for (const auto& [j, b] : y.entries()) {
      auto dj = decode(j);
      SparseVec v = SparseVec::unit(0);
      for (std::size_t k = 0; k < n; ++k) v = kron(v, algs[k]->mul_basis(di[k], dj[k]), algs[k]->dim());
      acc.add(v, a * b);
    }
  }
  return acc.finish();
}

SparseVec tensor_power_mul(const FinAlgebra& A, std::size_t n, const SparseVec& x, const SparseVec& y) {
  return tensor_mul(std::vector<const FinAlgebra*>(n, &A), x, y);
}

CheckReport check_algebra(const FinAlgebra& A) {
  CheckReport rep;
  const std::size_t n = A.dim();
  const LinSpace& S = A.space();
  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t k = 0; k < n && w.empty(); ++k) {
        SparseVec l = A.mul(A.mul_basis(i, j), SparseVec::unit(k));
        SparseVec r = A.mul(SparseVec::unit(i), A.mul_basis(j, k));
        if (l != r) w = "(" + S.label(i) + "," + S.label(j) + "," + S.label(k) + ")";
      }
  rep.add("associativity", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    SparseVec e = SparseVec::unit(i);
    if (A.mul(A.unit(), e) != e || A.mul(e, A.unit()) != e) w = S.label(i);
  }
  rep.add("unit law", w.empty(), w);
  return rep;
}

FinAlgebra make_algebra(LinSpace space, std::vector<SparseVec> table, SparseVec unit) {
  FinAlgebra A(std::move(space), std::move(table), std::move(unit));
  CheckReport rep = check_algebra(A);
  if (const Check* c = rep.first_failure()) throw AxiomError(c->name + " fails at " + c->witness);
  return A;
}

FinAlgebra opposite(const FinAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<SparseVec> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = A.mul_basis(j, i);
  return FinAlgebra(A.space(), std::move(t), A.unit());
}

FinAlgebra tensor_algebra(const FinAlgebra& A, const FinAlgebra& B) {
  const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
  std::vector<SparseVec> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = kron(A.mul_basis(i / nb, j / nb), B.mul_basis(i % nb, j % nb), nb);
  // opaque basis so that tensor powers of the result keep one digit per factor
  return FinAlgebra(LinSpace(LinSpace::product({A.space(), B.space()}).labels()), std::move(t),
                    kron(A.unit(), B.unit(), nb));
}

FinAlgebra scalars() {
  return FinAlgebra(LinSpace(std::vector<std::string>{"1"}), {SparseVec::unit(0)}, SparseVec::unit(0));
}

namespace {

void check_unital(const LinMap& f, const FinAlgebra& A, const FinAlgebra& B, CheckReport& rep) {
  SparseVec fu = f.apply(A.unit());
  rep.add("unital", fu == B.unit(), fu == B.unit() ? "" : "f(1) = " + fu.str(&B.space()));
}

}  // namespace

CheckReport check_algebra_hom(const LinMap& f, const FinAlgebra& A, const FinAlgebra& B,
                              const LinMap* g) {
  if (f.cols() != A.dim() || f.rows() != B.dim()) throw ShapeError("check_algebra_hom: shape");
  CheckReport rep;
  std::string w;
  for (std::size_t i = 0; i < A.dim() && w.empty(); ++i)
    for (std::size_t j = 0; j < A.dim() && w.empty(); ++j)
      if (f.apply(A.mul_basis(i, j)) != B.mul(f.col(i), f.col(j)))
        w = "(" + A.space().label(i) + "," + A.space().label(j) + ")";
  rep.add("multiplicative", w.empty(), w);
  check_unital(f, A, B, rep);
  if (g) {
    w.clear();
    for (std::size_t i = 0; i < f.cols() && w.empty(); ++i)
      for (std::size_t j = 0; j < g->cols() && w.empty(); ++j)
        if (B.mul(f.col(i), g->col(j)) != B.mul(g->col(j), f.col(i)))
          w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    rep.add("ranges commute", w.empty(), w);
  }
  return rep;
}

CheckReport check_algebra_antihom(const LinMap& f, const FinAlgebra& A, const FinAlgebra& B) {
  return check_algebra_hom(f, opposite(A), B);
}

CheckReport check_bimodule(const Bimodule& M, const FinAlgebra& R) {
  CheckReport rep;
  const std::size_t n = R.dim();
  if (M.left.size() != n || M.right.size() != n) throw ShapeError("bimodule: action count");
  std::string w;
  for (std::size_t a = 0; a < n && w.empty(); ++a)
    for (std::size_t b = 0; b < n && w.empty(); ++b) {
      if (compose(M.left[a], M.right[b]) != compose(M.right[b], M.left[a]))
        w = "commute (" + std::to_string(a) + "," + std::to_string(b) + ")";
      // (r_a r_b)·x = r_a·(r_b·x) and x·(r_a r_b) = (x·r_a)·r_b
      LinMap lab = LinMap::zero(M.carrier, M.carrier), rab = lab;
      for (const auto& [k, c] : R.mul_basis(a, b).entries()) {
        lab += M.left[k].scaled(c);
        rab += M.right[k].scaled(c);
      }
      if (w.empty() && lab != compose(M.left[a], M.left[b]))
        w = "left assoc (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (w.empty() && rab != compose(M.right[b], M.right[a]))
        w = "right assoc (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  rep.add("bimodule actions", w.empty(), w);
  LinMap lu = LinMap::zero(M.carrier, M.carrier), ru = lu;
  for (const auto& [k, c] : R.unit().entries()) {
    lu += M.left[k].scaled(c);
    ru += M.right[k].scaled(c);
  }
  rep.add("bimodule unital", lu.is_identity() && ru.is_identity());
  return rep;
}

std::vector<LinMap> right_actions_on(const QuotientSpace& q, const Bimodule& last) {
  std::vector<LinMap> out;
  std::size_t pos = q.ambient.arity() - 1;
  for (const auto& op : last.right) out.push_back(factor_op(q, pos, op));
  return out;
}

std::vector<LinMap> left_actions_on(const QuotientSpace& q, const Bimodule& first) {
  std::vector<LinMap> out;
  for (const auto& op : first.left) out.push_back(factor_op(q, 0, op));
  return out;
}

QuotientSpace balanced_tensor(const std::vector<Bimodule>& factors) {
  if (factors.empty()) throw ShapeError("balanced_tensor needs a factor");
  QuotientSpace acc = trivial_quotient(factors[0].carrier);
  std::vector<LinMap> right = factors[0].right;
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = balanced_pair(acc, right, trivial_quotient(factors[k].carrier), factors[k].left);
    if (k + 1 < factors.size()) right = right_actions_on(acc, factors[k]);
  }
  return acc;
}

}  // namespace xhc
