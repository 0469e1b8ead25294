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

#include "xhc/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "xhc/errors.hpp"

namespace xhc {

// ---------------------------------------------------------------- LinSpace

LinSpace::LinSpace(std::size_t dim, const std::string& prefix) : dim_(dim) {
  auto v = std::make_shared<std::vector<std::string>>();
  v->reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v->push_back(prefix + std::to_string(i));
  labels_ = std::move(v);
}

LinSpace::LinSpace(std::vector<std::string> labels) : dim_(labels.size()) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ShapeError("duplicate basis label");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

LinSpace LinSpace::product(const std::vector<LinSpace>& factors) {
  LinSpace out;
  out.dim_ = 1;
  for (const auto& f : factors) {
    if (f.factors_.empty()) {
      out.factors_.push_back(f);
    } else {
      for (const auto& g : f.factors_) out.factors_.push_back(g);
    }
    out.dim_ *= f.dim_;
  }
  if (out.factors_.size() == 1) return out.factors_[0];
  return out;
}

std::string LinSpace::label(std::size_t i) const {
  if (i >= dim_) throw ShapeError("basis index out of range");
  if (factors_.empty()) return (*labels_)[i];
  auto d = decode(i);
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) s += "⊗";
    s += factors_[k].label(d[k]);
  }
  return s;
}

std::vector<std::string> LinSpace::labels() const {
  std::vector<std::string> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(label(i));
  return out;
}

std::vector<std::size_t> LinSpace::radix() const {
  if (factors_.empty()) return {dim_};
  std::vector<std::size_t> r;
  for (const auto& f : factors_) r.push_back(f.dim_);
  return r;
}

const LinSpace& LinSpace::factor(std::size_t i) const {
  if (factors_.empty()) {
    if (i != 0) throw ShapeError("factor index out of range");
    return *this;
  }
  return factors_.at(i);
}

std::vector<std::size_t> LinSpace::decode(std::size_t index) const {
  auto r = radix();
  std::vector<std::size_t> d(r.size());
  for (std::size_t k = r.size(); k-- > 0;) {
    d[k] = index % r[k];
    index /= r[k];
  }
  return d;
}

std::size_t LinSpace::encode(const std::vector<std::size_t>& digits) const {
  auto r = radix();
  if (digits.size() != r.size()) throw ShapeError("wrong tensor arity");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (digits[k] >= r[k]) throw ShapeError("digit out of range");
    idx = idx * r[k] + digits[k];
  }
  return idx;
}

// --------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(std::size_t i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& en : entries) {
    if (!v.e_.empty() && v.e_.back().first == en.first) {
      v.e_.back().second += en.second;
      if (v.e_.back().second.is_zero()) v.e_.pop_back();
    } else if (!en.second.is_zero()) {
      v.e_.push_back(std::move(en));
    }
  }
  return v;
}

Scalar SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& a, std::size_t k) { return a.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return Scalar();
}

void SparseVec::axpy(const Scalar& c, const SparseVec& o) {
  if (c.is_zero() || o.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec v;
  if (c.is_zero()) return v;
  v.e_.reserve(e_.size());
  for (const auto& [i, x] : e_) v.e_.emplace_back(i, x * c);
  return v;
}

std::string SparseVec::str(const LinSpace* space) const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, x] : e_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.str() << ")*";
    if (space) {
      os << space->label(i);
    } else {
      os << "e" << i;
    }
  }
  return os.str();
}

void Accumulator::add(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(i, c);
  if (!fresh) it->second += c;
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.entries()) add(i, c.is_one() ? x : x * c);
}

SparseVec Accumulator::finish() {
  std::vector<SparseVec::Entry> en;
  en.reserve(terms_.size());
  for (auto& [i, x] : terms_)
    if (!x.is_zero()) en.emplace_back(i, std::move(x));
  terms_.clear();
  return SparseVec::from_unsorted(std::move(en));
}

SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t dim_b) {
  std::vector<SparseVec::Entry> en;
  en.reserve(a.nnz() * b.nnz());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) en.emplace_back(i * dim_b + j, x * y);
  return SparseVec::from_unsorted(std::move(en));
}

SparseVec kron_all(const std::vector<SparseVec>& parts, const std::vector<std::size_t>& dims) {
  if (parts.size() != dims.size()) throw ShapeError("kron arity mismatch");
  SparseVec acc = SparseVec::unit(0);
  for (std::size_t k = 0; k < parts.size(); ++k) acc = kron(acc, parts[k], dims[k]);
  return acc;
}

// ------------------------------------------------------------------ LinMap

LinMap::LinMap(LinSpace src, LinSpace tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)), cols_(src_.dim()) {}

LinMap::LinMap(LinSpace src, LinSpace tgt, std::vector<SparseVec> cols)
    : src_(std::move(src)), tgt_(std::move(tgt)), cols_(std::move(cols)) {
  if (cols_.size() != src_.dim()) throw ShapeError("column count does not match source");
  for (const auto& c : cols_)
    if (!c.empty() && c.max_index() >= tgt_.dim()) throw ShapeError("entry outside target");
}

LinMap LinMap::identity(const LinSpace& s) {
  LinMap m(s, s);
  for (std::size_t j = 0; j < s.dim(); ++j) m.cols_[j] = SparseVec::unit(j);
  return m;
}

LinMap LinMap::zero(const LinSpace& src, const LinSpace& tgt) { return LinMap(src, tgt); }

void LinMap::set_col(std::size_t j, SparseVec v) {
  if (j >= cols_.size()) throw ShapeError("column out of range");
  if (!v.empty() && v.max_index() >= tgt_.dim()) throw ShapeError("entry outside target");
  cols_[j] = std::move(v);
}

SparseVec LinMap::apply(const SparseVec& v) const {
  if (!v.empty() && v.max_index() >= src_.dim()) throw ShapeError("vector outside source");
  if (v.nnz() == 1) return cols_[v.entries()[0].first].scaled(v.entries()[0].second);
  Accumulator acc;
  for (const auto& [j, x] : v.entries()) acc.add(cols_[j], x);
  return acc.finish();
}

LinMap LinMap::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> rowsv(tgt_.dim());
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, x] : cols_[j].entries()) rowsv[i].emplace_back(j, x);
  std::vector<SparseVec> cols;
  cols.reserve(rowsv.size());
  for (auto& r : rowsv) cols.push_back(SparseVec::from_unsorted(std::move(r)));
  return LinMap(tgt_, src_, std::move(cols));
}

LinMap LinMap::scaled(const Scalar& c) const {
  LinMap m(src_, tgt_);
  for (std::size_t j = 0; j < cols_.size(); ++j) m.cols_[j] = cols_[j].scaled(c);
  return m;
}

bool LinMap::is_identity() const {
  if (src_.dim() != tgt_.dim()) return false;
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (cols_[j] != SparseVec::unit(j)) return false;
  return true;
}

bool LinMap::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

long LinMap::first_difference(const LinMap& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw ShapeError("comparing maps of different shape");
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (cols_[j] != o.cols_[j]) return static_cast<long>(j);
  return -1;
}

LinMap& LinMap::operator+=(const LinMap& o) {
  if (rows() != o.rows() || cols() != o.cols()) throw ShapeError("adding maps of different shape");
  for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] += o.cols_[j];
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& o) {
  if (rows() != o.rows() || cols() != o.cols()) throw ShapeError("subtracting maps of different shape");
  for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] -= o.cols_[j];
  return *this;
}

LinMap compose(const LinMap& outer, const LinMap& inner) {
  if (outer.cols() != inner.rows()) throw ShapeError("composition dimension mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(inner.cols());
  for (std::size_t j = 0; j < inner.cols(); ++j) cols.push_back(outer.apply(inner.col(j)));
  return LinMap(inner.source(), outer.target(), std::move(cols));
}

LinMap kron(const LinMap& a, const LinMap& b) {
  LinSpace src = LinSpace::product({a.source(), b.source()});
  LinSpace tgt = LinSpace::product({a.target(), b.target()});
  std::vector<SparseVec> cols;
  cols.reserve(src.dim());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(kron(a.col(i), b.col(j), b.rows()));
  return LinMap(src, tgt, std::move(cols));
}

LinMap power(const LinMap& m, std::size_t k) {
  if (m.rows() != m.cols()) throw ShapeError("power of a non-square map");
  LinMap out = LinMap::identity(m.source());
  for (std::size_t i = 0; i < k; ++i) out = compose(m, out);
  return out;
}

// ----------------------------------------------------------------- Echelon

namespace {

using Work = std::map<std::size_t, Scalar>;

Work to_work(const SparseVec& v) {
  Work w;
  for (const auto& [i, x] : v.entries()) w.emplace_hint(w.end(), i, x);
  return w;
}

SparseVec from_work(Work& w) {
  std::vector<SparseVec::Entry> en;
  en.reserve(w.size());
  for (auto& [i, x] : w) en.emplace_back(i, std::move(x));
  return SparseVec::from_unsorted(std::move(en));
}

void sub_into(Work& w, const Scalar& c, const SparseVec& row) {
  for (const auto& [j, y] : row.entries()) {
    auto it = w.find(j);
    if (it == w.end()) {
      w.emplace(j, -(c * y));
    } else {
      it->second -= c * y;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* tag) const {
  Work w = to_work(v);
  Accumulator tacc;
  if (tag) tacc.add(*tag);
  auto it = w.begin();
  while (it != w.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t p = it->first;
    Scalar c = it->second;
    sub_into(w, c, r->second);
    if (tag && track_) tacc.add(tags_.at(p), -c);
    it = w.upper_bound(p);
  }
  if (tag) *tag = tacc.finish();
  return from_work(w);
}

bool Echelon::insert(const SparseVec& v, const SparseVec& tag, SparseVec* dependency) {
  SparseVec t = tag;
  SparseVec r = reduce(v, track_ ? &t : nullptr);
  if (r.empty()) {
    if (dependency) *dependency = t;
    return false;
  }
  std::size_t p = r.entries()[0].first;
  Scalar inv = r.entries()[0].second.inverse();
  rows_.emplace(p, r.scaled(inv));
  if (track_) tags_.emplace(p, t.scaled(inv));
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& [i, r] : rows_) p.push_back(i);
  return p;
}

std::vector<SparseVec> Echelon::rows() const {
  std::vector<SparseVec> out;
  for (const auto& [i, r] : rows_) out.push_back(r);
  return out;
}

RankKernel rank_kernel(const LinMap& m) {
  Echelon e(true);
  RankKernel rk;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVec dep;
    if (e.insert(m.col(j), SparseVec::unit(j), &dep)) {
      rk.image.push_back(m.col(j));
    } else {
      rk.kernel.push_back(dep);
    }
  }
  rk.rank = e.rank();
  return rk;
}

std::size_t rank(const LinMap& m) {
  Echelon e;
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.col(j));
  return e.rank();
}

bool solve_in_span(const std::vector<SparseVec>& basis, const SparseVec& v, SparseVec* coords) {
  Echelon e(true);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!e.insert(basis[j], SparseVec::unit(j))) throw ShapeError("solve_in_span: dependent basis");
  SparseVec t;
  SparseVec r = e.reduce(v, &t);
  if (!r.empty()) return false;
  // v - sum t_j basis_j = 0 after reduction, with t accumulated negatively
  if (coords) *coords = t.scaled(Scalar(-1));
  return true;
}

// ---------------------------------------------------------------- Quotient

std::vector<SparseVec> QuotientSpace::relation_span() const {
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < ambient.dim(); ++j) {
    SparseVec v = SparseVec::unit(j) - section.apply(project.col(j));
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

namespace {

LinSpace rep_space(const LinSpace& ambient, const std::vector<std::size_t>& reps) {
  std::vector<std::string> labels;
  labels.reserve(reps.size());
  for (auto r : reps) labels.push_back(ambient.label(r));
  return LinSpace(std::move(labels));
}

}  // namespace

QuotientSpace make_quotient(const LinSpace& ambient, const std::vector<SparseVec>& relations) {
  Echelon e;
  for (const auto& r : relations) {
    if (!r.empty() && r.max_index() >= ambient.dim()) throw ShapeError("relation outside ambient");
    e.insert(r);
  }
  QuotientSpace q;
  q.ambient = ambient;
  std::vector<long> qidx(ambient.dim(), -1);
  for (std::size_t j = 0; j < ambient.dim(); ++j) {
    if (!e.is_pivot(j)) {
      qidx[j] = static_cast<long>(q.reps.size());
      q.reps.push_back(j);
    }
  }
  q.quotient = rep_space(ambient, q.reps);
  q.project = LinMap(ambient, q.quotient);
  for (std::size_t j = 0; j < ambient.dim(); ++j) {
    if (qidx[j] >= 0) {
      q.project.set_col(j, SparseVec::unit(static_cast<std::size_t>(qidx[j])));
      continue;
    }
    SparseVec r = e.reduce(SparseVec::unit(j));
    std::vector<SparseVec::Entry> en;
    for (const auto& [i, x] : r.entries()) en.emplace_back(static_cast<std::size_t>(qidx[i]), x);
    q.project.set_col(j, SparseVec::from_unsorted(std::move(en)));
  }
  q.section = LinMap(q.quotient, ambient);
  for (std::size_t i = 0; i < q.reps.size(); ++i) q.section.set_col(i, SparseVec::unit(q.reps[i]));
  return q;
}

QuotientSpace trivial_quotient(const LinSpace& ambient) {
  QuotientSpace q;
  q.ambient = ambient;
  q.quotient = ambient;
  q.project = LinMap::identity(ambient);
  q.section = LinMap::identity(ambient);
  q.reps.resize(ambient.dim());
  for (std::size_t i = 0; i < ambient.dim(); ++i) q.reps[i] = i;
  return q;
}

QuotientSpace refine(const QuotientSpace& q, const std::vector<SparseVec>& relations) {
  QuotientSpace q2 = make_quotient(q.quotient, relations);
  QuotientSpace out;
  out.ambient = q.ambient;
  for (auto r : q2.reps) out.reps.push_back(q.reps.at(r));
  out.quotient = rep_space(q.ambient, out.reps);
  std::vector<SparseVec> pc;
  pc.reserve(q.ambient.dim());
  for (std::size_t j = 0; j < q.ambient.dim(); ++j) pc.push_back(q2.project.apply(q.project.col(j)));
  out.project = LinMap(q.ambient, out.quotient, std::move(pc));
  std::vector<SparseVec> sc;
  for (std::size_t i = 0; i < q2.reps.size(); ++i) sc.push_back(q.section.col(q2.reps[i]));
  out.section = LinMap(out.quotient, q.ambient, std::move(sc));
  return out;
}

QuotientSpace tensor(const QuotientSpace& a, const QuotientSpace& b) {
  QuotientSpace out;
  out.ambient = LinSpace::product({a.ambient, b.ambient});
  for (auto ra : a.reps)
    for (auto rb : b.reps) out.reps.push_back(ra * b.ambient.dim() + rb);
  out.quotient = rep_space(out.ambient, out.reps);
  LinMap p = kron(a.project, b.project);
  LinMap s = kron(a.section, b.section);
  out.project = LinMap(out.ambient, out.quotient, p.columns());
  out.section = LinMap(out.quotient, out.ambient, s.columns());
  return out;
}

LinMap induced_map(const LinMap& f, const QuotientSpace& src, const QuotientSpace& tgt) {
  if (f.cols() != src.ambient.dim() || f.rows() != tgt.ambient.dim())
    throw ShapeError("induced_map: map does not match quotient ambients");
  std::vector<SparseVec> cols;
  cols.reserve(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i)
    cols.push_back(tgt.project.apply(f.apply(src.section.col(i))));
  LinMap g(src.quotient, tgt.quotient, std::move(cols));
  for (std::size_t j = 0; j < src.ambient.dim(); ++j) {
    SparseVec lhs = tgt.project.apply(f.col(j));
    SparseVec rhs = g.apply(src.project.col(j));
    if (lhs != rhs) {
      SparseVec rel = SparseVec::unit(j) - src.section.apply(src.project.col(j));
      throw WellDefinednessError("operator does not descend: relation " + rel.str(&src.ambient) +
                                 " maps to " + (lhs - rhs).str(&tgt.quotient));
    }
  }
  return g;
}

}  // namespace xhc
