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

#ifndef XHC_LINALG_HPP
#define XHC_LINALG_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xhc/scalar.hpp"

namespace xhc {

/// A based vector space. Product spaces keep their factors so that basis
/// indices can be decoded mixed-radix (last factor fastest).
class LinSpace {
public:
  LinSpace() = default;
  explicit LinSpace(std::size_t dim, const std::string& prefix = "e");
  explicit LinSpace(std::vector<std::string> labels);
  static LinSpace product(const std::vector<LinSpace>& factors);

  std::size_t dim() const { return dim_; }
  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;

  /// Flattened factor dimensions; a simple space reports {dim}.
  std::vector<std::size_t> radix() const;
  std::size_t arity() const { return factors_.empty() ? 1 : factors_.size(); }
  const LinSpace& factor(std::size_t i) const;

  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& digits) const;

private:
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<LinSpace> factors_;
};

/// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t i, Scalar c = Scalar(1));
  static SparseVec from_unsorted(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  Scalar at(std::size_t i) const;
  std::size_t max_index() const { return e_.empty() ? 0 : e_.back().first; }

  /// this += c * o
  void axpy(const Scalar& c, const SparseVec& o);
  SparseVec scaled(const Scalar& c) const;
  SparseVec& operator+=(const SparseVec& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    axpy(Scalar(-1), o);
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  /// `c0*e3 + (1 - z)*e7`, labels from `space` when given.
  std::string str(const LinSpace* space = nullptr) const;

private:
  std::vector<Entry> e_;
};

/// Order-independent accumulation of sparse terms.
class Accumulator {
public:
  void add(std::size_t i, const Scalar& c);
  void add(const SparseVec& v, const Scalar& c = Scalar(1));
  SparseVec finish();

private:
  std::unordered_map<std::size_t, Scalar> terms_;
};

/// Sparse tensor product of vectors over mixed-radix index spaces.
SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t dim_b);
SparseVec kron_all(const std::vector<SparseVec>& parts, const std::vector<std::size_t>& dims);

/// Linear map stored column-wise.
class LinMap {
public:
  LinMap() = default;
  LinMap(LinSpace src, LinSpace tgt);
  LinMap(LinSpace src, LinSpace tgt, std::vector<SparseVec> cols);
  static LinMap identity(const LinSpace& s);
  static LinMap zero(const LinSpace& src, const LinSpace& tgt);

  const LinSpace& source() const { return src_; }
  const LinSpace& target() const { return tgt_; }
  std::size_t rows() const { return tgt_.dim(); }
  std::size_t cols() const { return src_.dim(); }

  const SparseVec& col(std::size_t j) const { return cols_[j]; }
  void set_col(std::size_t j, SparseVec v);
  const std::vector<SparseVec>& columns() const { return cols_; }
  Scalar entry(std::size_t i, std::size_t j) const { return cols_[j].at(i); }

  SparseVec apply(const SparseVec& v) const;
  LinMap transpose() const;
  LinMap scaled(const Scalar& c) const;
  bool is_identity() const;
  bool is_zero() const;

  /// First column index where the maps differ, or -1.
  long first_difference(const LinMap& o) const;

  LinMap& operator+=(const LinMap& o);
  LinMap& operator-=(const LinMap& o);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.cols_ == b.cols_;
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

private:
  LinSpace src_, tgt_;
  std::vector<SparseVec> cols_;
};

/// outer ∘ inner
LinMap compose(const LinMap& outer, const LinMap& inner);
LinMap kron(const LinMap& a, const LinMap& b);
LinMap power(const LinMap& m, std::size_t k);

/// Incrementally maintained row-echelon basis. Each stored row has leading
/// coefficient 1 at its pivot, which is its smallest index. Optional tags
/// track the combination of inserted vectors that produced a row.
class Echelon {
public:
  explicit Echelon(bool track_tags = false) : track_(track_tags) {}

  /// Inserts v; returns true when v was independent. When dependent and
  /// tags are tracked, *dependency receives the tag of the zero residual.
  bool insert(const SparseVec& v, const SparseVec& tag = {}, SparseVec* dependency = nullptr);
  /// Residual of v after eliminating every pivot (supported on non-pivots).
  SparseVec reduce(const SparseVec& v, SparseVec* tag = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t i) const { return rows_.count(i) != 0; }
  std::vector<std::size_t> pivots() const;
  std::vector<SparseVec> rows() const;

private:
  bool track_;
  std::map<std::size_t, SparseVec> rows_;
  std::map<std::size_t, SparseVec> tags_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<SparseVec> kernel;  // in source coordinates
  std::vector<SparseVec> image;   // in target coordinates
};

/// Fraction-exact rank, kernel basis and image basis of a map.
RankKernel rank_kernel(const LinMap& m);
std::size_t rank(const LinMap& m);

/// Coordinates of v in the span of basis (which must be independent);
/// returns false when v is outside the span.
bool solve_in_span(const std::vector<SparseVec>& basis, const SparseVec& v, SparseVec* coords);

/// A quotient of `ambient` with chosen projection and section. Quotients
/// built by make_quotient pick non-pivot ambient basis vectors as
/// representatives, so section columns are unit vectors (`reps`).
struct QuotientSpace {
  LinSpace ambient;
  LinSpace quotient;
  LinMap project;  // ambient -> quotient
  LinMap section;  // quotient -> ambient
  std::vector<std::size_t> reps;

  std::size_t dim() const { return quotient.dim(); }
  /// Projection of a single ambient basis vector.
  const SparseVec& project_basis(std::size_t i) const { return project.col(i); }
  SparseVec project_vec(const SparseVec& v) const { return project.apply(v); }
  /// Spanning set of the relation subspace: e_j - S P e_j over non-reps.
  std::vector<SparseVec> relation_span() const;
};

QuotientSpace make_quotient(const LinSpace& ambient, const std::vector<SparseVec>& relations);
QuotientSpace trivial_quotient(const LinSpace& ambient);
/// Further quotient of q.quotient by relations, re-expressed over q.ambient.
QuotientSpace refine(const QuotientSpace& q, const std::vector<SparseVec>& relations);
/// Quotient of a.ambient ⊗ b.ambient by ker(Pa)⊗B + A⊗ker(Pb).
QuotientSpace tensor(const QuotientSpace& a, const QuotientSpace& b);

/// tgt.project ∘ f ∘ src.section, after verifying that f sends the kernel
/// of src.project into the kernel of tgt.project. Throws
/// WellDefinednessError with a violating relation vector otherwise.
LinMap induced_map(const LinMap& f, const QuotientSpace& src, const QuotientSpace& tgt);

}  // namespace xhc

#endif
