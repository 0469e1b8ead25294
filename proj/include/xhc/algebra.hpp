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

#ifndef XHC_ALGEBRA_HPP
#define XHC_ALGEBRA_HPP

#include <vector>

#include "xhc/linalg.hpp"
#include "xhc/report.hpp"

namespace xhc {

/// Finite-dimensional unital algebra given by structure constants.
/// table[i * dim + j] = e_i e_j.
class FinAlgebra {
public:
  FinAlgebra() = default;
  FinAlgebra(LinSpace space, std::vector<SparseVec> table, SparseVec unit);

  const LinSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const SparseVec& unit() const { return unit_; }
  const SparseVec& mul_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<SparseVec>& table() const { return table_; }

  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  /// x ↦ a x and x ↦ x a.
  LinMap left_mult(const SparseVec& a) const;
  LinMap right_mult(const SparseVec& a) const;
  /// The multiplication map A ⊗ A -> A.
  LinMap mult_map() const;

private:
  LinSpace space_;
  std::vector<SparseVec> table_;
  SparseVec unit_;
};

CheckReport check_algebra(const FinAlgebra& A);

/// Factorwise product of two vectors of A^{⊗n}.
SparseVec tensor_power_mul(const FinAlgebra& A, std::size_t n, const SparseVec& x, const SparseVec& y);
/// Factorwise product of vectors from a product of algebras.
SparseVec tensor_mul(const std::vector<const FinAlgebra*>& algs, const SparseVec& x, const SparseVec& y);
/// Builds and certifies; throws AxiomError naming the violating tuple.
FinAlgebra make_algebra(LinSpace space, std::vector<SparseVec> table, SparseVec unit);

FinAlgebra opposite(const FinAlgebra& A);
FinAlgebra tensor_algebra(const FinAlgebra& A, const FinAlgebra& B);
/// The ground field as a 1-dimensional algebra.
FinAlgebra scalars();

/// Multiplicativity and unitality of f on basis pairs. When g is given,
/// also checks that images of f and g commute elementwise.
CheckReport check_algebra_hom(const LinMap& f, const FinAlgebra& A, const FinAlgebra& B,
                              const LinMap* g = nullptr);
/// Anti-multiplicativity variant f(ab) = f(b)f(a), used for maps out of A^op.
CheckReport check_algebra_antihom(const LinMap& f, const FinAlgebra& A, const FinAlgebra& B);

/// A bimodule over a base algebra, given by its action operators on a basis
/// of the base: left[r](x) = r·x, right[r](x) = x·r.
struct Bimodule {
  LinSpace carrier;
  std::vector<LinMap> left;
  std::vector<LinMap> right;
};

/// Bimodule axioms over R: commuting actions, unital, associative.
CheckReport check_bimodule(const Bimodule& M, const FinAlgebra& R);

/// Iterated balanced tensor product of the factors over their common base.
QuotientSpace balanced_tensor(const std::vector<Bimodule>& factors);
/// Right action on the last factor descended to a balanced tensor.
std::vector<LinMap> right_actions_on(const QuotientSpace& q, const Bimodule& last);
std::vector<LinMap> left_actions_on(const QuotientSpace& q, const Bimodule& first);

}  // namespace xhc

#endif
