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

#ifndef XHC_SCALAR_HPP
#define XHC_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace xhc {

/// The cyclotomic field Q(z) = Q[z]/(Phi_N(z)). Instances are interned and
/// live for the whole process, so scalars hold a plain pointer.
class CyclotomicField {
public:
  static const CyclotomicField* get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_N, lowest degree first; monic.
  const std::vector<mpz_class>& phi() const { return phi_; }

private:
  explicit CyclotomicField(int n);
  int n_;
  std::vector<mpz_class> phi_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// Element of Q(zeta_N) stored as a fully reduced residue. A scalar without
/// a field is a rational and combines with any field.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : coef_{mpq_class(v)} { trim(); }  // NOLINT(implicit)
  explicit Scalar(const mpq_class& v) : coef_{v} { trim(); }
  Scalar(const CyclotomicField* f, std::vector<mpq_class> coef);

  static Scalar rational(long num, long den = 1);
  /// The root of unity z in Q(zeta_N).
  static Scalar root(const CyclotomicField* f);
  /// z^k with k taken mod N.
  static Scalar root_power(const CyclotomicField* f, long k);

  const CyclotomicField* field() const { return field_; }
  const std::vector<mpq_class>& coefficients() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  bool is_one() const { return coef_.size() == 1 && coef_[0] == 1; }
  bool is_rational() const { return coef_.size() <= 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;  // throws ArithmeticError on zero
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.coef_ == b.coef_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: monomials ascending in z, e.g. `1 - 2/3*z^2`.
  std::string str() const;
  /// Inverse of str(). Rational-only text yields a field-less scalar.
  static Scalar parse(std::string_view text, const CyclotomicField* f);

private:
  void trim();
  void reduce();
  const CyclotomicField* join(const Scalar& o) const;

  const CyclotomicField* field_ = nullptr;
  std::vector<mpq_class> coef_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace xhc

#endif
