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

#include "xhc/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "xhc/errors.hpp"

namespace xhc {

namespace {

using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

void trim_poly(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials with a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out = a;
  if (q.empty() || b.empty()) return out;
  out.resize(std::max(out.size(), q.size() + b.size() - 1));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim_poly(out);
  return out;
}

// Polynomial long division over Q; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim_poly(a);
  }
  trim_poly(q);
  return {q, a};
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw ArithmeticError("conductor must be positive");
  // x^n - 1 = prod_{d | n} Phi_d
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

const CyclotomicField* CyclotomicField::get(int conductor) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return slot.get();
}

Scalar::Scalar(const CyclotomicField* f, std::vector<mpq_class> coef)
    : field_(f), coef_(std::move(coef)) {
  reduce();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::root(const CyclotomicField* f) { return root_power(f, 1); }

Scalar Scalar::root_power(const CyclotomicField* f, long k) {
  long n = f->conductor();
  k %= n;
  if (k < 0) k += n;
  std::vector<mpq_class> c(k + 1, 0);
  c[k] = 1;
  return Scalar(f, std::move(c));
}

void Scalar::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

void Scalar::reduce() {
  trim();
  if (!field_) {
    if (coef_.size() > 1) throw ArithmeticError("z used without a cyclotomic field");
    return;
  }
  const auto& phi = field_->phi();
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = coef_.size(); i-- > d;) {
    if (coef_[i] == 0) continue;
    mpq_class c = coef_[i];
    for (std::size_t j = 0; j < d; ++j) coef_[i - d + j] -= c * phi[j];
    coef_[i] = 0;
  }
  trim();
}

const CyclotomicField* Scalar::join(const Scalar& o) const {
  if (field_ && o.field_ && field_ != o.field_)
    throw ArithmeticError("scalars from different cyclotomic fields");
  return field_ ? field_ : o.field_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  field_ = join(o);
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), 0);
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  field_ = join(o);
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), 0);
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  field_ = join(o);
  if (coef_.empty() || o.coef_.empty()) {
    coef_.clear();
    return *this;
  }
  if (coef_.size() == 1 && o.coef_.size() == 1) {
    coef_[0] *= o.coef_[0];
    return *this;
  }
  std::vector<mpq_class> out(coef_.size() + o.coef_.size() - 1, 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coef_.size(); ++j) out[i + j] += coef_[i] * o.coef_[j];
  }
  coef_ = std::move(out);
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inversion of zero");
  if (coef_.size() == 1) return Scalar(field_, {1 / coef_[0]});
  RatPoly r0, r1 = coef_, s0, s1 = {1};
  for (const auto& c : field_->phi()) r0.push_back(mpq_class(c));
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  if (r0.size() != 1) throw InternalError("cyclotomic gcd is not constant");
  for (auto& c : s0) c /= r0[0];
  return Scalar(field_, s0);
}

std::string Scalar::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    const mpq_class& c = coef_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

struct ScalarLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected digits");
    return std::string(s.substr(b, pos - b));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("scalar '" + std::string(s) + "' at column " +
                     std::to_string(pos + 1) + ": " + what);
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const CyclotomicField* f) {
  ScalarLexer lx{text};
  std::vector<mpq_class> coef;
  bool any = false;
  bool uses_z = false;
  lx.skip();
  if (lx.pos == text.size()) lx.fail("empty scalar");
  while (true) {
    bool neg = false;
    if (lx.eat('-')) neg = true;
    else if (any && !lx.eat('+')) lx.fail("expected '+' or '-'");
    mpq_class c = 1;
    bool have_coef = false;
    if (lx.peek_digit()) {
      std::string num = lx.digits();
      std::string den = "1";
      if (lx.eat('/')) den = lx.digits();
      c = mpq_class(mpz_class(num), mpz_class(den));
      if (mpz_class(den) == 0) lx.fail("zero denominator");
      c.canonicalize();
      have_coef = true;
    }
    long power = 0;
    bool star = have_coef && lx.eat('*');
    if (lx.eat('z')) {
      uses_z = true;
      power = 1;
      if (lx.eat('^')) power = std::stol(lx.digits());
    } else if (star || !have_coef) {
      lx.fail("expected z");
    }
    if (neg) c = -c;
    if (coef.size() <= static_cast<std::size_t>(power)) coef.resize(power + 1, 0);
    coef[power] += c;
    any = true;
    lx.skip();
    if (lx.pos == text.size()) break;
  }
  if (uses_z && !f) lx.fail("z requires a cyclotomic field");
  Scalar out;
  out.field_ = f;
  out.coef_ = std::move(coef);
  out.reduce();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace xhc
