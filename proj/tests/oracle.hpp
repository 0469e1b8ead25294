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

// Test-side oracles. Nothing here calls the library's elimination code.

#ifndef XHC_TEST_ORACLE_HPP
#define XHC_TEST_ORACLE_HPP

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <random>
#include <vector>

#include "xhc/cyclic.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;  // row-major

/// Φ_N by exact division of x^N - 1 by Φ_d over proper divisors d.
inline std::vector<mpz_class> cyclotomic(int N) {
  std::vector<mpz_class> p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    std::vector<mpz_class> q = cyclotomic(d), out(p.size() - q.size() + 1, 0);
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
      out[i] = p[i + q.size() - 1];
      for (std::size_t j = 0; j < q.size(); ++j) p[i + j] -= out[i] * q[j];
    }
    p = out;
  }
  return p;
}

inline int phi_degree(int N) { return static_cast<int>(cyclotomic(N).size()) - 1; }

/// z ↦ exp(2πi/N) evaluation of a scalar.
inline std::complex<long double> embed(const xhc::Scalar& s, int N) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> z = std::polar(1.0L, 2 * pi / N), acc = 0, pw = 1;
  for (const auto& c : s.coefficients()) {
    acc += pw * static_cast<long double>(c.get_d());
    pw *= z;
  }
  return acc;
}

/// Multiplication by z^k on the power basis 1, z, ..., z^{φ-1}, as a φ x φ matrix.
inline Dense companion(int N) {
  auto c = cyclotomic(N);
  const int f = static_cast<int>(c.size()) - 1;
  Dense Z(f, std::vector<mpq_class>(f, 0));
  for (int j = 0; j + 1 < f; ++j) Z[j + 1][j] = 1;
  for (int i = 0; i < f; ++i) Z[i][f - 1] = -mpq_class(c[i]);
  return Z;
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<mpq_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

/// The Q-linear map underlying a Q(ζ_N)-linear map.
inline Dense realify(const xhc::LinMap& f, int N) {
  const int d = phi_degree(N);
  Dense Z = companion(N);
  std::vector<Dense> pw{Dense(d, std::vector<mpq_class>(d, 0))};
  for (int i = 0; i < d; ++i) pw[0][i][i] = 1;
  for (int k = 1; k < d; ++k) pw.push_back(mul(Z, pw.back()));
  Dense out(f.rows() * d, std::vector<mpq_class>(f.cols() * d, 0));
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (const auto& [i, x] : f.col(j).entries()) {
      const auto& c = x.coefficients();
      for (std::size_t k = 0; k < c.size(); ++k)
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s)
            if (pw[k][r][s] != 0) out[i * d + r][j * d + s] += c[k] * pw[k][r][s];
    }
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Dense& a) {
  std::vector<std::size_t> piv;
  if (a.empty()) return piv;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(Dense a) { return rref(a).size(); }

/// Columns spanning the kernel, as a cols x k matrix.
inline Dense kernel(Dense a, std::size_t cols) {
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> freec;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_piv[c]) freec.push_back(c);
  Dense K(cols, std::vector<mpq_class>(freec.size(), 0));
  for (std::size_t k = 0; k < freec.size(); ++k) {
    K[freec[k]][k] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) K[piv[r]][k] = -a[r][freec[k]];
  }
  return K;
}

inline Dense identity(std::size_t n) {
  Dense I(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

/// Σ (-1)^i d_i built from the cofaces, realified.
inline Dense coboundary(const xhc::CocyclicModule& cx, std::size_t n, int N) {
  Dense b;
  for (std::size_t i = 0; i < cx.cofaces[n].size(); ++i) {
    Dense d = realify(cx.cofaces[n][i], N);
    if (b.empty()) b = Dense(d.size(), std::vector<mpq_class>(d.empty() ? 0 : d[0].size(), 0));
    for (std::size_t r = 0; r < d.size(); ++r)
      for (std::size_t c = 0; c < d[r].size(); ++c)
        if (d[r][c] != 0) b[r][c] += (i % 2 ? -d[r][c] : d[r][c]);
  }
  return b;
}

/// HH^n = dim C^n - rank b_n - rank b_{n-1}, n = 0..nmax.
inline std::vector<std::size_t> hochschild_dims(const xhc::CocyclicModule& cx, std::size_t nmax, int N) {
  const std::size_t d = phi_degree(N);
  std::vector<std::size_t> rk, out;
  for (std::size_t n = 0; n <= nmax; ++n) rk.push_back(rank(coboundary(cx, n, N)) / d);
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(cx.dim(n) - rk[n] - (n ? rk[n - 1] : 0));
  return out;
}

/// HC^n from the λ-complex: λ_n = ker(1 - (-1)^n t_n).
inline std::vector<std::size_t> cyclic_dims(const xhc::CocyclicModule& cx, std::size_t nmax, int N) {
  const std::size_t d = phi_degree(N);
  std::vector<Dense> lam;
  for (std::size_t n = 0; n <= nmax + 1; ++n) {
    Dense T = realify(cx.cyclic[n], N), I = identity(T.size());
    for (std::size_t r = 0; r < T.size(); ++r)
      for (std::size_t c = 0; c < T.size(); ++c) I[r][c] -= (n % 2 ? -T[r][c] : T[r][c]);
    lam.push_back(kernel(I, T.size()));
  }
  std::vector<std::size_t> img;  // rank of b_n on λ_n
  for (std::size_t n = 0; n <= nmax; ++n) {
    Dense L = lam[n];
    img.push_back(L.empty() || L[0].empty() ? 0 : rank(mul(coboundary(cx, n, N), L)) / d);
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= nmax; ++n) {
    const std::size_t dl = lam[n].empty() ? 0 : lam[n][0].size() / d;
    out.push_back(dl - img[n] - (n ? img[n - 1] : 0));
  }
  return out;
}

/// Random sparse-ish scalar in Q(ζ_N) with small numerators and denominators.
inline xhc::Scalar random_scalar(std::mt19937_64& rng, const xhc::CyclotomicField* F, int N) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c(std::max(1, N));
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return F ? xhc::Scalar(F, c) : xhc::Scalar(c[0]);
}

inline xhc::SparseVec random_vec(std::mt19937_64& rng, std::size_t dim, const xhc::CyclotomicField* F, int N) {
  std::vector<xhc::SparseVec::Entry> e;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < dim; ++i)
    if (keep(rng)) e.emplace_back(i, random_scalar(rng, F, N));
  return xhc::SparseVec::from_unsorted(std::move(e));
}

}  // namespace oracle

#endif
