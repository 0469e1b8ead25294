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

#include "doctest.h"
#include "oracle.hpp"
#include "xhc/errors.hpp"

using namespace xhc;

TEST_CASE("cyclotomic polynomials match the oracle") {
  for (int N : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
    auto ours = cyclotomic_polynomial(N);
    auto ref = oracle::cyclotomic(N);
    CHECK(ours == ref);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20261014);
  for (int N : {1, 3, 4, 5, 8, 12}) {
    const CyclotomicField* F = N > 1 ? CyclotomicField::get(N) : nullptr;
    const int deg = oracle::phi_degree(N);
    for (int it = 0; it < 1000; ++it) {
      Scalar a = oracle::random_scalar(rng, F, deg), b = oracle::random_scalar(rng, F, deg),
             c = oracle::random_scalar(rng, F, deg);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == Scalar(0L));
      REQUIRE(a * Scalar(1L) == a);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
      REQUIRE(Scalar::parse(a.str(), F) == a);
      // the embedding z -> exp(2πi/N) is a ring map
      auto lhs = oracle::embed(a * b, N), rhs = oracle::embed(a, N) * oracle::embed(b, N);
      REQUIRE(std::abs(lhs - rhs) < 1e-9L * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("root of unity has exact order N") {
  for (int N : {3, 4, 6, 7}) {
    const CyclotomicField* F = CyclotomicField::get(N);
    Scalar z = Scalar::root(F), p(1L);
    for (int k = 1; k < N; ++k) {
      p *= z;
      CHECK_FALSE(p.is_one());
      CHECK(Scalar::root_power(F, k) == p);
    }
    CHECK((p * z).is_one());
    CHECK(Scalar::root_power(F, -1) * z == Scalar(1L));
  }
}

TEST_CASE("scalar text") {
  const CyclotomicField* F = CyclotomicField::get(3);
  CHECK(Scalar::parse("-2/3*z^2", F).str() == "2/3 + 2/3*z");  // z² = -1 - z
  CHECK(Scalar::parse("1/2", nullptr) == Scalar::rational(1, 2));
  CHECK_THROWS_AS(Scalar(0L).inverse(), ArithmeticError);
  CHECK_THROWS(Scalar::parse("1 +", F));
  CHECK_THROWS(Scalar::parse("z", nullptr));
}
