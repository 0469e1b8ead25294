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
#include "xhc/tensor.hpp"

using namespace xhc;

namespace {

LinMap random_map(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t target_rank,
                  const CyclotomicField* F, int deg) {
  // product of r x k and k x c factors has rank at most k
  LinMap a{LinSpace{target_rank}, LinSpace{r}}, b{LinSpace{c}, LinSpace{target_rank}};
  for (std::size_t j = 0; j < target_rank; ++j) a.set_col(j, oracle::random_vec(rng, r, F, deg));
  for (std::size_t j = 0; j < c; ++j) b.set_col(j, oracle::random_vec(rng, target_rank, F, deg));
  return compose(a, b);
}

}  // namespace

TEST_CASE("rank and kernel agree with the dense oracle") {
  std::mt19937_64 rng(7);
  for (int N : {1, 3, 5}) {
    const CyclotomicField* F = N > 1 ? CyclotomicField::get(N) : nullptr;
    const int deg = oracle::phi_degree(N);
    for (int it = 0; it < 40; ++it) {
      std::size_t r = 2 + rng() % 7, c = 2 + rng() % 7, k = 1 + rng() % 5;
      LinMap m = random_map(rng, r, c, k, F, deg);
      RankKernel rk = rank_kernel(m);
      REQUIRE(rk.rank * deg == oracle::rank(oracle::realify(m, N)));
      REQUIRE(rk.kernel.size() + rk.rank == c);
      for (const auto& v : rk.kernel) REQUIRE(m.apply(v).empty());
    }
  }
}

TEST_CASE("quotient projection and section") {
  std::mt19937_64 rng(11);
  LinSpace amb(6);
  std::vector<SparseVec> rel{oracle::random_vec(rng, 6, nullptr, 1), oracle::random_vec(rng, 6, nullptr, 1),
                             SparseVec::unit(0) - SparseVec::unit(5)};
  QuotientSpace q = make_quotient(amb, rel);
  LinMap relm(LinSpace(3), amb, rel);
  CHECK(q.dim() == 6 - rank(relm));
  CHECK(compose(q.project, q.section).is_identity());
  for (const auto& r : rel) CHECK(q.project_vec(r).empty());
}

TEST_CASE("induced map refuses a map that does not descend") {
  LinSpace amb(2);
  QuotientSpace q = make_quotient(amb, {SparseVec::unit(0) - SparseVec::unit(1)});
  QuotientSpace t = trivial_quotient(amb);
  LinMap swap(amb, amb, {SparseVec::unit(1), SparseVec::unit(0)});
  CHECK(induced_map(swap, q, q).is_identity());
  LinMap first(amb, amb, {SparseVec::unit(0), SparseVec{}});
  CHECK_THROWS_AS(induced_map(first, q, t), WellDefinednessError);
}
