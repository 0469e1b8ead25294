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
#include "xhc/instances.hpp"
#include "xhc/model.hpp"

using namespace xhc;

namespace {

std::vector<std::size_t> dims(const CohomologyTable& t) { return t.dims; }

/// 1-dimensional cocyclic module with every operator the identity.
CocyclicModule constant_module(std::size_t top) {
  CocyclicModule cx;
  LinSpace one(1);
  for (std::size_t n = 0; n <= top; ++n) {
    cx.chain.push_back(trivial_quotient(one));
    cx.spaces.push_back(one);
    cx.cofaces.emplace_back(n < top ? n + 2 : 0, LinMap::identity(one));
    cx.codegen.emplace_back(n, LinMap::identity(one));
    cx.cyclic.push_back(LinMap::identity(one));
  }
  return cx;
}

}  // namespace

TEST_CASE("constant cocyclic module") {
  CocyclicModule cx = constant_module(4);
  CHECK(verify_cocyclic(cx).ok());
  std::vector<std::size_t> expect{1, 0, 1, 0};
  CHECK(dims(cyclic_lambda(cx, 3)) == expect);
  CHECK(oracle::cyclic_dims(cx, 3, 1) == expect);
  CHECK(dims(hochschild(cx, 3)) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("cocyclic identities on the torus and the enveloping algebra") {
  for (std::size_t N : {2u, 3u}) {
    InstanceBundle b = quantum_torus(N);
    for (auto* kind : {"coring", "algebra", "simplified"}) {
      CocyclicModule cx = std::string(kind) == "coring"  ? coring_cocyclic(b.X, coring_from_K(b.X.B), *b.sayd, 3)
                          : std::string(kind) == "algebra" ? algebra_cocyclic(b.X, base_module_algebra(b.X.B), *b.sayd, 3)
                                                           : simplified_cocyclic(b.X, b.sigma, *b.delta, 3);
      CheckReport r = verify_cocyclic(cx);
      INFO(b.name << " " << kind << "\n" << r.str());
      CHECK(r.ok());
      for (std::size_t n = 0; n <= 3; ++n) CHECK(power(cx.cyclic[n], n + 1).is_identity());
    }
  }
  InstanceBundle e = enveloping(dual_numbers());
  CHECK(verify_cocyclic(coring_cocyclic(e.X, coring_from_K(e.X.B), *e.sayd, 3)).ok());
  CHECK(verify_cocyclic(algebra_cocyclic(e.X, base_module_algebra(e.X.B), *e.sayd, 3)).ok());
  CHECK(verify_cocyclic(simplified_cocyclic(e.X, e.sigma, *e.delta, 3)).ok());
}

TEST_CASE("rho intertwines coring and simplified complexes") {
  InstanceBundle b = quantum_torus(2);
  SimplifiedBundle sb = simplified_base_cocyclic(b.X, b.sigma, *b.delta, 3);
  INFO(sb.report.str());
  CHECK(sb.report.ok());
  CHECK(check_cocyclic_map(sb.coring, sb.simple, sb.rho).ok());
  CHECK(check_cocyclic_map(sb.simple, sb.coring, sb.rho_inv).ok());
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(compose(sb.rho[n], sb.rho_inv[n]).is_identity());
    CHECK(compose(sb.rho_inv[n], sb.rho[n]).is_identity());
  }
}

TEST_CASE("sparse and dense cohomology tables agree") {
  for (std::size_t N : {2u, 3u}) {
    InstanceBundle b = quantum_torus(N);
    CocyclicModule s = simplified_cocyclic(b.X, b.sigma, *b.delta, 4);
    std::vector<std::size_t> expect{N, 0, N, 0};
    CHECK(dims(cyclic_lambda(s, 3)) == expect);
    CHECK(oracle::cyclic_dims(s, 3, static_cast<int>(N)) == expect);
    CHECK(dims(hochschild(s, 3)) == oracle::hochschild_dims(s, 3, static_cast<int>(N)));
  }
  InstanceBundle e = enveloping(dual_numbers());
  CocyclicModule se = simplified_cocyclic(e.X, e.sigma, *e.delta, 4);
  CHECK(dims(cyclic_lambda(se, 3)) == std::vector<std::size_t>{1, 0, 1, 0});
  CHECK(oracle::cyclic_dims(se, 3, 1) == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("trivial Hopf algebra over the scalars") {
  InstanceBundle b = group_hopf(cyclic_group(1));
  CocyclicModule s = simplified_cocyclic(b.X, b.sigma, *b.delta, 4);
  CHECK(dims(cyclic_lambda(s, 3)) == std::vector<std::size_t>{1, 0, 1, 0});
  CHECK(oracle::cyclic_dims(s, 3, 1) == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("standard complex of an algebra") {
  // HC of Q[x]/(x²) in low degrees, dense oracle against the sparse solver
  CocyclicModule st = algebra_standard_cocyclic(dual_numbers(), 3);
  CHECK(verify_cocyclic(st).ok());
  CHECK(dims(cyclic_lambda(st, 2)) == oracle::cyclic_dims(st, 2, 1));
  CHECK(dims(hochschild(st, 2)) == oracle::hochschild_dims(st, 2, 1));
}

TEST_CASE("CSV serialisation") {
  InstanceBundle b = quantum_torus(2);
  CohomologyTable t = cyclic_lambda(simplified_cocyclic(b.X, b.sigma, *b.delta, 4), 3);
  CHECK(t.csv() == "degree,theory,dim\n0,cyclic,2\n1,cyclic,0\n2,cyclic,2\n3,cyclic,0\n");
}

TEST_CASE("smash product Hochschild table matches the Hopf algebra") {
  HopfData H = group_hopf_data(cyclic_group(2));
  InstanceBundle cm = cm_smash(H, trivial_module_algebra(H));
  InstanceBundle h = group_hopf(cyclic_group(2));
  CocyclicModule a = simplified_cocyclic(cm.X, cm.sigma, *cm.delta, 4);
  CocyclicModule c = simplified_cocyclic(h.X, h.sigma, *h.delta, 4);
  CHECK(dims(hochschild(a, 3)) == dims(hochschild(c, 3)));
  CHECK(oracle::hochschild_dims(a, 3, 1) == oracle::hochschild_dims(c, 3, 1));
}
