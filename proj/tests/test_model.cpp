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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "xhc/errors.hpp"
#include "xhc/model.hpp"

using namespace xhc;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  int rc = std::system((std::string(XHC_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::filesystem::path scratch() {
  auto d = std::filesystem::temp_directory_path() / "xhc_model_tests";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("export, parse and export again are byte-identical") {
  for (auto [kind, params] : std::vector<std::pair<std::string, std::map<std::string, std::string>>>{
           {"torus", {{"N", "2"}}}, {"torus", {{"N", "3"}}}, {"enveloping", {{"R", "dual"}}},
           {"hopf", {{"G", "sweedler"}}}, {"cm", {{"H", "z2"}, {"A", "swap"}}}}) {
    InstanceBundle b = builtin_instance(kind, params);
    std::string t1 = export_model(model_from_bundle(b));
    ModelFile m = parse_model(t1);
    CHECK(export_model(m) == t1);
    ModelCheck c = certify_model(m);
    INFO(kind << "\n" << c.report.str());
    CHECK(c.bundle.has_value());
    // re-certified structure is the same structure
    CHECK(c.bundle->X.nu == b.X.nu);
  }
}

TEST_CASE("module algebras round-trip") {
  InstanceBundle b = builtin_instance("torus", {{"N", "2"}});
  ModelFile m = model_from_bundle(b);
  add_module_algebra(m, base_module_algebra(b.X.B));
  ModelFile back = parse_model(export_model(m));
  auto A = module_algebra_from_model(back, b.X);
  REQUIRE(A.has_value());
  CHECK(check_module_algebra(b.X, *A).ok());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_model("space K dim 4\ntensor mult 2 K\nmult K 5 0 : (1)*e0\n"),
                       doctest::Contains("line 3"), ShapeError);
  CHECK_THROWS_AS(parse_model("space K dim 4\ntensor mult 2 K\n0 0 : (1)*e4\n"), ShapeError);
  CHECK_THROWS_WITH_AS(parse_model("space K dim 4\nfrobnicate\n"), doctest::Contains("line 2 col 1"), ParseError);
  CHECK_THROWS_AS(parse_model("space K dim 2\ntensor m 2 K\n0 0 : (1 +)*e0\n"), ParseError);
  CHECK_THROWS_AS(parse_model("space K dim 2 labels a\n"), ShapeError);
  CHECK_THROWS_AS(parse_model("0 : e0\n"), ParseError);
}

TEST_CASE("vector syntax") {
  ModelFile m = parse_model("field cyclotomic 3\nspace K dim 3\ntensor v 0 K\n: e0 - 2*e1 + (1 - z)*e2\n");
  SparseVec v = m.vector("v");
  const CyclotomicField* F = CyclotomicField::get(3);
  CHECK(v.at(0) == Scalar(1L));
  CHECK(v.at(1) == Scalar(-2L));
  CHECK(v.at(2) == Scalar(1L) - Scalar::root(F));
}

TEST_CASE("stub files certify from the instance line") {
  ModelFile m = parse_model("# stub\ninstance torus N=2\n");
  CHECK(certify_model(m).bundle.has_value());
  CHECK_THROWS_AS(builtin_instance("nope", {}), ParseError);
}

TEST_CASE("command line") {
  auto d = scratch();
  const std::string t2 = (d / "t2.xh").string(), csv = (d / "t2.csv").string();
  REQUIRE(run("instance torus --N 2 --emit " + t2) == 0);
  CHECK(run("check " + t2) == 0);
  REQUIRE(run("cohomology " + t2 + " --complex simplified --theory cyclic --nmax 3 --out " + csv) == 0);
  CHECK(slurp(csv) == "degree,theory,dim\n0,cyclic,2\n1,cyclic,0\n2,cyclic,2\n3,cyclic,0\n");

  // broken counit
  std::string text = slurp(t2);
  auto at = text.find("map eps K R\n0 : (1)*e0");
  REQUIRE(at != std::string::npos);
  text.replace(at, std::string("map eps K R\n0 : (1)*e0").size(), "map eps K R\n0 : (2)*e0");
  const std::string bad = (d / "bad.xh").string();
  std::ofstream(bad) << text;
  CHECK(run("check " + bad) == 1);

  const std::string shape = (d / "shape.xh").string();
  std::ofstream(shape) << "space K dim 4\ntensor mult 2 K\nmult K 5 0 : (1)*e0\n";
  CHECK(run("check " + shape) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("cohomology " + t2 + " --complex nope") == 2);
  CHECK(run("instance hopf --G z2 --A swap --emit " + (d / "z2.xh").string()) == 0);
  {
    std::ofstream f(d / "z2.xh", std::ios::app);
    f << "tensor k0 0 R\n: (1)*e0\n";
  }
  const std::string cm = (d / "cm.txt").string();
  CHECK(run("charmap " + (d / "z2.xh").string() + " --cocycle k0 --trace trace --out " + cm) == 0);
  CHECK(slurp(cm) == "# charmap degree 0 cochain on A^1 dim 2\n1\n1\n");
}

TEST_CASE("degree cap") {
  auto d = scratch();
  const std::string t2 = (d / "cap.xh").string();
  REQUIRE(run("instance torus --N 2 --emit " + t2) == 0);
  int rc = std::system(("XHC_MAX_DIM=10 " + std::string(XHC_CLI) + " cohomology " + t2 +
                        " --complex coring --nmax 3 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}
