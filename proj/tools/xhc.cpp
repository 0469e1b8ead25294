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

// xhc: command-line front end.
//   xhc check <file>
//   xhc cohomology <file> --complex <c> --theory <t> --nmax <k> [--out <csv>] [--reps]
//   xhc charmap <file> --cocycle <name> --trace <name> [--out <file>]
//   xhc instance <kind> [--N n] [--R r] [--G g] [--H h] [--A a] --emit <file>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "xhc/errors.hpp"
#include "xhc/model.hpp"
#include "xhc/pairing.hpp"

using namespace xhc;

namespace {

struct UsageError : Error {
  using Error::Error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

InstanceBundle certified(const ModelFile& m) {
  ModelCheck c = certify_model(m);
  if (!c.bundle) {
    std::cout << c.report.str();
    const Check* f = c.report.first_failure();
    throw AxiomError(f ? f->name + (f->witness.empty() ? "" : " : " + f->witness) : "model does not certify");
  }
  return std::move(*c.bundle);
}

int run_check(const std::string& file) {
  ModelFile m = parse_model_file(file);
  ModelCheck c = certify_model(m);
  std::cout << c.report.str();
  if (const Check* f = c.report.first_failure()) {
    std::cout << "FAILED " << f->name << (f->witness.empty() ? "" : " : " + f->witness) << "\n";
    return 1;
  }
  std::cout << "OK " << c.report.items.size() << " checks\n";
  return 0;
}

CocyclicModule build_complex(const ModelFile& m, const InstanceBundle& b, const std::string& kind, std::size_t top) {
  if (kind == "standard") {
    auto A = module_algebra_from_model(m, b.X);
    return algebra_standard_cocyclic(A ? A->A : b.X.B.R, top);
  }
  if (!b.sayd || !b.delta) throw UsageError("complex " + kind + " needs sigma and delta in the model");
  if (kind == "coring") return coring_cocyclic(b.X, coring_from_K(b.X.B), *b.sayd, top);
  if (kind == "algebra") {
    auto A = module_algebra_from_model(m, b.X);
    return algebra_cocyclic(b.X, A ? *A : base_module_algebra(b.X.B), *b.sayd, top);
  }
  if (kind == "simplified") return simplified_cocyclic(b.X, b.sigma, *b.delta, top);
  throw UsageError("unknown complex " + kind);
}

int run_cohomology(const std::string& file, const std::string& complex, const std::string& theory,
                   std::size_t nmax, const std::string& out, bool reps) {
  ModelFile m = parse_model_file(file);
  InstanceBundle b = certified(m);
  CocyclicModule cx = build_complex(m, b, complex, nmax + 1);
  CohomologyTable t = theory == "cyclic" ? cyclic_lambda(cx, nmax) : hochschild(cx, nmax);
  emit(out, t.csv(reps));
  return 0;
}

std::size_t degree_of(const ModelFile& m, const std::string& expr) {
  if (expr == "R") return 0;
  std::size_t n = 0, start = 0;
  while (true) {
    std::size_t star = expr.find('*', start);
    if (expr.substr(start, star == std::string::npos ? std::string::npos : star - start) != "K")
      throw UsageError("cocycle space must be R or K*...*K, got " + expr);
    ++n;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  (void)m;
  return n;
}

int run_charmap(const std::string& file, const std::string& cocycle, const std::string& trace,
                const std::string& out) {
  ModelFile m = parse_model_file(file);
  InstanceBundle b = certified(m);
  auto A = module_algebra_from_model(m, b.X);
  if (!A) throw UsageError("charmap needs a module algebra (mult_A, unit_A, act_A)");
  const ModelTensor* ct = m.tensor(cocycle);
  if (!ct || ct->arity != 0) throw UsageError("no vector tensor named " + cocycle);
  if (!b.delta) throw UsageError("charmap needs delta in the model");
  const std::size_t n = degree_of(m, ct->space);
  LinMap Tr = m.linmap(trace);
  LinMap omega = m.map("omega") ? m.linmap("omega") : b.phi ? *b.phi : LinMap::identity(b.X.B.R.space());
  TraceData T = check_trace(Tr, b.sigma, *b.delta, *A, b.X, omega);
  CocyclicModule simple = simplified_cocyclic(b.X, b.sigma, *b.delta, n + 1);
  SparseVec k = simple.chain[n].project_vec(m.vector(cocycle));
  CharResult r = char_map0(b.X, T, *A, simple, n, k);
  std::cout << r.report.str();
  const std::size_t dim = A->A.dim();
  std::size_t len = 1;
  for (std::size_t j = 0; j <= n; ++j) len *= dim;
  std::string text = "# charmap degree " + std::to_string(n) + " cochain on A^" + std::to_string(n + 1) +
                     " dim " + std::to_string(len) + "\n";
  for (std::size_t i = 0; i < len; ++i) text += r.cochain.at(i).str() + "\n";
  emit(out, text);
  return r.report.ok() ? 0 : 1;
}

int run_instance(const std::string& kind, const std::map<std::string, std::string>& params, const std::string& out) {
  InstanceBundle b = builtin_instance(kind, params);
  ModelFile m = model_from_bundle(b);
  auto a = params.find("A");
  if ((kind == "hopf" || kind == "torus") && a != params.end()) {
    if (kind == "torus" && a->second == "base") {
      add_module_algebra(m, base_module_algebra(b.X.B));
    } else if (kind == "hopf" && b.hopf) {
      HModuleAlgebra h = a->second == "swap" ? swap_module_algebra(*b.hopf) : trivial_module_algebra(*b.hopf);
      ModuleAlgebra ma = make_module_algebra(b.X.B, h.A, h.act);
      add_module_algebra(m, ma);
      // Tr = sum of coordinates, into R = Q
      m.maps.push_back({"trace", "A", "R", {}});
      for (std::size_t i = 0; i < ma.A.dim(); ++i) m.maps.back().cols.emplace_back(i, SparseVec::unit(0));
    } else {
      throw UsageError("module algebra " + a->second + " does not apply to " + kind);
    }
  }
  emit(out, export_model(m));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hopf-cyclic cohomology of ×-Hopf algebras"};
  app.require_subcommand(1);

  std::string file, complex = "simplified", theory = "cyclic", out, cocycle, trace_name, kind;
  std::size_t nmax = 3;
  bool reps = false;
  std::map<std::string, std::string> params;
  std::string pN, pR, pG, pH, pA;

  auto* check = app.add_subcommand("check", "certify every structure in a model file");
  check->add_option("file", file)->required();

  auto* coh = app.add_subcommand("cohomology", "Hochschild or cyclic cohomology table as CSV");
  coh->add_option("file", file)->required();
  coh->add_option("--complex", complex)->check(CLI::IsMember({"coring", "algebra", "simplified", "standard"}));
  coh->add_option("--theory", theory)->check(CLI::IsMember({"hochschild", "cyclic"}));
  coh->add_option("--nmax", nmax)->check(CLI::Range(0, 6));
  coh->add_option("--out", out);
  coh->add_flag("--reps", reps, "append cocycle representatives");

  auto* cm = app.add_subcommand("charmap", "characteristic map of a cocycle and a trace");
  cm->add_option("file", file)->required();
  cm->add_option("--cocycle", cocycle)->required();
  cm->add_option("--trace", trace_name)->required();
  cm->add_option("--out", out);

  auto* inst = app.add_subcommand("instance", "emit a built-in instance as a model file");
  inst->add_option("kind", kind)->required()->check(CLI::IsMember({"torus", "enveloping", "hopf", "cm", "kadison"}));
  inst->add_option("--N", pN, "torus order");
  inst->add_option("--R", pR, "enveloping base: dual, z2, q");
  inst->add_option("--G", pG, "hopf: z2, z3, s3, sweedler");
  inst->add_option("--H", pH, "cm/kadison Hopf algebra");
  inst->add_option("--A", pA, "module algebra: trivial, swap (base for torus)");
  inst->add_option("--emit", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(file);
    if (*coh) return run_cohomology(file, complex, theory, nmax, out, reps);
    if (*cm) return run_charmap(file, cocycle, trace_name, out);
    if (*inst) {
      for (const auto& [k, v] : {std::pair{"N", pN}, {"R", pR}, {"G", pG}, {"H", pH}, {"A", pA}})
        if (!v.empty()) params[k] = v;
      return run_instance(kind, params, out);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const DegreeError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
