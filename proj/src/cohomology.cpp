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

#include <sstream>

#include "xhc/cyclic.hpp"
#include "xhc/errors.hpp"

namespace xhc {

namespace {

std::string deg(std::size_t n) { return " (degree " + std::to_string(n) + ")"; }

std::string differ(const LinMap& a, const LinMap& b) {
  long c = a.first_difference(b);
  if (c < 0) return {};
  const auto j = static_cast<std::size_t>(c);
  return "on " + a.source().label(j) + ": " + a.col(j).str(&a.target()) + " vs " + b.col(j).str(&b.target());
}

void expect(CheckReport&, const std::string&, const LinMap& a, const LinMap& b, std::string& witness) {
  if (witness.empty()) witness = differ(a, b);
}

}  // namespace

CheckReport verify_cocyclic(const CocyclicModule& cx) {
  CheckReport rep;
  const std::size_t top = cx.top();
  auto d = [&](std::size_t n, std::size_t i) -> const LinMap& { return cx.cofaces.at(n).at(i); };
  auto s = [&](std::size_t n, std::size_t i) -> const LinMap& { return cx.codegen.at(n).at(i); };
  auto t = [&](std::size_t n) -> const LinMap& { return cx.cyclic.at(n); };
  for (std::size_t n = 0; n + 2 <= top; ++n) {
    std::string w;
    for (std::size_t j = 1; j <= n + 2; ++j)
      for (std::size_t i = 0; i < j && w.empty(); ++i) {
        expect(rep, "", compose(d(n + 1, j), d(n, i)), compose(d(n + 1, i), d(n, j - 1)), w);
        if (!w.empty()) w = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + w;
      }
    rep.add("d_j d_i = d_i d_{j-1}" + deg(n), w.empty(), w);
  }
  for (std::size_t n = 2; n <= top; ++n) {
    std::string w;
    for (std::size_t j = 0; j + 2 <= n; ++j)
      for (std::size_t i = 0; i <= j && w.empty(); ++i) {
        expect(rep, "", compose(s(n - 1, j), s(n, i)), compose(s(n - 1, i), s(n, j + 1)), w);
        if (!w.empty()) w = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + w;
      }
    rep.add("s_j s_i = s_i s_{j+1}" + deg(n), w.empty(), w);
  }
  for (std::size_t n = 0; n + 1 <= top; ++n) {
    std::string w;
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1 && w.empty(); ++i) {
        LinMap lhs = compose(s(n + 1, j), d(n, i));
        if (i == j || i == j + 1) {
          if (!lhs.is_identity()) w = "not identity";
        } else if (i < j) {
          expect(rep, "", lhs, compose(d(n - 1, i), s(n, j - 1)), w);
        } else {
          expect(rep, "", lhs, compose(d(n - 1, i - 1), s(n, j)), w);
        }
        if (!w.empty()) w = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + w;
      }
    rep.add("s_j d_i relations" + deg(n), w.empty(), w);
  }
  for (std::size_t n = 1; n <= top; ++n) {
    std::string w;
    expect(rep, "", compose(t(n), d(n - 1, 0)), d(n - 1, n), w);
    if (!w.empty()) w = "i=0: " + w;
    for (std::size_t i = 1; i <= n && w.empty(); ++i) {
      expect(rep, "", compose(t(n), d(n - 1, i)), compose(d(n - 1, i - 1), t(n - 1)), w);
      if (!w.empty()) w = "i=" + std::to_string(i) + ": " + w;
    }
    rep.add("t d_i = d_{i-1} t, t d_0 = d_n" + deg(n), w.empty(), w);
  }
  for (std::size_t n = 0; n + 1 <= top; ++n) {
    std::string w;
    expect(rep, "", compose(t(n), s(n + 1, 0)), compose(s(n + 1, n), power(t(n + 1), 2)), w);
    if (!w.empty()) w = "i=0: " + w;
    for (std::size_t i = 1; i <= n && w.empty(); ++i) {
      expect(rep, "", compose(t(n), s(n + 1, i)), compose(s(n + 1, i - 1), t(n + 1)), w);
      if (!w.empty()) w = "i=" + std::to_string(i) + ": " + w;
    }
    rep.add("t s_i = s_{i-1} t, t s_0 = s_n t^2" + deg(n), w.empty(), w);
  }
  for (std::size_t n = 0; n <= top; ++n) {
    LinMap p = power(t(n), n + 1);
    rep.add("t^{n+1} = id" + deg(n), p.is_identity(), differ(p, LinMap::identity(cx.spaces[n])));
  }
  if (!cx.theta.empty()) {
    for (std::size_t n = 0; n <= top; ++n) {
      std::string w;
      expect(rep, "", t(n), power(cx.theta.at(n), n), w);
      rep.add("tau = theta^n" + deg(n), w.empty(), w);
    }
  }
  return rep;
}

CheckReport check_cocyclic_map(const CocyclicModule& a, const CocyclicModule& b, const std::vector<LinMap>& f) {
  CheckReport rep;
  const std::size_t top = std::min({a.top(), b.top(), f.size() - 1});
  for (std::size_t n = 0; n <= top; ++n) {
    std::string w;
    if (n + 1 <= top)
      for (std::size_t i = 0; i <= n + 1 && w.empty(); ++i) {
        expect(rep, "", compose(f[n + 1], a.cofaces[n][i]), compose(b.cofaces[n][i], f[n]), w);
        if (!w.empty()) w = "coface " + std::to_string(i) + ": " + w;
      }
    if (n >= 1)
      for (std::size_t i = 0; i < n && w.empty(); ++i) {
        expect(rep, "", compose(f[n - 1], a.codegen[n][i]), compose(b.codegen[n][i], f[n]), w);
        if (!w.empty()) w = "codegeneracy " + std::to_string(i) + ": " + w;
      }
    if (w.empty()) {
      expect(rep, "", compose(f[n], a.cyclic[n]), compose(b.cyclic[n], f[n]), w);
      if (!w.empty()) w = "cyclic: " + w;
    }
    rep.add("commutes with structure maps" + deg(n), w.empty(), w);
  }
  return rep;
}

LinMap hochschild_b(const CocyclicModule& cx, std::size_t n) {
  if (n + 1 > cx.top()) throw DegreeError("hochschild_b needs degree " + std::to_string(n + 1));
  LinMap b = LinMap::zero(cx.spaces[n], cx.spaces[n + 1]);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    if (i % 2 == 0)
      b += cx.cofaces[n][i];
    else
      b -= cx.cofaces[n][i];
  }
  return b;
}

std::vector<SparseVec> lambda_basis(const CocyclicModule& cx, std::size_t n) {
  LinMap m = LinMap::identity(cx.spaces[n]);
  if (n % 2 == 0)
    m -= cx.cyclic[n];
  else
    m += cx.cyclic[n];
  return rank_kernel(m).kernel;
}

namespace {

/// Cohomology of a complex given in coordinates: maps[n]: V_n -> V_{n+1}
/// for n = 0..nmax.
void cohomology(const std::vector<LinMap>& maps, std::size_t nmax, CohomologyTable& t,
                const std::vector<std::vector<SparseVec>>* embed) {
  std::vector<RankKernel> rk;
  for (std::size_t n = 0; n <= nmax; ++n) rk.push_back(rank_kernel(maps[n]));
  for (std::size_t n = 0; n <= nmax; ++n) {
    const std::size_t ker = rk[n].kernel.size();
    const std::size_t im = n == 0 ? 0 : rk[n - 1].rank;
    t.dims.push_back(ker - im);
    Echelon e;
    if (n > 0)
      for (const auto& v : rk[n - 1].image) e.insert(v);
    std::vector<SparseVec> reps;
    for (const auto& v : rk[n].kernel)
      if (e.insert(v)) {
        if (!embed) {
          reps.push_back(v);
        } else {
          Accumulator acc;
          for (const auto& [i, c] : v.entries()) acc.add((*embed)[n][i], c);
          reps.push_back(acc.finish());
        }
      }
    t.reps.push_back(std::move(reps));
  }
}

void check_range(const CocyclicModule& cx, std::size_t nmax) {
  if (nmax > 6) throw DegreeError("cohomology is computed up to degree 6");
  if (nmax + 1 > cx.top())
    throw DegreeError("complex must be built to degree " + std::to_string(nmax + 1));
}

}  // namespace

CohomologyTable hochschild(const CocyclicModule& cx, std::size_t nmax) {
  check_range(cx, nmax);
  CohomologyTable t;
  t.theory = "hochschild";
  std::vector<LinMap> maps;
  for (std::size_t n = 0; n <= nmax; ++n) {
    maps.push_back(hochschild_b(cx, n));
    t.spaces.push_back(cx.spaces[n]);
  }
  cohomology(maps, nmax, t, nullptr);
  return t;
}

CohomologyTable cyclic_lambda(const CocyclicModule& cx, std::size_t nmax) {
  check_range(cx, nmax);
  CohomologyTable t;
  t.theory = "cyclic";
  std::vector<std::vector<SparseVec>> L;
  for (std::size_t n = 0; n <= nmax + 1; ++n) L.push_back(lambda_basis(cx, n));
  std::vector<LinMap> maps;
  for (std::size_t n = 0; n <= nmax; ++n) {
    LinMap b = hochschild_b(cx, n);
    Echelon e(true);
    for (std::size_t j = 0; j < L[n + 1].size(); ++j) e.insert(L[n + 1][j], SparseVec::unit(j));
    LinSpace src(L[n].size(), "l"), tgt(L[n + 1].size(), "l");
    LinMap m(src, tgt);
    for (std::size_t j = 0; j < L[n].size(); ++j) {
      SparseVec tag;
      SparseVec r = e.reduce(b.apply(L[n][j]), &tag);
      if (!r.empty()) throw AxiomError("b does not preserve the cyclic subcomplex" + deg(n));
      m.set_col(j, tag.scaled(Scalar(-1L)));
    }
    maps.push_back(std::move(m));
    t.spaces.push_back(cx.spaces[n]);
  }
  cohomology(maps, nmax, t, &L);
  return t;
}

std::string CohomologyTable::csv(bool with_reps) const {
  std::ostringstream os;
  os << "degree,theory,dim";
  if (with_reps) os << ",representatives";
  os << "\n";
  for (std::size_t n = 0; n < dims.size(); ++n) {
    os << n << "," << theory << "," << dims[n];
    if (with_reps) {
      os << ",\"";
      for (std::size_t j = 0; j < reps[n].size(); ++j) os << (j ? "; " : "") << reps[n][j].str(&spaces[n]);
      os << "\"";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace xhc
