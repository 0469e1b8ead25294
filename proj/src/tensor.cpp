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

#include "xhc/tensor.hpp"

#include "xhc/errors.hpp"

namespace xhc {

LinMap ambient_map(const LinSpace& src, const LinSpace& tgt, const Formula& f) {
  std::vector<SparseVec> cols;
  cols.reserve(src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) cols.push_back(f(src.decode(j)));
  return LinMap(src, tgt, std::move(cols));
}

LinMap build_operator(const QuotientSpace& src, const QuotientSpace& tgt, const Formula& f) {
  return induced_map(ambient_map(src.ambient, tgt.ambient, f), src, tgt);
}

LinMap build_operator(const QuotientSpace& src, const QuotientSpace& tgt, const LinMap& f) {
  return induced_map(f, src, tgt);
}

LinMap lift_operator(const QuotientSpace& src, const QuotientSpace& tgt, const Formula& f) {
  std::vector<SparseVec> cols;
  cols.reserve(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Accumulator acc;
    for (const auto& [j, c] : src.section.col(i).entries())
      acc.add(tgt.project.apply(f(src.ambient.decode(j))), c);
    cols.push_back(acc.finish());
  }
  return LinMap(src.quotient, tgt.quotient, std::move(cols));
}

SparseVec pure(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  if (digits.size() != dims.size()) throw ShapeError("pure tensor arity mismatch");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return SparseVec::unit(idx);
}

SparseVec embed(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims,
                std::size_t pos, const SparseVec& v) {
  if (digits.size() != dims.size() || pos >= dims.size()) throw ShapeError("embed arity mismatch");
  std::size_t stride = 1;
  for (std::size_t k = pos + 1; k < dims.size(); ++k) stride *= dims[k];
  std::size_t base = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) base = base * dims[k] + (k == pos ? 0 : digits[k]);
  std::vector<SparseVec::Entry> en;
  en.reserve(v.nnz());
  for (const auto& [i, c] : v.entries()) en.emplace_back(base + i * stride, c);
  return SparseVec::from_unsorted(std::move(en));
}

SparseVec splice(const SparseVec& x, const std::vector<std::size_t>& dims, std::size_t pos,
                 std::size_t count, const LinMap& op) {
  if (pos + count > dims.size()) throw ShapeError("splice range outside tensor");
  std::size_t mid = 1, suf = 1;
  for (std::size_t k = pos; k < pos + count; ++k) mid *= dims[k];
  for (std::size_t k = pos + count; k < dims.size(); ++k) suf *= dims[k];
  if (op.cols() != mid) throw ShapeError("splice operator does not fit");
  const std::size_t out = op.rows();
  Accumulator acc;
  for (const auto& [idx, c] : x.entries()) {
    std::size_t s = idx % suf, m = (idx / suf) % mid, p = idx / (suf * mid);
    for (const auto& [o, y] : op.col(m).entries()) acc.add((p * out + o) * suf + s, c * y);
  }
  return acc.finish();
}

std::vector<std::size_t> splice_dims(const std::vector<std::size_t>& dims, std::size_t pos,
                                     std::size_t count, const std::vector<std::size_t>& out) {
  std::vector<std::size_t> r(dims.begin(), dims.begin() + pos);
  r.insert(r.end(), out.begin(), out.end());
  r.insert(r.end(), dims.begin() + pos + count, dims.end());
  return r;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

QuotientSpace balanced_pair(const QuotientSpace& X, const std::vector<LinMap>& xright,
                            const QuotientSpace& Y, const std::vector<LinMap>& yleft) {
  if (xright.size() != yleft.size()) throw ShapeError("balanced_pair: action index mismatch");
  QuotientSpace xy = tensor(X, Y);
  const std::size_t nx = X.dim(), ny = Y.dim();
  std::vector<SparseVec> rels;
  rels.reserve(nx * ny * xright.size());
  for (std::size_t r = 0; r < xright.size(); ++r) {
    for (std::size_t x = 0; x < nx; ++x) {
      const SparseVec& xr = xright[r].col(x);
      for (std::size_t y = 0; y < ny; ++y) {
        SparseVec rel = kron(xr, SparseVec::unit(y), ny);
        rel -= kron(SparseVec::unit(x), yleft[r].col(y), ny);
        if (!rel.empty()) rels.push_back(std::move(rel));
      }
    }
  }
  return refine(xy, rels);
}

LinMap factor_op(const QuotientSpace& q, std::size_t pos, const LinMap& op) {
  auto dims = q.ambient.radix();
  if (pos >= dims.size() || op.cols() != dims[pos] || op.rows() != dims[pos])
    throw ShapeError("factor_op: operator does not fit factor");
  return lift_operator(q, q, [&](const std::vector<std::size_t>& d) {
    return embed(d, dims, pos, op.col(d[pos]));
  });
}

}  // namespace xhc
