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

#include "xhc/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "xhc/errors.hpp"

namespace xhc {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg);
}

[[noreturn]] void shape_fail(std::size_t line, const std::string& msg) {
  throw ShapeError("line " + std::to_string(line) + ": " + msg);
}

std::size_t to_index(const Token& t, std::size_t line) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    parse_fail(line, t.col, "expected an index, got '" + t.text + "'");
  return std::stoul(t.text);
}

bool plain_label(const std::string& l) {
  if (l.empty()) return false;
  for (char c : l)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  return true;
}

bool ends_with_basis(const std::string& raw) {
  std::string t = trim(raw);
  std::size_t j = t.size();
  while (j > 0 && std::isdigit(static_cast<unsigned char>(t[j - 1]))) --j;
  return j < t.size() && j > 0 && t[j - 1] == 'e';
}

// `(c)*e3 + (1 - z)*e7`, `e0 - 2*e1`, or `0`
SparseVec parse_vec(const std::string& text, std::size_t dim, const CyclotomicField* F, std::size_t line,
                    std::size_t col) {
  std::string s = trim(text);
  if (s.empty()) parse_fail(line, col, "missing value");
  if (s == "0") return {};
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) parse_fail(line, col + i, "unbalanced ')'");
    if (depth == 0 && (s[i] == '+' || s[i] == '-') && ends_with_basis(s.substr(start, i - start))) {
      terms.push_back(s.substr(start, i - start));
      start = s[i] == '+' ? i + 1 : i;
    }
  }
  if (depth != 0) parse_fail(line, col, "unbalanced '('");
  terms.push_back(s.substr(start));
  Accumulator acc;
  for (const auto& raw : terms) {
    std::string t = trim(raw);
    std::size_t e = t.rfind('e');
    if (e == std::string::npos || !ends_with_basis(t)) parse_fail(line, col, "term '" + t + "' lacks e<index>");
    std::string idx = t.substr(e + 1), sc = trim(t.substr(0, e));
    if (!sc.empty() && sc.back() == '*') sc = trim(sc.substr(0, sc.size() - 1));
    if (sc.empty() || sc == "-") sc += "1";
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      parse_fail(line, col, "bad basis index in '" + t + "'");
    bool neg = false;
    if (sc.size() > 1 && sc[0] == '-' && trim(sc.substr(1)).front() == '(') {
      neg = true;
      sc = trim(sc.substr(1));
    }
    if (sc.size() >= 2 && sc.front() == '(' && sc.back() == ')') sc = sc.substr(1, sc.size() - 2);
    std::size_t j = std::stoul(idx);
    if (j >= dim) shape_fail(line, "basis index " + idx + " outside a space of dimension " + std::to_string(dim));
    Scalar c;
    try {
      c = Scalar::parse(sc, F);
    } catch (const Error& e) {
      parse_fail(line, col, std::string("scalar: ") + e.what());
    }
    acc.add(j, neg ? -c : c);
  }
  return acc.finish();
}

std::string join_params(const std::map<std::string, std::string>& p) {
  std::string s;
  for (const auto& [k, v] : p) s += " " + k + "=" + v;
  return s;
}

}  // namespace

// ------------------------------------------------------------ ModelFile

const CyclotomicField* ModelFile::field() const {
  return conductor > 1 ? CyclotomicField::get(conductor) : nullptr;
}

const ModelTensor* ModelFile::tensor(const std::string& n) const {
  for (const auto& t : tensors)
    if (t.name == n) return &t;
  return nullptr;
}

const ModelMap* ModelFile::map(const std::string& n) const {
  for (const auto& m : maps)
    if (m.name == n) return &m;
  return nullptr;
}

std::optional<std::string> ModelFile::task(const std::string& key) const {
  for (const auto& [k, v] : tasks)
    if (k == key) return v;
  return std::nullopt;
}

LinSpace ModelFile::space(const std::string& expr) const {
  std::vector<LinSpace> f;
  std::size_t start = 0;
  while (true) {
    std::size_t star = expr.find('*', start);
    std::string nm = expr.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (nm == "Q") {
      f.emplace_back(std::vector<std::string>{"1"});
    } else {
      auto it = std::find_if(spaces.begin(), spaces.end(), [&](const ModelSpace& s) { return s.name == nm; });
      if (it == spaces.end()) throw ParseError("unknown space '" + nm + "'");
      f.push_back(it->labels.empty() ? LinSpace(it->dim) : LinSpace(it->labels));
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return f.size() == 1 ? f[0] : LinSpace::product(f);
}

LinMap ModelFile::linmap(const std::string& n) const {
  const ModelMap* m = map(n);
  if (!m) throw ParseError("model has no map '" + n + "'");
  LinMap out(space(m->src), space(m->tgt));
  for (const auto& [c, v] : m->cols) out.set_col(c, v);
  return out;
}

SparseVec ModelFile::vector(const std::string& n) const {
  const ModelTensor* t = tensor(n);
  if (!t || t->arity != 0) throw ParseError("model has no vector '" + n + "'");
  return t->entries.empty() ? SparseVec{} : t->entries.front().second;
}

// ------------------------------------------------------------ parse

ModelFile parse_model(std::string_view text) {
  ModelFile m;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t ln = 0;
  ModelTensor* cur_t = nullptr;
  ModelMap* cur_m = nullptr;
  std::size_t cur_dim = 0;
  std::vector<std::size_t> slot_dims;
  std::size_t src_dim = 0;
  bool field_seen = false;
  auto close = [&] {
    cur_t = nullptr;
    cur_m = nullptr;
  };
  auto known = [&](const std::string& expr, std::size_t col) {
    try {
      return m.space(expr).dim();
    } catch (const ParseError& e) {
      parse_fail(ln, col, e.what());
    }
  };
  while (std::getline(in, raw)) {
    ++ln;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    std::size_t colon = line.find(':');
    if (colon != std::string::npos) {
      auto idx = tokenize(line.substr(0, colon));
      if (!idx.empty() && !std::isdigit(static_cast<unsigned char>(idx[0].text[0]))) {
        auto it = std::find_if(m.tensors.begin(), m.tensors.end(), [&](const ModelTensor& t) { return t.name == idx[0].text; });
        if (it == m.tensors.end() || &*it != cur_t) parse_fail(ln, idx[0].col, "entry names '" + idx[0].text + "', not the open tensor");
        idx.erase(idx.begin());
        if (!idx.empty() && idx[0].text == cur_t->space) idx.erase(idx.begin());
      }
      if (cur_t) {
        if (idx.size() != cur_t->arity)
          shape_fail(ln, "tensor " + cur_t->name + " has arity " + std::to_string(cur_t->arity) + ", entry has " +
                             std::to_string(idx.size()) + " indices");
        std::vector<std::size_t> d;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          d.push_back(to_index(idx[j], ln));
          if (d.back() >= slot_dims[j])
            shape_fail(ln, "index " + idx[j].text + " outside a space of dimension " + std::to_string(slot_dims[j]));
        }
        cur_t->entries.emplace_back(d, parse_vec(line.substr(colon + 1), cur_dim, m.field(), ln, colon + 2));
      } else if (cur_m) {
        if (idx.size() != 1) parse_fail(ln, 1, "map entry needs one column index");
        std::size_t c = to_index(idx[0], ln);
        if (c >= src_dim) shape_fail(ln, "column " + idx[0].text + " outside a space of dimension " + std::to_string(src_dim));
        cur_m->cols.emplace_back(c, parse_vec(line.substr(colon + 1), cur_dim, m.field(), ln, colon + 2));
      } else {
        parse_fail(ln, 1, "entry outside a tensor or map block");
      }
      continue;
    }
    auto tk = tokenize(line);
    const std::string& kw = tk[0].text;
    close();
    if (kw == "field") {
      if (tk.size() != 3 || tk[1].text != "cyclotomic") parse_fail(ln, tk[0].col, "expected 'field cyclotomic <N>'");
      if (field_seen || !m.spaces.empty()) parse_fail(ln, tk[0].col, "field must come first and only once");
      m.conductor = static_cast<int>(to_index(tk[2], ln));
      if (m.conductor < 1) parse_fail(ln, tk[2].col, "conductor must be positive");
      field_seen = true;
    } else if (kw == "name") {
      m.name = trim(line.substr(line.find("name") + 4));
    } else if (kw == "instance") {
      if (tk.size() < 2) parse_fail(ln, tk[0].col, "instance needs a kind");
      std::map<std::string, std::string> p;
      for (std::size_t j = 2; j < tk.size(); ++j) {
        std::size_t eq = tk[j].text.find('=');
        if (eq == std::string::npos || eq == 0) parse_fail(ln, tk[j].col, "expected key=value");
        p[tk[j].text.substr(0, eq)] = tk[j].text.substr(eq + 1);
      }
      m.instances.emplace_back(tk[1].text, p);
    } else if (kw == "task") {
      if (tk.size() != 3) parse_fail(ln, tk[0].col, "expected 'task <key> <value>'");
      m.tasks.emplace_back(tk[1].text, tk[2].text);
    } else if (kw == "space") {
      if (tk.size() < 4 || tk[2].text != "dim") parse_fail(ln, tk[0].col, "expected 'space <name> dim <d>'");
      ModelSpace s{tk[1].text, to_index(tk[3], ln), {}};
      if (s.name == "Q" || s.name.find('*') != std::string::npos) parse_fail(ln, tk[1].col, "reserved space name");
      if (std::any_of(m.spaces.begin(), m.spaces.end(), [&](const ModelSpace& o) { return o.name == s.name; }))
        parse_fail(ln, tk[1].col, "space '" + s.name + "' declared twice");
      if (tk.size() > 4) {
        if (tk[4].text != "labels") parse_fail(ln, tk[4].col, "expected 'labels'");
        for (std::size_t j = 5; j < tk.size(); ++j) s.labels.push_back(tk[j].text);
        if (s.labels.size() != s.dim) shape_fail(ln, "space " + s.name + " has " + std::to_string(s.labels.size()) + " labels for dimension " + std::to_string(s.dim));
      }
      m.spaces.push_back(std::move(s));
    } else if (kw == "tensor") {
      if (tk.size() < 4) parse_fail(ln, tk[0].col, "expected 'tensor <name> <arity> <space> [slots]'");
      ModelTensor t;
      t.name = tk[1].text;
      t.arity = to_index(tk[2], ln);
      t.space = tk[3].text;
      cur_dim = known(t.space, tk[3].col);
      slot_dims.clear();
      for (std::size_t j = 4; j < tk.size(); ++j) t.slots.push_back(tk[j].text);
      if (!t.slots.empty() && t.slots.size() != t.arity) shape_fail(ln, "tensor " + t.name + " lists " + std::to_string(t.slots.size()) + " slot spaces for arity " + std::to_string(t.arity));
      for (std::size_t j = 0; j < t.arity; ++j)
        slot_dims.push_back(t.slots.empty() ? cur_dim : known(t.slots[j], tk[4 + j].col));
      if (m.tensor(t.name) || m.map(t.name)) parse_fail(ln, tk[1].col, "name '" + t.name + "' defined twice");
      m.tensors.push_back(std::move(t));
      cur_t = &m.tensors.back();
    } else if (kw == "map") {
      if (tk.size() != 4) parse_fail(ln, tk[0].col, "expected 'map <name> <src> <tgt>'");
      ModelMap mp{tk[1].text, tk[2].text, tk[3].text, {}};
      src_dim = known(mp.src, tk[2].col);
      cur_dim = known(mp.tgt, tk[3].col);
      if (m.tensor(mp.name) || m.map(mp.name)) parse_fail(ln, tk[1].col, "name '" + mp.name + "' defined twice");
      m.maps.push_back(std::move(mp));
      cur_m = &m.maps.back();
    } else {
      parse_fail(ln, tk[0].col, "unknown keyword '" + kw + "'");
    }
  }
  return m;
}

ModelFile parse_model_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_model(ss.str());
}

// ------------------------------------------------------------ export

std::string export_model(const ModelFile& m) {
  std::ostringstream os;
  if (m.conductor > 1) os << "field cyclotomic " << m.conductor << "\n";
  if (!m.name.empty()) os << "name " << m.name << "\n";
  for (const auto& [kind, p] : m.instances) os << "instance " << kind << join_params(p) << "\n";
  for (const auto& [k, v] : m.tasks) os << "task " << k << " " << v << "\n";
  for (const auto& s : m.spaces) {
    os << "space " << s.name << " dim " << s.dim;
    if (!s.labels.empty()) {
      os << " labels";
      for (const auto& l : s.labels) os << " " << l;
    }
    os << "\n";
  }
  for (const auto& t : m.tensors) {
    os << "tensor " << t.name << " " << t.arity << " " << t.space;
    for (const auto& s : t.slots) os << " " << s;
    os << "\n";
    for (const auto& [idx, v] : t.entries) {
      for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? " " : "") << idx[j];
      os << (idx.empty() ? ": " : " : ") << v.str() << "\n";
    }
  }
  for (const auto& mp : m.maps) {
    os << "map " << mp.name << " " << mp.src << " " << mp.tgt << "\n";
    for (const auto& [c, v] : mp.cols) os << c << " : " << v.str() << "\n";
  }
  return os.str();
}

namespace {

ModelSpace model_space(const std::string& name, const LinSpace& s) {
  ModelSpace out{name, s.dim(), s.labels()};
  if (!std::all_of(out.labels.begin(), out.labels.end(), [](const std::string& l) {
        return plain_label(l) && l.find(':') == std::string::npos;
      }))
    out.labels.clear();
  return out;
}

ModelTensor mult_tensor(const std::string& name, const std::string& space, const FinAlgebra& A) {
  ModelTensor t{name, 2, space, {}, {}};
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (!A.mul_basis(i, j).empty()) t.entries.push_back({{i, j}, A.mul_basis(i, j)});
  return t;
}

ModelTensor vec_tensor(const std::string& name, const std::string& space, const SparseVec& v) {
  return {name, 0, space, {}, {{{}, v}}};
}

ModelMap model_map(const std::string& name, const std::string& src, const std::string& tgt, const LinMap& f) {
  ModelMap mp{name, src, tgt, {}};
  for (std::size_t c = 0; c < f.cols(); ++c)
    if (!f.col(c).empty()) mp.cols.emplace_back(c, f.col(c));
  return mp;
}

FinAlgebra algebra_from(const ModelFile& m, const std::string& mult, const std::string& unit,
                        const std::string& space) {
  const ModelTensor* t = m.tensor(mult);
  if (!t || t->arity != 2) throw ParseError("model has no binary tensor '" + mult + "'");
  LinSpace S = m.space(space);
  if (m.space(t->space).dim() != S.dim()) throw ShapeError("tensor " + mult + " must land in " + space);
  std::vector<SparseVec> table(S.dim() * S.dim());
  for (const auto& [idx, v] : t->entries) table[idx[0] * S.dim() + idx[1]] += v;
  return FinAlgebra(S, std::move(table), m.vector(unit));
}

LinMap checked_map(const ModelFile& m, const std::string& name, std::size_t src, std::size_t tgt) {
  LinMap f = m.linmap(name);
  if (f.cols() != src || f.rows() != tgt)
    throw ShapeError("map " + name + " is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     ", expected " + std::to_string(tgt) + "x" + std::to_string(src));
  return f;
}

std::size_t param_n(const std::map<std::string, std::string>& p, const std::string& key, std::size_t dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used);
    if (used != it->second.size() || v < 1) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("parameter " + key + " needs a positive integer, got '" + it->second + "'");
  }
}

std::string param_s(const std::map<std::string, std::string>& p, const std::string& key, const std::string& dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

HopfData hopf_by_name(const std::string& g) {
  if (g == "z2") return group_hopf_data(cyclic_group(2));
  if (g == "z3") return group_hopf_data(cyclic_group(3));
  if (g == "s3") return group_hopf_data(symmetric_group3());
  if (g == "sweedler") return sweedler_data();
  throw ParseError("unknown Hopf algebra '" + g + "' (z2, z3, s3, sweedler)");
}

}  // namespace

ModelFile model_from_bundle(const InstanceBundle& b) {
  const LeftBialgebroid& B = b.X.B;
  ModelFile m;
  m.conductor = b.conductor;
  m.name = b.name;
  m.spaces.push_back(model_space("R", B.R.space()));
  m.spaces.push_back(model_space("K", B.K.space()));
  m.tensors.push_back(mult_tensor("mult_R", "R", B.R));
  m.tensors.push_back(vec_tensor("unit_R", "R", B.R.unit()));
  m.tensors.push_back(mult_tensor("mult_K", "K", B.K));
  m.tensors.push_back(vec_tensor("unit_K", "K", B.K.unit()));
  if (!b.sigma.empty()) m.tensors.push_back(vec_tensor("sigma", "K", b.sigma));
  m.maps.push_back(model_map("s", "R", "K", B.s));
  m.maps.push_back(model_map("t", "R", "K", B.t));
  m.maps.push_back(model_map("Delta", "K", "K*K", B.Delta));
  m.maps.push_back(model_map("eps", "K", "R", B.eps));
  m.maps.push_back(model_map("trans", "K", "K*K", b.X.trans));
  if (b.delta) m.maps.push_back(model_map("delta", "K", "R", *b.delta));
  if (b.haar) m.maps.push_back(model_map("haar", "K", "R", *b.haar));
  if (b.phi) m.maps.push_back(model_map("phi", "R", "Q", *b.phi));
  return m;
}

void add_module_algebra(ModelFile& m, const ModuleAlgebra& A) {
  m.spaces.push_back(model_space("A", A.A.space()));
  m.tensors.push_back(mult_tensor("mult_A", "A", A.A));
  m.tensors.push_back(vec_tensor("unit_A", "A", A.A.unit()));
  ModelTensor act{"act_A", 2, "A", {"K", "A"}, {}};
  for (std::size_t k = 0; k < A.act.size(); ++k)
    for (std::size_t a = 0; a < A.A.dim(); ++a)
      if (!A.act[k].col(a).empty()) act.entries.push_back({{k, a}, A.act[k].col(a)});
  m.tensors.push_back(std::move(act));
}

std::optional<ModuleAlgebra> module_algebra_from_model(const ModelFile& m, const XHopfAlgebra& X) {
  if (!m.tensor("mult_A")) return std::nullopt;
  FinAlgebra A = algebra_from(m, "mult_A", "unit_A", "A");
  const ModelTensor* t = m.tensor("act_A");
  if (!t || t->arity != 2) throw ParseError("module algebra needs tensor act_A 2 A K A");
  std::vector<LinMap> act(X.B.dimK(), LinMap(A.space(), A.space()));
  for (const auto& [idx, v] : t->entries) {
    if (idx[0] >= act.size() || idx[1] >= A.dim()) throw ShapeError("act_A entry outside K x A");
    SparseVec c = act[idx[0]].col(idx[1]);
    c += v;
    act[idx[0]].set_col(idx[1], std::move(c));
  }
  return make_module_algebra(X.B, std::move(A), std::move(act));
}

// ------------------------------------------------------------ certify

InstanceBundle builtin_instance(const std::string& kind, const std::map<std::string, std::string>& p) {
  if (kind == "torus") return quantum_torus(param_n(p, "N", 2));
  if (kind == "enveloping") {
    const std::string r = param_s(p, "R", "dual");
    FinAlgebra R;
    if (r == "dual") R = dual_numbers();
    else if (r == "z2") R = group_algebra(cyclic_group(2));
    else if (r == "q") R = scalars();
    else throw ParseError("unknown base algebra '" + r + "' (dual, z2, q)");
    LinMap phi(R.space(), scalars().space());
    phi.set_col(0, SparseVec::unit(0));
    return enveloping_extras(enveloping(R), R.unit(), phi);
  }
  if (kind == "hopf") {
    const std::string g = param_s(p, "G", "z2");
    if (g == "sweedler") return sweedler();
    if (g == "z2") return group_hopf(cyclic_group(2));
    if (g == "z3") return group_hopf(cyclic_group(3));
    if (g == "s3") return group_hopf(symmetric_group3());
    throw ParseError("unknown Hopf algebra '" + g + "' (z2, z3, s3, sweedler)");
  }
  if (kind == "cm" || kind == "kadison") {
    HopfData H = hopf_by_name(param_s(p, "H", "z2"));
    const std::string a = param_s(p, "A", "swap");
    HModuleAlgebra A;
    if (a == "trivial") A = trivial_module_algebra(H);
    else if (a == "swap") A = swap_module_algebra(H);
    else throw ParseError("unknown module algebra '" + a + "' (trivial, swap)");
    return kind == "cm" ? cm_smash(H, A) : kadison(H, A);
  }
  throw ParseError("unknown instance kind '" + kind + "' (torus, enveloping, hopf, cm, kadison)");
}

ModelCheck certify_model(const ModelFile& m) {
  ModelCheck out;
  CheckReport& rep = out.report;
  InstanceBundle b;
  if (!m.tensor("mult_K")) {
    if (m.instances.empty()) throw ParseError("model defines neither structure maps nor an instance");
    b = builtin_instance(m.instances.front().first, m.instances.front().second);
    rep.merge(b.report);
  } else {
    b.name = m.name;
    b.conductor = m.conductor;
    FinAlgebra R = algebra_from(m, "mult_R", "unit_R", "R");
    FinAlgebra K = algebra_from(m, "mult_K", "unit_K", "K");
    rep.merge(check_algebra(R), "R: ");
    rep.merge(check_algebra(K), "K: ");
    const std::size_t dr = R.dim(), dk = K.dim();
    LinMap s = checked_map(m, "s", dr, dk), t = checked_map(m, "t", dr, dk);
    LinMap Delta = checked_map(m, "Delta", dk, dk * dk), eps = checked_map(m, "eps", dk, dr);
    if (!rep.ok()) return out;
    LeftBialgebroid Bd = assemble_bialgebroid(std::move(K), std::move(R), std::move(s), std::move(t),
                                              std::move(Delta), std::move(eps));
    rep.merge(check_bialgebroid(Bd));
    if (!rep.ok() || !m.map("trans")) {
      if (!m.map("trans")) rep.add("translation map present", false, "no map trans");
      return out;
    }
    b.X = assemble_xhopf(std::move(Bd), checked_map(m, "trans", dk, dk * dk));
    try {
      rep.merge(check_xhopf(b.X));
    } catch (const WellDefinednessError& e) {
      rep.add("ν and ν̂ descend", false, e.what());
      return out;
    }
    if (!rep.ok()) return out;
    if (m.tensor("sigma")) b.sigma = m.vector("sigma");
    if (m.map("delta")) {
      LinMap d = checked_map(m, "delta", dk, dr);
      CheckReport cr = check_right_character(b.X, d);
      rep.merge(cr, "δ: ");
      if (cr.ok()) {
        b.delta = d;
        if (b.sigma.empty()) b.sigma = b.X.B.K.unit();
        CheckReport sr = check_base_sayd(b.X, b.sigma, d);
        rep.merge(sr, "SAYD: ");
        if (sr.ok()) b.sayd = base_module(b.X, b.sigma, d);
      }
    }
    if (m.map("haar")) {
      b.haar = checked_map(m, "haar", dk, dr);
      rep.merge(check_haar(b), "Haar: ");
    }
    if (m.map("phi")) {
      b.phi = checked_map(m, "phi", dr, 1);
      SparseVec one = b.phi->apply(b.X.B.R.unit());
      rep.add("φ(1) = 1", one == SparseVec::unit(0), "φ(1) = " + one.str());
    }
  }
  std::optional<ModuleAlgebra> A = module_algebra_from_model(m, b.X);
  if (A) rep.merge(check_module_algebra(b.X, *A), "A: ");
  const std::size_t nmax = m.task("nmax") ? param_n({{"nmax", *m.task("nmax")}}, "nmax", 3) : 3;
  for (const auto& [k, v] : m.tasks) {
    if (k != "verify") continue;
    if (!b.sayd) {
      rep.add("verify " + v, false, "needs sigma and delta");
      continue;
    }
    CocyclicModule cx;
    if (v == "coring") cx = coring_cocyclic(b.X, coring_from_K(b.X.B), *b.sayd, nmax);
    else if (v == "algebra") cx = algebra_cocyclic(b.X, A ? *A : base_module_algebra(b.X.B), *b.sayd, nmax);
    else if (v == "simplified") cx = simplified_cocyclic(b.X, b.sigma, *b.delta, nmax);
    else throw ParseError("unknown complex '" + v + "' in task verify");
    rep.merge(verify_cocyclic(cx), v + ": ");
  }
  if (rep.ok()) out.bundle = std::move(b);
  return out;
}

InstanceBundle bundle_from_model(const ModelFile& m) {
  ModelCheck c = certify_model(m);
  if (!c.bundle) {
    const Check* f = c.report.first_failure();
    throw AxiomError(f ? f->name + (f->witness.empty() ? "" : ": " + f->witness) : "model does not certify");
  }
  return std::move(*c.bundle);
}

}  // namespace xhc
