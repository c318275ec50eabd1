// Copyright 2026 The twistfrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "twistfrt/spec.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "twistfrt/expr_parser.hpp"
#include "twistfrt/solver.hpp"

namespace twistfrt {

namespace {

struct Line {
  int number;
  int indent;  // column of the first character of `text`, 1-based
  std::string text;
};

struct Section {
  int line = 0;
  std::vector<Line> lines;
};

const std::set<std::string, std::less<>> kSections = {"params",    "dim",     "B",       "twist",
                                                      "relations", "options", "bindings"};

[[noreturn]] void semantic(const Line& line, int column, const std::string& message) {
  throw Error(ErrorCode::SemanticError,
              std::to_string(line.number) + ":" + std::to_string(column) + ": " + message);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return std::string(s.substr(b, e - b));
}

// Splits on commas, reporting each piece's column.
std::vector<std::pair<std::string, int>> split_commas(const std::string& text, int column) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::size_t lead = 0;
      std::string piece = trim(std::string_view(text).substr(start, i - start), &lead);
      out.emplace_back(piece, column + static_cast<int>(start + lead));
      start = i + 1;
    }
  }
  return out;
}

bool parse_int(const std::string& s, int* out) {
  if (s.empty() || s.size() > 6) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  *out = std::stoi(s);
  return true;
}

Scalar bound(const Scalar& s, const std::map<std::string, mpq_class>& bindings) {
  return bindings.empty() ? s : s.substitute(bindings);
}

void apply_bindings(AlgebraSpec& spec) {
  if (spec.bindings.empty()) return;
  auto f = [&](const Scalar& s) { return bound(s, spec.bindings); };
  if (spec.b) {
    for (auto& row : *spec.b)
      for (auto& x : row) x = f(x);
  }
  for (auto& e : spec.twist_entries) e.value = f(e.value);
  for (auto& r : spec.relations) r = r.map_coefficients(f);
}

void parse_params(AlgebraSpec& spec, const Section& sec) {
  std::set<std::string> seen;
  for (const Line& line : sec.lines) {
    for (const auto& [name, col] : split_commas(line.text, line.indent)) {
      if (name.empty() || !is_ident_start(name[0]) ||
          !std::all_of(name.begin(), name.end(), is_ident)) {
        throw ParseError("invalid parameter name '" + name + "'", line.number, col,
                         "identifier");
      }
      if (!seen.insert(name).second) semantic(line, col, "duplicate parameter '" + name + "'");
      spec.params.push_back(name);
    }
  }
}

void parse_dim(AlgebraSpec& spec, const Section& sec) {
  if (sec.lines.size() != 1) {
    throw ParseError("[dim] takes exactly one value", sec.line, 1, "positive integer");
  }
  const Line& line = sec.lines[0];
  int n = 0;
  if (!parse_int(line.text, &n) || n < 1 || n > 9) {
    throw ParseError("invalid dimension '" + line.text + "'", line.number, line.indent,
                     "integer between 1 and 9");
  }
  spec.dim = n;
}

void parse_b(AlgebraSpec& spec, const Section& sec, const ParamSet& params) {
  const int size = spec.dim * spec.dim;
  ScalarMatrix rows;
  for (const Line& line : sec.lines) {
    if (line.text == "complement") {
      if (!rows.empty() || spec.complement) {
        throw ParseError("'complement' must precede the matrix rows", line.number, line.indent,
                         "matrix row");
      }
      spec.complement = true;
      continue;
    }
    std::string body = line.text;
    int column = line.indent;
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') {
        throw ParseError("unterminated matrix row", line.number,
                         line.indent + static_cast<int>(body.size()), "']'");
      }
      body = body.substr(1, body.size() - 2);
      ++column;
    }
    std::vector<Scalar> row;
    const auto cells = split_commas(body, column);
    for (const auto& [cell, col] : cells) {
      if (cell.empty()) throw ParseError("empty matrix entry", line.number, col, "expression");
      row.push_back(parse_scalar(cell, params, {line.number, col}));
    }
    if (static_cast<int>(row.size()) != size) {
      semantic(line, line.indent,
               "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                   std::to_string(size));
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != size) {
    throw Error(ErrorCode::SemanticError,
                std::to_string(sec.line) + ":1: [B] has " + std::to_string(rows.size()) +
                    " rows, expected " + std::to_string(size));
  }
  spec.b = std::move(rows);
}

void parse_twist(AlgebraSpec& spec, const Section& sec, const ParamSet& params) {
  for (const Line& line : sec.lines) {
    if (line.text == "flip" || line.text == "solve") {
      if (sec.lines.size() != 1) {
        throw ParseError("'" + line.text + "' cannot be combined with other twist lines",
                         line.number, line.indent, "a single keyword");
      }
      spec.twist = line.text == "flip" ? TwistKind::Flip : TwistKind::Solve;
      return;
    }
    const std::string& t = line.text;
    std::size_t pos = 0;
    auto expect = [&](char c, const char* what) {
      while (pos < t.size() && t[pos] == ' ') ++pos;
      if (pos >= t.size() || t[pos] != c) {
        throw ParseError("malformed twist entry", line.number, line.indent + static_cast<int>(pos),
                         what);
      }
      ++pos;
    };
    expect('g', "'flip', 'solve' or g(i,j,k) = expr");
    expect('(', "'('");
    TwistEntry entry;
    for (int slot = 0; slot < 3; ++slot) {
      while (pos < t.size() && t[pos] == ' ') ++pos;
      const std::size_t start = pos;
      while (pos < t.size() && is_ident(t[pos])) ++pos;
      std::string index = t.substr(start, pos - start);
      const int col = line.indent + static_cast<int>(start);
      if (index.empty()) throw ParseError("missing index", line.number, col, "index");
      int value = 0;
      if (std::isdigit(static_cast<unsigned char>(index[0]))) {
        if (!parse_int(index, &value)) {
          throw ParseError("invalid index '" + index + "'", line.number, col, "index");
        }
        if (value < 1 || value > spec.dim) {
          semantic(line, col, "index " + index + " out of range 1.." + std::to_string(spec.dim));
        }
      }
      entry.index[static_cast<std::size_t>(slot)] = index;
      expect(slot < 2 ? ',' : ')', slot < 2 ? "','" : "')'");
    }
    expect('=', "'='");
    std::size_t lead = 0;
    const std::string expr = trim(std::string_view(t).substr(pos), &lead);
    const int col = line.indent + static_cast<int>(pos + lead);
    if (expr.empty()) throw ParseError("missing twist value", line.number, col, "expression");
    entry.value = parse_scalar(expr, params, {line.number, col});
    spec.twist_entries.push_back(std::move(entry));
  }
  if (!spec.twist_entries.empty()) spec.twist = TwistKind::Table;
}

void parse_relations(AlgebraSpec& spec, const Section& sec, const ParamSet& params) {
  const AlphabetPtr alphabet = Alphabet::standard(spec.dim);
  for (const Line& line : sec.lines) {
    NCPoly r = parse_ncpoly(line.text, alphabet, params, {line.number, line.indent});
    spec.relations.push_back(r.rebased(alphabet));
  }
}

void parse_options(AlgebraSpec& spec, const Section& sec) {
  for (const Line& line : sec.lines) {
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("malformed option", line.number, line.indent, "key = value");
    }
    const std::string key = trim(std::string_view(line.text).substr(0, eq));
    std::size_t lead = 0;
    const std::string value = trim(std::string_view(line.text).substr(eq + 1), &lead);
    const int col = line.indent + static_cast<int>(eq + 1 + lead);
    if (key == "max_degree") {
      int d = 0;
      if (!parse_int(value, &d) || d < 2) {
        throw ParseError("invalid max_degree '" + value + "'", line.number, col,
                         "integer >= 2");
      }
      spec.max_degree = d;
    } else if (key == "checks") {
      spec.checks.clear();
      for (const auto& [name, c] : split_commas(value, col)) {
        if (name.empty()) throw ParseError("empty check name", line.number, c, "check name");
        spec.checks.push_back(name);
      }
    } else if (key == "localize") {
      if (value != "true" && value != "false") {
        throw ParseError("invalid boolean '" + value + "'", line.number, col, "true or false");
      }
      spec.localize = value == "true";
    } else {
      semantic(line, line.indent, "unknown option '" + key + "'");
    }
  }
}

void parse_bindings(AlgebraSpec& spec, const Section& sec) {
  for (const Line& line : sec.lines) {
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("malformed binding", line.number, line.indent, "name = rational");
    }
    const std::string key = trim(std::string_view(line.text).substr(0, eq));
    std::size_t lead = 0;
    const std::string value = trim(std::string_view(line.text).substr(eq + 1), &lead);
    const int col = line.indent + static_cast<int>(eq + 1 + lead);
    if (std::find(spec.params.begin(), spec.params.end(), key) == spec.params.end()) {
      semantic(line, line.indent, "unknown parameter '" + key + "'");
    }
    const Scalar v = parse_scalar(value, ParamSet(), {line.number, col});
    if (!v.is_rational()) semantic(line, col, "binding must be rational");
    spec.bindings[key] = v.rational_value();
  }
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text, std::string name) {
  AlgebraSpec spec;
  spec.name = std::move(name);
  std::map<std::string, Section, std::less<>> sections;
  Section* current = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t lead = 0;
    const std::string body = trim(raw, &lead);
    if (body.empty()) continue;
    const int indent = static_cast<int>(lead) + 1;
    if (body.front() == '[' && body.back() == ']') {
      const std::string inner = body.substr(1, body.size() - 2);
      if (kSections.count(inner)) {
        if (sections.count(inner)) {
          throw ParseError("duplicate section [" + inner + "]", number, indent, "new section");
        }
        current = &sections[inner];
        current->line = number;
        continue;
      }
      const bool identifier = !inner.empty() && std::all_of(inner.begin(), inner.end(), [](char c) {
        return is_ident(c) || c == '-';
      });
      if (identifier && !std::isdigit(static_cast<unsigned char>(inner[0]))) {
        throw ParseError("unknown section [" + inner + "]", number, indent,
                         "one of [params], [dim], [B], [twist], [relations], [options], "
                         "[bindings]");
      }
    }
    if (!current) throw ParseError("content outside of a section", number, indent, "section header");
    current->lines.push_back({number, indent, body});
  }

  if (auto it = sections.find("params"); it != sections.end()) parse_params(spec, it->second);
  const ParamSet params = spec.param_set();
  if (auto it = sections.find("dim"); it != sections.end()) {
    parse_dim(spec, it->second);
  } else if (auto b = sections.find("B"); b != sections.end()) {
    // Infer n from the number of rows.
    int rows = 0;
    for (const auto& l : b->second.lines) rows += l.text != "complement";
    int n = 1;
    while (n * n < rows) ++n;
    spec.dim = n;
  }
  const AlphabetPtr letters = Alphabet::standard(spec.dim, true, spec.dim == 2);
  for (const auto& p : spec.params) {
    if (letters->find(p)) {
      throw Error(ErrorCode::SemanticError, "parameter '" + p + "' collides with a generator name");
    }
  }
  if (auto it = sections.find("bindings"); it != sections.end()) parse_bindings(spec, it->second);
  if (auto it = sections.find("B"); it != sections.end()) parse_b(spec, it->second, params);
  if (auto it = sections.find("twist"); it != sections.end()) parse_twist(spec, it->second, params);
  if (auto it = sections.find("relations"); it != sections.end()) {
    parse_relations(spec, it->second, params);
  }
  if (auto it = sections.find("options"); it != sections.end()) parse_options(spec, it->second);
  apply_bindings(spec);
  return spec;
}

std::string render_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  if (!spec.params.empty()) {
    out << "[params]\n";
    for (std::size_t i = 0; i < spec.params.size(); ++i) out << (i ? ", " : "") << spec.params[i];
    out << "\n";
  }
  out << "[dim]\n" << spec.dim << "\n";
  if (spec.b) {
    out << "[B]\n";
    if (spec.complement) out << "complement\n";
    for (const auto& row : *spec.b) {
      out << "[";
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << row[i].str();
      out << "]\n";
    }
  }
  switch (spec.twist) {
    case TwistKind::Flip:
      out << "[twist]\nflip\n";
      break;
    case TwistKind::Solve:
      out << "[twist]\nsolve\n";
      break;
    case TwistKind::Table:
      out << "[twist]\n";
      for (const auto& e : spec.twist_entries) {
        out << "g(" << e.index[0] << "," << e.index[1] << "," << e.index[2]
            << ") = " << e.value.str() << "\n";
      }
      break;
  }
  if (!spec.relations.empty()) {
    out << "[relations]\n";
    for (const auto& r : spec.relations) out << r.str() << "\n";
  }
  out << "[options]\nmax_degree = " << spec.max_degree << "\n";
  if (!spec.checks.empty()) {
    out << "checks = ";
    for (std::size_t i = 0; i < spec.checks.size(); ++i) out << (i ? ", " : "") << spec.checks[i];
    out << "\n";
  }
  if (spec.localize) out << "localize = true\n";
  if (!spec.bindings.empty()) {
    out << "[bindings]\n";
    for (const auto& [k, v] : spec.bindings) out << k << " = " << v.get_str() << "\n";
  }
  return out.str();
}

namespace {

constexpr std::string_view kQuantumPlaneB =
    "[1, 0, 0, 0]\n"
    "[0, 0, q, 0]\n"
    "[0, q, 1 - q^2, 0]\n"
    "[0, 0, 0, 1]\n";

constexpr std::string_view kTwist =
    "[twist]\n"
    "g(i,j,j) = 1\n"
    "g(i,1,2) = p\n"
    "g(i,2,1) = p^-1\n";

constexpr std::string_view kMqp2Relations =
    "[relations]\n"
    "ac - p*q*ca\n"
    "ab - p^-1*q*ba\n"
    "bc - p^2*cb\n"
    "cd - p^-1*q*dc\n"
    "bd - p*q*db\n"
    "ad - da + p*(q^-1 - q)*cb\n";

std::string preset_text(std::string_view name) {
  const std::string head = "[params]\nq, p\n[dim]\n2\n";
  if (name == "quantum-plane") return head + "[B]\n" + std::string(kQuantumPlaneB) + std::string(kTwist);
  if (name == "grassmann-plane") {
    return head + "[B]\ncomplement\n" + std::string(kQuantumPlaneB) + std::string(kTwist);
  }
  if (name == "b-prime") {
    return head +
           "[B]\n"
           "[1, 0, 0, 0]\n"
           "[0, (q - q^-1)/(q + q^-1), 2/(q + q^-1), 0]\n"
           "[0, 2/(q + q^-1), (q^-1 - q)/(q + q^-1), 0]\n"
           "[0, 0, 0, 1]\n" +
           std::string(kTwist);
  }
  if (name == "m-qp-2") {
    return head + "[B]\n" + std::string(kQuantumPlaneB) + std::string(kTwist) +
           std::string(kMqp2Relations);
  }
  if (name == "gl-qp-2") {
    return head + "[B]\n" + std::string(kQuantumPlaneB) + std::string(kTwist) +
           std::string(kMqp2Relations) + "[options]\nlocalize = true\n";
  }
  throw Error(ErrorCode::SemanticError, "unknown preset '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"quantum-plane", "grassmann-plane", "b-prime",
                                                 "m-qp-2", "gl-qp-2"};
  return names;
}

AlgebraSpec preset(std::string_view name) {
  return parse_spec(preset_text(name), "preset:" + std::string(name));
}

AlgebraSpec specialize(const AlgebraSpec& spec, const std::map<std::string, mpq_class>& values) {
  AlgebraSpec out = spec;
  for (const auto& [k, v] : values) {
    if (std::find(spec.params.begin(), spec.params.end(), k) == spec.params.end()) {
      throw Error(ErrorCode::SemanticError, "unknown parameter '" + k + "'");
    }
    out.bindings[k] = v;
  }
  apply_bindings(out);
  return out;
}

EndoTensor spec_b(const AlgebraSpec& spec) {
  if (!spec.b) throw Error(ErrorCode::SemanticError, "spec has no [B] section");
  const EndoTensor b = EndoTensor::from_matrix(spec.dim, *spec.b);
  return spec.complement ? spectral_complement(b).b : b;
}

TwistTensor spec_twist(const AlgebraSpec& spec) {
  const int n = spec.dim;
  switch (spec.twist) {
    case TwistKind::Flip:
      return TwistTensor::flip(n);
    case TwistKind::Solve: {
      const TwistTensor g = solve_diagonal_twist(generate_constraints(n)).g;
      return g.map([&](const Scalar& s) { return bound(s, spec.bindings); });
    }
    case TwistKind::Table:
      break;
  }
  TwistTensor g = TwistTensor::diagonal(n);
  for (const auto& entry : spec.twist_entries) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          const std::array<int, 3> at{i, j, k};
          std::map<std::string, int> names;
          bool match = true;
          for (std::size_t s = 0; s < 3 && match; ++s) {
            const std::string& idx = entry.index[s];
            if (std::isdigit(static_cast<unsigned char>(idx[0]))) {
              match = std::stoi(idx) == at[s];
            } else {
              auto [it, inserted] = names.emplace(idx, at[s]);
              match = inserted || it->second == at[s];
            }
          }
          if (match) g.set_g(i, j, k, entry.value);
        }
  }
  return g;
}

Deformation spec_deformation(const AlgebraSpec& spec) {
  auto value = [&](const char* name) {
    if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end()) {
      return Scalar(1);
    }
    return bound(Scalar::param(name), spec.bindings);
  };
  return {value("q"), value("p")};
}

}  // namespace twistfrt
