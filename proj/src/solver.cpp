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


#include "twistfrt/solver.hpp"

#include <cstdlib>
#include <map>
#include <set>

namespace twistfrt {

namespace {

std::string g_text(const GIndex& g) {
  return "g(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

std::string product_text(const std::vector<GIndex>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + g_text(f);
  return out;
}

struct Row {
  std::vector<long> coef;
  Scalar rhs;
};

}  // namespace

std::string CocycleEquation::str() const {
  std::string r = product_text(rhs);
  if (!constant.is_one()) {
    r = rhs.empty() ? constant.str()
                    : (constant.is_atomic() ? constant.str() : "(" + constant.str() + ")") + "*" + r;
  }
  return product_text(lhs) + " = " + r;
}

void CocycleSystem::impose(const GIndex& index, const Scalar& value) {
  equations.push_back({{index}, {}, value});
}

CocycleSystem generate_constraints(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  CocycleSystem system;
  system.dim = n;
  std::set<std::vector<long>> seen;
  const std::size_t count = static_cast<std::size_t>(n * n * n);
  auto idx = [&](const GIndex& g) {
    return static_cast<std::size_t>(((g[0] - 1) * n + (g[1] - 1)) * n + (g[2] - 1));
  };
  auto add = [&](CocycleEquation eq) {
    std::vector<long> key(count, 0);
    for (const auto& g : eq.lhs) ++key[idx(g)];
    for (const auto& g : eq.rhs) --key[idx(g)];
    long lead = 0;
    for (long v : key) {
      if (v != 0) {
        lead = v;
        break;
      }
    }
    if (lead == 0) return;  // identically true
    if (lead < 0) {
      for (long& v : key) v = -v;
    }
    if (seen.insert(key).second) system.equations.push_back(std::move(eq));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) add({{{i, j, j}}, {}, Scalar(1)});
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m)
          for (int nn = 1; nn <= n; ++nn)
            add({{{k, j, l}}, {{m, j, nn}, {k, nn, l}}, Scalar(1)});
  return system;
}

TwistFamily solve_diagonal_twist(const CocycleSystem& system) {
  const int n = system.dim;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const std::size_t count = static_cast<std::size_t>(n * n * n);

  // Column order: every unknown except g(1,j,n), then g(1,1,n)..g(1,n-1,n).
  std::vector<GIndex> columns;
  std::vector<GIndex> tail;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == 1 && k == n && j < n) {
          tail.push_back({i, j, k});
        } else {
          columns.push_back({i, j, k});
        }
      }
  columns.insert(columns.end(), tail.begin(), tail.end());
  std::map<GIndex, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;

  std::vector<Row> rows;
  for (const auto& eq : system.equations) {
    if (!eq.constant.is_monomial()) {
      throw Error(ErrorCode::InconsistentSystem,
                  "constraint constant is not a monomial: " + eq.str());
    }
    Row row{std::vector<long>(count, 0), eq.constant};
    for (const auto& g : eq.lhs) ++row.coef[column_of.at(g)];
    for (const auto& g : eq.rhs) --row.coef[column_of.at(g)];
    rows.push_back(std::move(row));
  }

  // Integer row reduction; rhs follows multiplicatively.
  auto sub = [](Row& target, const Row& source, long t) {
    for (std::size_t c = 0; c < target.coef.size(); ++c) target.coef[c] -= t * source.coef[c];
    target.rhs = target.rhs / source.rhs.pow(static_cast<int>(t));
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < count && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i].coef[col] != 0 &&
            (best == rows.size() || std::labs(rows[i].coef[col]) < std::labs(rows[best].coef[col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i].coef[col] == 0) continue;
        sub(rows[i], rows[r], rows[i].coef[col] / rows[r].coef[col]);
        if (rows[i].coef[col] != 0) reduced = false;
      }
      if (reduced) {
        if (rows[r].coef[col] < 0) {
          for (long& v : rows[r].coef) v = -v;
          rows[r].rhs = rows[r].rhs.inverse();
        }
        pivots.push_back(col);
        ++r;
        break;
      }
    }
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i].rhs.is_one()) {
      throw Error(ErrorCode::InconsistentSystem,
                  "constraints imply 1 = " + rows[i].rhs.str());
    }
  }

  TwistFamily family;
  family.dim = n;
  std::vector<std::optional<Scalar>> value(count);
  std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
  for (std::size_t c = 0; c < count; ++c) {
    if (pivot_set.count(c)) continue;
    const GIndex& g = columns[c];
    std::string name;
    if (g[0] == 1 && g[2] == n && g[1] < n) {
      name = n == 2 ? "p" : "p" + std::to_string(g[1]);
    } else {
      name = "g" + std::to_string(g[0]) + std::to_string(g[1]) + std::to_string(g[2]);
    }
    intern_param(name);
    family.parameters.push_back(name);
    value[c] = Scalar::param(name);
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t col = pivots[i];
    const Row& row = rows[i];
    if (row.coef[col] != 1) {
      throw Error(ErrorCode::InvalidArgument, "solution requires a root of " + row.rhs.str());
    }
    Scalar v = row.rhs;
    for (std::size_t c = col + 1; c < count; ++c) {
      if (row.coef[c] != 0) v = v / value[c]->pow(static_cast<int>(row.coef[c]));
    }
    value[col] = v;
  }

  family.g = TwistTensor::diagonal(n);
  for (std::size_t c = 0; c < count; ++c) {
    family.g.set_g(columns[c][0], columns[c][1], columns[c][2], *value[c]);
  }
  family.gauge = "phi(" + std::to_string(n) + ") = 1";
  for (int j = 1; j <= n; ++j) family.phi.push_back(j == n ? Scalar(1) : family.g.g(1, j, n));
  return family;
}

CheckResult check_constraints(const CocycleSystem& system, const TwistTensor& g) {
  CheckResult result("cocycle-constraints");
  for (const auto& eq : system.equations) {
    Scalar lhs(1);
    Scalar rhs = eq.constant;
    for (const auto& x : eq.lhs) lhs *= g.g(x[0], x[1], x[2]);
    for (const auto& x : eq.rhs) rhs *= g.g(x[0], x[1], x[2]);
    if (lhs != rhs) result.fail(eq.str(), (lhs - rhs).str());
  }
  result.details["equations"] = system.equations.size();
  return result;
}

std::vector<CheckResult> verify_twist(const TwistTensor& g, const EndoTensor& b, int max_degree) {
  if (g.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "twist and B dimensions differ");
  const MMatrix m = build_M(g);
  const std::vector<NCPoly> generators = ideal_generators(b, m);
  CheckResult ideal("ideal");
  nlohmann::ordered_json rel = nlohmann::ordered_json::array();
  for (const auto& r : generators) rel.push_back(r.str());
  ideal.details["relations"] = rel;
  const BialgebraPresentation pres = presentation_from_relations(b.dim(), generators, max_degree);
  std::vector<CheckResult> out;
  out.push_back(std::move(ideal));
  out.push_back(check_multiplicative(m, pres.relations));
  out.push_back(check_counit(m));
  out.push_back(check_coideal(b, m, pres.relations));
  return out;
}

}  // namespace twistfrt
