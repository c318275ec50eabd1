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

#include <algorithm>
#include <map>

#include "twistfrt/linalg.hpp"

namespace twistfrt {

Echelon row_echelon(ScalarMatrix rows) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Scalar inv = rows[next][col].inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!rows[next][c].is_zero()) rows[next][c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!rows[next][c].is_zero()) rows[r][c] -= factor * rows[next][c];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const ScalarMatrix& rows) { return row_echelon(rows).rows.size(); }

namespace {

struct Coordinates {
  std::vector<Word> columns;  // decreasing word order
  ScalarMatrix rows;
};

Coordinates coordinates(const std::vector<NCPoly>& polys) {
  std::map<Word, std::size_t, WordLess> index;
  for (const auto& p : polys) {
    for (const auto& [w, c] : p.terms()) index.emplace(w, 0);
  }
  Coordinates out;
  out.columns.reserve(index.size());
  for (auto it = index.rbegin(); it != index.rend(); ++it) {
    it->second = out.columns.size();
    out.columns.push_back(it->first);
  }
  for (const auto& p : polys) {
    std::vector<Scalar> row(out.columns.size());
    for (const auto& [w, c] : p.terms()) row[index[w]] = c;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<NCPoly> echelon_basis(const std::vector<NCPoly>& polys) {
  AlphabetPtr alphabet;
  for (const auto& p : polys) {
    if (p.alphabet()) {
      alphabet = p.alphabet();
      break;
    }
  }
  Coordinates coords = coordinates(polys);
  Echelon e = row_echelon(std::move(coords.rows));
  std::vector<NCPoly> basis;
  for (const auto& row : e.rows) {
    NCPoly p(alphabet);
    for (std::size_t c = 0; c < row.size(); ++c) p.add_term(coords.columns[c], row[c]);
    basis.push_back(std::move(p));
  }
  return basis;
}

bool same_span(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b) {
  std::vector<NCPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = echelon_basis(both).size();
  return r == echelon_basis(a).size() && r == echelon_basis(b).size();
}

}  // namespace twistfrt
