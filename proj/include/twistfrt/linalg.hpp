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

#pragma once

// Exact Gaussian elimination over the scalar field.

#include <vector>

#include "twistfrt/freealg.hpp"
#include "twistfrt/scalar.hpp"

namespace twistfrt {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct Echelon {
  ScalarMatrix rows;                // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form. The pivot of each row is its first nonzero
/// column, normalized to 1; zero rows are dropped.
Echelon row_echelon(ScalarMatrix rows);

std::size_t rank(const ScalarMatrix& rows);

/// Deterministic basis of the Scalar-span of `polys`: reduced echelon form
/// with columns ordered by decreasing word, so every basis element is monic
/// in its leading word and no leading word occurs in another element.
/// Output is sorted by decreasing leading word.
std::vector<NCPoly> echelon_basis(const std::vector<NCPoly>& polys);

/// True when every element of `a` lies in span(b) and vice versa.
bool same_span(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b);

}  // namespace twistfrt
