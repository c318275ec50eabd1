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

// Diagonal twists g(i,j,k) making M multiplicative and counital.

#include <array>
#include <string>
#include <vector>

#include "twistfrt/twisted_frt.hpp"

namespace twistfrt {

using GIndex = std::array<int, 3>;

/// Π g(lhs) = constant · Π g(rhs), unknowns treated as invertible symbols.
struct CocycleEquation {
  std::vector<GIndex> lhs;
  std::vector<GIndex> rhs;
  Scalar constant{1};

  std::string str() const;
};

struct CocycleSystem {
  int dim = 0;
  std::vector<CocycleEquation> equations;

  /// Appends g(i,j,k) = value; `value` must be a monomial.
  void impose(const GIndex& index, const Scalar& value);
};

/// Normalization g(i,j,j) = 1 and multiplicativity
/// g(k,j,l) = g(m,j,n) g(k,n,l), deduplicated.
CocycleSystem generate_constraints(int n);

struct TwistFamily {
  int dim = 0;
  std::vector<std::string> parameters;  // free symbols, registered as params
  std::string gauge;                    // e.g. "phi(2) = 1"
  std::vector<Scalar> phi;              // φ(1..n) with the gauge applied
  TwistTensor g = TwistTensor::diagonal(1);
};

/// Solves the system in the exponent lattice. Free unknowns are taken to
/// be g(1,j,n) for j < n and named p (n = 2) or p1..p{n-1}. Throws
/// InconsistentSystem when no solution exists or a constant is not a
/// monomial.
TwistFamily solve_diagonal_twist(const CocycleSystem& system);

/// Substitutes `g` into every equation; failures carry the equation text.
CheckResult check_constraints(const CocycleSystem& system, const TwistTensor& g);

/// Ideal, multiplicativity, counit and coideal checks for (g, B).
std::vector<CheckResult> verify_twist(const TwistTensor& g, const EndoTensor& b,
                                      int max_degree = 4);

}  // namespace twistfrt
