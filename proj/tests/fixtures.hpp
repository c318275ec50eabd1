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

// Shared data for the tests: the quantum-plane forms, the two-parameter
// twist and the printed M_{q,p}(2) relations.

#include <string>
#include <vector>

#include "twistfrt/expr_parser.hpp"
#include "twistfrt/quadspace.hpp"
#include "twistfrt/twisted_frt.hpp"

namespace fixtures {

using namespace twistfrt;

inline const ParamSet& params() {
  static const ParamSet ps({"q", "p"});
  return ps;
}

inline Scalar S(const std::string& text) { return parse_scalar(text, params()); }

inline NCPoly P(const std::string& text, const AlphabetPtr& alphabet = Alphabet::standard(2)) {
  return parse_ncpoly(text, alphabet, params());
}

inline EndoTensor quantum_plane_b() {
  return EndoTensor::from_matrix(
      2, {{1, 0, 0, 0}, {0, 0, S("q"), 0}, {0, S("q"), S("1-q^2"), 0}, {0, 0, 0, 1}});
}

inline EndoTensor b_prime() {
  const Scalar k = S("1/(q+q^-1)");
  return EndoTensor::from_matrix(2, {{1, 0, 0, 0},
                                     {0, S("q-q^-1") * k, Scalar(2) * k, 0},
                                     {0, Scalar(2) * k, S("q^-1-q") * k, 0},
                                     {0, 0, 0, 1}});
}

/// g(i,j,j) = 1, g(i,1,2) = x, g(i,2,1) = y.
inline TwistTensor two_parameter_twist(const Scalar& x, const Scalar& y) {
  TwistTensor g = TwistTensor::diagonal(2);
  for (int i = 1; i <= 2; ++i) {
    g.set_g(i, 1, 2, x);
    g.set_g(i, 2, 1, y);
  }
  return g;
}

inline TwistTensor pq_twist() { return two_parameter_twist(S("p"), S("p^-1")); }

inline std::vector<NCPoly> printed_mqp2() {
  std::vector<NCPoly> out;
  for (const char* r : {"ac - p*q*ca", "ab - p^-1*q*ba", "bc - p^2*cb", "cd - p^-1*q*dc",
                        "bd - p*q*db", "ad - da + p*(q^-1 - q)*cb"}) {
    out.push_back(P(r));
  }
  return out;
}

/// Every element of `a` reduces to zero modulo `sys`.
inline bool all_reduce(const std::vector<NCPoly>& a, const RewriteSystem& sys) {
  for (const auto& x : a) {
    if (!is_zero_mod(x, sys).zero) return false;
  }
  return true;
}

}  // namespace fixtures
