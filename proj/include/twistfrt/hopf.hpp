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

// The quantum determinant of M_{q,p}(2), localization by its inverse, and
// the antipode of GL_{q,p}(2).

#include <vector>

#include "twistfrt/twisted_frt.hpp"

namespace twistfrt {

struct DeterminantElement {
  NCPoly value;                // ad - p^-1 q bc over the T-letters
  std::vector<Scalar> lambda;  // D x = λ x D, indexed by T-letter id
};

/// Builds D and verifies D x - λ x D = 0 for every generator. Uses the
/// presentation's deformation (q = p = 1 when absent). Throws
/// CommutationFailure with the residual when the table is inconsistent.
DeterminantElement det_qp(const BialgebraPresentation& presentation);

struct LocalizedPresentation {
  BialgebraPresentation base;
  DeterminantElement det;
  AlphabetPtr alphabet;  // a, b, c, d, D, Dinv
  RewriteSystem system;  // base rules, D/Dinv commutations and units
  CoproductTable coproduct;
  CounitTable counit;
};

/// Adjoins Dinv. Throws ConfluenceFailure when a critical pair up to the
/// base max_degree fails to resolve.
LocalizedPresentation localize(const BialgebraPresentation& presentation,
                               const DeterminantElement& det);

/// Zero test in the localized algebra: normal form, right multiplication
/// by D^K clearing every Dinv, elimination of D by its value, and
/// reduction modulo the base relations. Assumes D is not a zero divisor.
ZeroTest is_zero_localized(const NCPoly& x, const LocalizedPresentation& loc);

/// Normal form in the localized system (D and Dinv kept as letters).
NCPoly localized_normal_form(const NCPoly& x, const LocalizedPresentation& loc);

struct AntipodeMap {
  std::vector<std::optional<NCPoly>> table;  // indexed by localized letter id
};

/// a -> Dinv d, b -> -(pq)^-1 Dinv b, c -> -pq Dinv c, d -> Dinv a,
/// D -> Dinv, Dinv -> D.
AntipodeMap antipode_map(const LocalizedPresentation& loc);

/// Extends S as an anti-morphism; throws MissingGeneratorImage.
NCPoly apply_antipode(const NCPoly& x, const AntipodeMap& s);

/// Generator-level axiom S(T)T = T S(T) = I and matrix-level
/// M S(M) = S(M) M = I with S(M^{kl}_{ij}) = g(k,j,l) S(T^l_j) S(T^k_i).
CheckResult check_antipode(const AntipodeMap& s, const LocalizedPresentation& loc,
                           const TwistTensor& twist);

/// Δ(D) - D⊗D computed from the value of D, doubly reduced modulo the base.
CheckResult check_determinant_coproduct(const LocalizedPresentation& loc);
/// D x Dinv - λ x and S(r) for every base relation r vanish.
CheckResult check_localization(const LocalizedPresentation& loc, const AntipodeMap& s);
/// S² on each generator, reported without an expected value.
CheckResult antipode_square(const AntipodeMap& s, const LocalizedPresentation& loc);

}  // namespace twistfrt
