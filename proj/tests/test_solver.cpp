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


#include "doctest.h"
#include "fixtures.hpp"
#include "twistfrt/solver.hpp"

using namespace twistfrt;
using fixtures::S;

namespace {

// ΔM - M⊗M and ε(M) - I computed in the free algebra.
bool multiplicative_in_free_algebra(const TwistTensor& g) {
  const int n = g.dim();
  const MMatrix m = build_M(g);
  const auto al = m.alphabet();
  const CoproductTable delta = standard_coproduct(al);
  const CounitTable eps = standard_counit(al);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          TensorNCPoly d = coproduct(m(i, j, k, l), delta);
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) d = d - TensorNCPoly::pure({m(i, j, r, s), m(r, s, k, l)});
          if (!d.is_zero()) return false;
          const Scalar e = counit(m(i, j, k, l), eps);
          if (e != Scalar((i == k && j == l) ? 1 : 0)) return false;
        }
  return true;
}

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("two-dimensional solution is the one-parameter family") {
  const CocycleSystem sys = generate_constraints(2);
  CHECK(sys.equations.size() == 16);
  const TwistFamily fam = solve_diagonal_twist(sys);
  CHECK(fam.parameters == std::vector<std::string>{"p"});
  CHECK(fam.g == fixtures::pq_twist());
  CHECK(fam.gauge == "phi(2) = 1");
  REQUIRE(fam.phi.size() == 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) CHECK(fam.g.g(i, j, k) == fam.phi[j - 1] / fam.phi[k - 1]);
  CHECK(check_constraints(sys, fam.g).status == Status::Pass);
  CHECK(multiplicative_in_free_algebra(fam.g));
}

TEST_CASE("brute force over p^k exponents finds exactly the family") {
  // Normalized entries g(i,j,j) = 1; the four off-diagonal entries range
  // over p^-2 .. p^2.
  std::vector<Scalar> values;
  for (int e = -2; e <= 2; ++e) values.push_back(Scalar::param("p", e));
  const CocycleSystem sys = generate_constraints(2);
  int found = 0;
  for (const auto& x1 : values)
    for (const auto& y1 : values)
      for (const auto& x2 : values)
        for (const auto& y2 : values) {
          TwistTensor g = TwistTensor::diagonal(2);
          g.set_g(1, 1, 2, x1);
          g.set_g(1, 2, 1, y1);
          g.set_g(2, 1, 2, x2);
          g.set_g(2, 2, 1, y2);
          const bool oracle = multiplicative_in_free_algebra(g);
          CHECK(oracle == check_constraints(sys, g).passed());
          if (oracle) {
            ++found;
            CHECK(x1 == x2);
            CHECK(y1 == y2);
            CHECK(x1 * y1 == Scalar(1));
          }
        }
  CHECK(found == 5);
}

TEST_CASE("the solved twist passes verification with p formal") {
  const TwistFamily fam = solve_diagonal_twist(generate_constraints(2));
  for (const auto& r : verify_twist(fam.g, fixtures::quantum_plane_b())) {
    CAPTURE(r.name);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("imposing g(1,1,2) = 1 leaves only the trivial twist") {
  CocycleSystem sys = generate_constraints(2);
  sys.impose({1, 1, 2}, Scalar(1));
  const TwistFamily fam = solve_diagonal_twist(sys);
  CHECK(fam.parameters.empty());
  CHECK(fam.g == TwistTensor::diagonal(2));
}

TEST_CASE("dimension one and three") {
  const TwistFamily one = solve_diagonal_twist(generate_constraints(1));
  CHECK(one.parameters.empty());
  CHECK(one.g.g(1, 1, 1).is_one());

  const CocycleSystem sys = generate_constraints(3);
  CHECK(sys.equations.size() == 153);
  const TwistFamily fam = solve_diagonal_twist(sys);
  CHECK(fam.parameters == std::vector<std::string>{"p1", "p2"});
  CHECK(check_constraints(sys, fam.g).status == Status::Pass);
  CHECK(multiplicative_in_free_algebra(fam.g));
  CHECK(fam.g.g(3, 1, 3) == Scalar::param("p1"));
  CHECK(fam.g.g(2, 2, 3) == Scalar::param("p2"));
  CHECK(fam.g.g(1, 1, 2) == Scalar::param("p1") / Scalar::param("p2"));
}

TEST_CASE("inconsistent and non-monomial systems") {
  CocycleSystem sys = generate_constraints(2);
  sys.impose({1, 1, 1}, Scalar(2));
  CHECK(error_of([&] { solve_diagonal_twist(sys); }).code() == ErrorCode::InconsistentSystem);

  CocycleSystem poly = generate_constraints(2);
  poly.equations.push_back({{{1, 1, 2}}, {}, S("1+q")});
  CHECK(error_of([&] { solve_diagonal_twist(poly); }).code() == ErrorCode::InconsistentSystem);

  CocycleSystem root = generate_constraints(2);
  root.equations.push_back({{{1, 1, 2}, {1, 1, 2}}, {}, S("q")});
  CHECK(error_of([&] { solve_diagonal_twist(root); }).code() == ErrorCode::InvalidArgument);
}

TEST_CASE("constraint check names the failing equation") {
  const CocycleSystem sys = generate_constraints(2);
  TwistTensor g = fixtures::two_parameter_twist(S("p"), S("p^3"));
  const CheckResult r = check_constraints(sys, g);
  CHECK(r.status == Status::Fail);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].location.find("g(") != std::string::npos);
}

TEST_CASE("a common rescaling of phi leaves the twist and its ideal unchanged") {
  intern_param("x");
  const TwistFamily fam = solve_diagonal_twist(generate_constraints(2));
  const Scalar x = Scalar::param("x") + Scalar(3);
  TwistTensor scaled = TwistTensor::diagonal(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) scaled.set_g(i, j, k, (fam.phi[j - 1] * x) / (fam.phi[k - 1] * x));
  CHECK(scaled == fam.g);
  CHECK(ideal_generators(fixtures::quantum_plane_b(), build_M(scaled)) ==
        ideal_generators(fixtures::quantum_plane_b(), build_M(fam.g)));
}
