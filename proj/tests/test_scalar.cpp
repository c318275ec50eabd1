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


#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace twistfrt;
using fixtures::S;

namespace {

// A random rational function built twice: as a Scalar and as a value at a
// fixed rational point, the latter by plain mpq arithmetic.
struct Sample {
  Scalar scalar;
  mpq_class value;
  bool defined = true;
};

Sample random_expr(std::mt19937& rng, int depth, const mpq_class& q, const mpq_class& p) {
  std::uniform_int_distribution<int> pick(0, 6);
  const int k = depth <= 0 ? pick(rng) % 3 : pick(rng);
  if (k == 0) {
    const long c = std::uniform_int_distribution<long>(-3, 3)(rng);
    return {Scalar(c), mpq_class(c)};
  }
  if (k == 1) return {Scalar::param("q"), q};
  if (k == 2) return {Scalar::param("p"), p};
  Sample a = random_expr(rng, depth - 1, q, p);
  Sample b = random_expr(rng, depth - 1, q, p);
  Sample r;
  r.defined = a.defined && b.defined;
  switch (k) {
    case 3:
      r.scalar = a.scalar + b.scalar;
      r.value = a.value + b.value;
      break;
    case 4:
      r.scalar = a.scalar - b.scalar;
      r.value = a.value - b.value;
      break;
    case 5:
      r.scalar = a.scalar * b.scalar;
      r.value = a.value * b.value;
      break;
    default:
      if (b.scalar.is_zero()) return a;
      r.scalar = a.scalar / b.scalar;
      if (b.value == 0) {
        r.defined = false;
      } else {
        r.value = a.value / b.value;
      }
      break;
  }
  return r;
}

Scalar random_scalar(std::mt19937& rng) {
  return random_expr(rng, 3, mpq_class(2), mpq_class(3)).scalar;
}

}  // namespace

TEST_CASE("canonical forms of rational functions") {
  fixtures::params();
  CHECK(S("(q^2-1)/(q-1)") == S("q+1"));
  CHECK(S("q - q").is_zero());
  CHECK(S("q*q^-1").is_one());
  CHECK(S("(p^2-q^2)/(p*q-q^2)") == S("(p+q)/q"));
  CHECK(S("1/(q+q^-1)") == S("q/(q^2+1)"));
  CHECK(S("q^-1 + q").str() == S("q + q^-1").str());
  CHECK(S("6/4") == S("3/2"));
  CHECK(S("(2*q+2)/(4*q+4)") == S("1/2"));
  CHECK(S("q^-2").is_monomial());
  CHECK_FALSE(S("q + 1").is_monomial());
  CHECK(S("7/3").is_rational());
  CHECK(S("7/3").rational_value() == mpq_class(7, 3));
}

TEST_CASE("field axioms hold on random rational functions") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("text form reparses to the same scalar") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar a = random_scalar(rng);
    CHECK(parse_scalar(a.str(), fixtures::params()) == a);
  }
}

TEST_CASE("substitution agrees with direct rational evaluation") {
  std::mt19937 rng(11);
  const std::vector<std::pair<mpq_class, mpq_class>> points = {
      {mpq_class(2), mpq_class(3)}, {mpq_class(-1, 2), mpq_class(5, 7)}, {mpq_class(3, 4), mpq_class(-2)}};
  int compared = 0;
  for (const auto& [q, p] : points) {
    for (int trial = 0; trial < 60; ++trial) {
      const Sample s = random_expr(rng, 3, q, p);
      if (!s.defined) continue;
      const Scalar v = s.scalar.substitute(std::map<std::string, mpq_class>{{"q", q}, {"p", p}});
      REQUIRE(v.is_rational());
      CHECK(v.rational_value() == s.value);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("partial substitution and poles") {
  fixtures::params();
  CHECK(S("p*q + p^-1").substitute(std::map<std::string, mpq_class>{{"p", 1}}) == S("q + 1"));
  CHECK_THROWS_AS(S("1/(q-1)").substitute(std::map<std::string, mpq_class>{{"q", 1}}), Error);
  try {
    (void)S("q^-1").substitute(std::map<std::string, mpq_class>{{"q", 0}});
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtSubstitution);
  }
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  CHECK_THROWS_AS(S("1/(q-q)"), Error);
}

TEST_CASE("scalar grammar errors carry positions") {
  try {
    (void)S("q^");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 2);
  }
  try {
    (void)S("q + r");
    FAIL("expected a semantic error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SemanticError);
  }
  CHECK_THROWS_AS(S("(q + 1"), ParseError);
  CHECK(S("q^(-2)") == S("q^-2"));
  CHECK(S("-q^2") == Scalar(-1) * S("q^2"));
}

TEST_CASE("duplicate parameter declarations are rejected") {
  try {
    ParamSet bad({"q", "q"});
    FAIL("expected a semantic error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SemanticError);
  }
}
