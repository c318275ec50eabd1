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
using fixtures::P;
using fixtures::S;

namespace {

RewriteSystem mqp2() {
  return RewriteSystem::from_relations(Alphabet::standard(2), fixtures::printed_mqp2());
}

// Enumerates every word of length d and counts those free of rule lhs.
std::uint64_t brute_force_normal_words(const RewriteSystem& sys, int d) {
  const std::size_t k = sys.alphabet()->size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= k;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Word w;
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      w.push_back(static_cast<LetterId>(c % k));
      c /= k;
    }
    bool normal = true;
    for (const auto& rule : sys.rules()) {
      if (w.find(rule.lhs) != std::string::npos) normal = false;
    }
    count += normal;
  }
  return count;
}

bool only_normal_words(const NCPoly& x, const RewriteSystem& sys) {
  for (const auto& [w, c] : x.terms()) {
    std::size_t pos = 0;
    std::size_t rule = 0;
    if (sys.find_redex(w, &pos, &rule)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("orientation of the M_qp(2) relations") {
  const RewriteSystem sys = mqp2();
  REQUIRE(sys.rules().size() == 6);
  auto rhs = [&](const char* lhs) {
    const Word w = P(lhs).leading_word();
    for (const auto& r : sys.rules()) {
      if (r.lhs == w) return r.rhs;
    }
    FAIL("missing rule");
    return NCPoly();
  };
  CHECK(rhs("ba") == P("p*q^-1*ab"));
  CHECK(rhs("ca") == P("(p*q)^-1*ac"));
  CHECK(rhs("cb") == P("p^-2*bc"));
  CHECK(rhs("db") == P("(p*q)^-1*bd"));
  CHECK(rhs("dc") == P("p*q^-1*cd"));
  CHECK(rhs("da") == P("ad + p^-1*(q^-1 - q)*bc"));
}

TEST_CASE("normal word counts match brute-force enumeration and PBW") {
  const RewriteSystem sys = mqp2();
  const std::uint64_t pbw[] = {1, 4, 10, 20, 35};
  for (int d = 0; d <= 4; ++d) {
    CHECK(count_normal_words(sys, d) == brute_force_normal_words(sys, d));
    CHECK(count_normal_words(sys, d) == pbw[d]);
  }
}

TEST_CASE("M_qp(2) is confluent") {
  const RewriteSystem sys = mqp2();
  const ConfluenceStatus& st = sys.confluence();
  CHECK(st.resolved);
  CHECK(st.pairs_checked == 4);
  CHECK(st.certified_degree == ConfluenceStatus::kAllDegrees);
  for (const auto& pair : critical_pairs(sys)) {
    CHECK(pair.overlap.size() == 3);
    CHECK(pair.residual.is_zero());
  }
}

TEST_CASE("normal forms are idempotent and compatible with products") {
  const RewriteSystem sys = mqp2();
  const auto al = sys.alphabet();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> letter(0, 3);
  auto word = [&](std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<LetterId>(letter(rng)));
    return NCPoly(al, w);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const NCPoly u = word(2) + word(1) * S("q");
    const NCPoly v = word(3) - word(2) * S("p");
    const NCPoly nu = normal_form(u, sys);
    CHECK(only_normal_words(nu, sys));
    CHECK(normal_form(nu, sys) == nu);
    CHECK(normal_form(nu * normal_form(v, sys), sys) == normal_form(u * v, sys));
    CHECK(normal_form(u + v, sys) == nu + normal_form(v, sys));
  }
}

TEST_CASE("membership in the ideal") {
  const RewriteSystem sys = mqp2();
  CHECK(is_zero_mod(P("ad - da + p*(q^-1 - q)*cb"), sys).zero);
  CHECK(is_zero_mod(P("a*(ba - p*q^-1*ab)*d"), sys).zero);
  CHECK_FALSE(is_zero_mod(P("ab - ba"), sys).zero);
  const ZeroTest t = is_zero_mod(P("dcba"), sys);
  CHECK_FALSE(t.zero);
  CHECK(t.certified);
  CHECK(t.residual.size() >= 1);
}

TEST_CASE("a non-confluent system reports the failing overlap") {
  const auto al = Alphabet::standard(2);
  // ba -> a and ab -> b: the overlap aba reduces to a and to aa.
  const RewriteSystem sys = RewriteSystem::from_relations(al, {P("ba - a"), P("ab - b")});
  const ConfluenceStatus& st = sys.confluence();
  CHECK_FALSE(st.resolved);
  CHECK(st.certified_degree == 2);
  bool found = false;
  for (const auto& pair : critical_pairs(sys)) {
    if (!pair.residual.is_zero()) found = true;
  }
  CHECK(found);
  const ZeroTest t = is_zero_mod(P("abab"), sys);
  CHECK_FALSE(t.certified);
}

TEST_CASE("invalid rules") {
  const auto al = Alphabet::standard(2);
  CHECK_THROWS_AS(RewriteSystem::from_relations(al, {P("ab - 1"), P("ab")}), Error);
  CHECK_THROWS_AS(RewriteSystem::from_relations(al, {P("a - b")}), Error);
  CHECK_THROWS_AS(RewriteSystem(al, {{P("ab").leading_word(), P("ba")}}), Error);
}

TEST_CASE("overlaps beyond the degree bound are skipped, not trusted") {
  const auto al = Alphabet::standard(2);
  const RewriteSystem sys =
      RewriteSystem::from_relations(al, {P("bab - a"), P("bb - a")}, 3);
  const ConfluenceStatus& st = sys.confluence();
  CHECK(st.pairs_skipped > 0);
  CHECK(st.certified_degree <= 3);
}
