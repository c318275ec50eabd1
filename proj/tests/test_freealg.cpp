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

Word random_word(std::mt19937& rng, const Alphabet& alphabet, std::size_t max_len) {
  Word w;
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet.size()) - 1);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<LetterId>(letter(rng)));
  return w;
}

}  // namespace

TEST_CASE("standard alphabets") {
  const auto a2 = Alphabet::standard(2);
  CHECK(a2->size() == 4);
  CHECK(a2->letter(0).name == "a");
  CHECK(a2->letter(1).name == "b");
  CHECK(*a2->matrix_entry(1, 2) == a2->id("b"));
  CHECK(*a2->matrix_entry(2, 1) == a2->id("c"));
  CHECK(Alphabet::standard(2) == a2);

  const auto full = Alphabet::standard(2, true, true);
  CHECK(full->size() == 8);
  CHECK(full->letter(4).name == "D");
  CHECK(full->letter(5).name == "Dinv");
  CHECK(full->letter(6).name == "e1");

  const auto a3 = Alphabet::standard(3);
  CHECK(a3->size() == 9);
  CHECK(a3->letter(1).name == "t12");
  CHECK(Alphabet::coordinates(3)->dim() == 3);
}

TEST_CASE("graded word order") {
  const auto al = Alphabet::standard(2);
  WordLess less;
  auto w = [&](const char* s) { return P(s, al).leading_word(); };
  CHECK(less(Word(), w("a")));
  CHECK(less(w("d"), w("aa")));
  CHECK(less(w("ab"), w("ba")));
  CHECK(less(w("ad"), w("ba")));
  CHECK_FALSE(less(w("ba"), w("ba")));
}

TEST_CASE("noncommutative arithmetic") {
  CHECK(P("a*b") != P("b*a"));
  CHECK(P("(a + b)*(a - b)") == P("aa - ab + ba - bb"));
  CHECK(P("q*ab - ab*q").is_zero());
  CHECK(P("2*ab/q") == P("ab") * S("2*q^-1"));
  CHECK(P("ad - p^-1*q*bc").str() == "-q*p^-1*bc + ad");
  CHECK_THROWS_AS(nc_mul(P("a"), P("e1", Alphabet::coordinates(2))), Error);
  CHECK_THROWS_AS(P("a/b"), Error);
}

TEST_CASE("polynomial text reparses to the same element") {
  std::mt19937 rng(3);
  const auto al = Alphabet::standard(2, true, true);
  for (int trial = 0; trial < 50; ++trial) {
    NCPoly x(al);
    for (int t = 0; t < 4; ++t) {
      x.add_term(random_word(rng, *al, 4),
                 Scalar(std::uniform_int_distribution<long>(-3, 3)(rng)) * S("q^2 - p"));
    }
    CHECK(fixtures::P(x.str(), al) == x);
  }
}

TEST_CASE("coproduct of ab expanded by hand") {
  const auto al = Alphabet::standard(2);
  const TensorNCPoly got = coproduct(P("ab"), standard_coproduct(al));
  // Δa = a⊗a + b⊗c, Δb = a⊗b + b⊗d.
  TensorNCPoly expected({al, al});
  auto w = [&](const char* s) { return P(s, al).leading_word(); };
  expected.add_term({w("aa"), w("ab")}, Scalar(1));
  expected.add_term({w("ab"), w("ad")}, Scalar(1));
  expected.add_term({w("ba"), w("cb")}, Scalar(1));
  expected.add_term({w("bb"), w("cd")}, Scalar(1));
  CHECK(got == expected);
}

TEST_CASE("coproduct is coassociative and counital on random words") {
  std::mt19937 rng(5);
  const auto al = Alphabet::standard(2, false, true);
  const CoproductTable delta = standard_coproduct(al);
  const CounitTable eps = standard_counit(al);
  for (int trial = 0; trial < 30; ++trial) {
    const NCPoly x(al, random_word(rng, *al, 4), S("q + 2"));
    const TensorNCPoly d = coproduct(x, delta);
    CHECK(coproduct_at<2>(d, 0, delta) == coproduct_at<2>(d, 1, delta));
    NCPoly left(al);
    for (const auto& [key, c] : d.terms()) left += NCPoly(al, key[1], c * counit(NCPoly(al, key[0]), eps));
    CHECK(left == x);
  }
}

TEST_CASE("counit is undefined on coordinates") {
  const auto al = Alphabet::standard(2, true);
  try {
    (void)counit(P("a*e1", al), standard_counit(al));
    FAIL("expected CounitUndefinedForLetter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CounitUndefinedForLetter);
  }
  try {
    (void)coproduct(P("e1", al), standard_coproduct(al));
    FAIL("expected MissingGeneratorImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingGeneratorImage);
  }
}
