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
#include "twistfrt/hopf.hpp"

using namespace twistfrt;
using fixtures::P;
using fixtures::S;

namespace {

BialgebraPresentation mqp2(const Scalar& q = S("q"), const Scalar& p = S("p")) {
  BialgebraPresentation pres = presentation_from_relations(2, fixtures::printed_mqp2());
  pres.deformation = Deformation{q, p};
  return pres;
}

// Coefficients of the printed relations with the given values substituted.
BialgebraPresentation specialized(const std::map<std::string, mpq_class>& values) {
  std::vector<NCPoly> rels;
  for (const auto& r : fixtures::printed_mqp2())
    rels.push_back(r.map_coefficients([&](const Scalar& c) { return c.substitute(values); }));
  BialgebraPresentation pres = presentation_from_relations(2, rels);
  pres.deformation = Deformation{S("q").substitute(values), S("p").substitute(values)};
  return pres;
}

LocalizedPresentation gl_qp2() {
  const BialgebraPresentation pres = mqp2();
  return localize(pres, det_qp(pres));
}

NCPoly L(const std::string& text) { return P(text, Alphabet::standard(2, false, true)); }

}  // namespace

TEST_CASE("quantum determinant and its commutation table") {
  const BialgebraPresentation pres = mqp2();
  const DeterminantElement det = det_qp(pres);
  CHECK(det.value == P("ad - p^-1*q*bc"));
  const auto al = Alphabet::standard(2);
  CHECK(det.lambda[al->id("a")] == S("1"));
  CHECK(det.lambda[al->id("b")] == S("p^-2"));
  CHECK(det.lambda[al->id("c")] == S("p^2"));
  CHECK(det.lambda[al->id("d")] == S("1"));
  // Independent of det_qp: D x - λ x D reduced directly modulo the relations.
  for (const char* x : {"a", "b", "c", "d"}) {
    const NCPoly gen = P(x);
    const NCPoly r = det.value * gen - gen * det.value * det.lambda[al->id(x)];
    CHECK(is_zero_mod(r, pres.relations).zero);
  }
}

TEST_CASE("p = 1 makes D central and q = p = 1 is classical") {
  const DeterminantElement one = det_qp(specialized({{"p", 1}}));
  CHECK(one.value == P("ad - q*bc"));
  for (const auto& l : one.lambda) CHECK(l.is_one());
  const DeterminantElement classical = det_qp(specialized({{"p", 1}, {"q", 1}}));
  CHECK(classical.value == P("ad - bc"));
}

TEST_CASE("determinant of the wrong ideal does not commute") {
  BialgebraPresentation pres =
      assemble_bialgebra(fixtures::quantum_plane_b(), TwistTensor::flip(2));
  pres.deformation = Deformation{S("q"), S("p")};
  CHECK_THROWS_AS(det_qp(pres), Error);
  try {
    det_qp(pres);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CommutationFailure);
  }
}

TEST_CASE("localized system") {
  const LocalizedPresentation loc = gl_qp2();
  CHECK(loc.system.rules().size() == 16);
  CHECK(loc.system.confluence().resolved);
  CHECK(localized_normal_form(L("Dinv*D*Dinv"), loc) == L("Dinv"));
  CHECK(localized_normal_form(L("D*b*Dinv"), loc) == L("p^-2*b"));
  CHECK(localized_normal_form(L("Dinv*c*D"), loc) == L("p^-2*c"));
  CHECK(is_zero_localized(L("D - ad + p^-1*q*bc"), loc).zero);
  CHECK(is_zero_localized(L("Dinv*ad - p^-1*q*Dinv*bc - 1"), loc).zero);
  CHECK_FALSE(is_zero_localized(L("Dinv*ad - 1"), loc).zero);
  CHECK(check_determinant_coproduct(loc).status == Status::Pass);
}

TEST_CASE("antipode axioms hold for GL_qp(2)") {
  const LocalizedPresentation loc = gl_qp2();
  const AntipodeMap s = antipode_map(loc);
  const CheckResult r = check_antipode(s, loc, fixtures::pq_twist());
  CHECK(r.status == Status::Pass);
  for (const char* leg : {"generator-left", "generator-right", "matrix-left", "matrix-right"})
    CHECK(r.details[leg] == "pass");
  CHECK(check_localization(loc, s).status == Status::Pass);
}

TEST_CASE("antipode squared") {
  const LocalizedPresentation loc = gl_qp2();
  const CheckResult r = antipode_square(antipode_map(loc), loc);
  CHECK(r.details["a"] == "a");
  CHECK(r.details["b"] == L("q^-2*b").str());
  CHECK(r.details["c"] == L("q^2*c").str());
  CHECK(r.details["d"] == "d");
  CHECK(r.details["D"] == "D");
}

TEST_CASE("antipode with the b and c coefficients swapped fails") {
  const LocalizedPresentation loc = gl_qp2();
  AntipodeMap s = antipode_map(loc);
  const auto al = loc.alphabet;
  s.table[al->id("b")] = L("-p*q*Dinv*b");
  s.table[al->id("c")] = L("-p^-1*q^-1*Dinv*c");
  const CheckResult r = check_antipode(s, loc, fixtures::pq_twist());
  CHECK(r.status == Status::Fail);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("classical GL(2) antipode") {
  const BialgebraPresentation pres = specialized({{"p", 1}, {"q", 1}});
  const LocalizedPresentation loc = localize(pres, det_qp(pres));
  CHECK(check_antipode(antipode_map(loc), loc, TwistTensor::flip(2)).status == Status::Pass);
}

TEST_CASE("antipode is an anti-morphism on random words") {
  const LocalizedPresentation loc = gl_qp2();
  const AntipodeMap s = antipode_map(loc);
  const auto al = loc.alphabet;
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(al->size()) - 1);
  std::uniform_int_distribution<int> len(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Word u, v;
    for (int k = len(rng); k > 0; --k) u.push_back(static_cast<LetterId>(letter(rng)));
    for (int k = len(rng); k > 0; --k) v.push_back(static_cast<LetterId>(letter(rng)));
    const NCPoly x(al, u), y(al, v);
    CHECK(apply_antipode(x * y, s) == apply_antipode(y, s) * apply_antipode(x, s));
  }
}
