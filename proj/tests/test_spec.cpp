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
#include "twistfrt/pipeline.hpp"
#include "twistfrt/spec.hpp"

using namespace twistfrt;
using fixtures::P;
using fixtures::S;

namespace {

const char* kSmall =
    "# two-dimensional plane with a table twist\n"
    "[params]\n"
    "q, p\n"
    "[dim]\n"
    "2\n"
    "[B]\n"
    "[1, 0, 0, 0]\n"
    "[0, 0, q, 0]\n"
    "[0, q, 1 - q^2, 0]\n"
    "[0, 0, 0, 1]\n"
    "[twist]\n"
    "g(i,j,j) = 1\n"
    "g(i,1,2) = p\n"
    "g(i,2,1) = p^-1\n";

ErrorCode code_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::InvalidArgument;
}

const CheckResult* find_check(const Report& r, std::string_view name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("presets parse and carry the expected data") {
  CHECK(preset_names().size() == 5);
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const AlgebraSpec spec = preset(name);
    CHECK(spec.dim == 2);
    CHECK(spec.params == std::vector<std::string>{"q", "p"});
  }
  const AlgebraSpec qp = preset("quantum-plane");
  CHECK(spec_b(qp) == fixtures::quantum_plane_b());
  CHECK(spec_twist(qp) == fixtures::pq_twist());
  CHECK(spec_b(preset("b-prime")) == fixtures::b_prime());
  CHECK(spec_b(preset("grassmann-plane")) == spectral_complement(fixtures::quantum_plane_b()).b);
  CHECK(same_span(preset("m-qp-2").relations, fixtures::printed_mqp2()));
  CHECK(preset("gl-qp-2").localize);
  CHECK_THROWS_AS(preset("nope"), Error);
}

TEST_CASE("spec text parses to the quantum-plane preset data") {
  const AlgebraSpec spec = parse_spec(kSmall);
  CHECK(spec.twist == TwistKind::Table);
  CHECK(spec.twist_entries.size() == 3);
  CHECK((*spec.b)[1][2] == S("q"));
  CHECK(spec_twist(spec) == fixtures::pq_twist());
}

TEST_CASE("render and parse round-trip") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const AlgebraSpec spec = preset(name);
    const AlgebraSpec again = parse_spec(render_spec(spec), spec.name);
    CHECK(again == spec);
    CHECK(render_spec(again) == render_spec(spec));
  }
  const AlgebraSpec special = specialize(preset("m-qp-2"), {{"p", 1}});
  CHECK(special.bindings.at("p") == 1);
  CHECK(parse_spec(render_spec(special), special.name) == special);
}

TEST_CASE("specialization substitutes every scalar") {
  const AlgebraSpec spec = specialize(preset("quantum-plane"), {{"p", 1}});
  CHECK(spec_twist(spec) == TwistTensor::diagonal(2));
  const AlgebraSpec q2 = specialize(preset("quantum-plane"), {{"q", 2}});
  CHECK((*q2.b)[2][2] == Scalar(-3));
  CHECK_THROWS_AS(specialize(preset("quantum-plane"), {{"r", 1}}), Error);
}

TEST_CASE("wildcard twist indices") {
  const AlgebraSpec spec = parse_spec(
      "[params]\np\n[dim]\n3\n[twist]\ng(i,j,k) = p\ng(i,j,j) = 1\ng(2,x,x) = 1\ng(1,2,3) = p^2\n");
  const TwistTensor g = spec_twist(spec);
  CHECK(g.g(1, 1, 1).is_one());
  CHECK(g.g(3, 1, 2) == S("p"));
  CHECK(g.g(1, 2, 3) == S("p^2"));
  CHECK(g.g(2, 2, 3) == S("p"));
}

TEST_CASE("solve twist in a spec") {
  const AlgebraSpec spec = parse_spec("[params]\np\n[dim]\n2\n[twist]\nsolve\n");
  CHECK(spec_twist(spec) == fixtures::pq_twist());
}

TEST_CASE("parse errors carry positions and codes") {
  try {
    parse_spec("[params]\nq\n[dim]\n2\n[twist]\ng(1,1,2) = q^\n");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 13);
  }
  CHECK(code_of("[params]\nq\n[twist]\ng(1,1,2) = r\n") == ErrorCode::SemanticError);
  CHECK(code_of("[dim]\n2\n[B]\n[1, 0]\n[0, 1]\n") == ErrorCode::SemanticError);
  CHECK(code_of("[stuff]\n") == ErrorCode::SyntaxError);
  CHECK(code_of("[dim]\n2\n[dim]\n2\n") == ErrorCode::SyntaxError);
  CHECK(code_of("[dim]\n0\n") == ErrorCode::SyntaxError);
  CHECK(code_of("[params]\na\n") == ErrorCode::SemanticError);
  CHECK(code_of("[options]\nlocalize = maybe\n") == ErrorCode::SyntaxError);
  CHECK(code_of("[twist]\nflip\ng(1,1,1) = 1\n") == ErrorCode::SyntaxError);
}

TEST_CASE("pipeline exit codes") {
  CHECK(run_pipeline(preset("quantum-plane"), "check-yb").exit_code() == 0);
  const Report bp = run_pipeline(preset("b-prime"), "check-yb");
  CHECK(bp.exit_code() == 1);
  const CheckResult* structure = find_check(bp, "b-structure");
  REQUIRE(structure != nullptr);
  CHECK(structure->status == Status::Warning);
  CHECK(run_pipeline(preset("m-qp-2"), "check-bialgebra").exit_code() == 0);
  CHECK(run_pipeline(preset("gl-qp-2"), "check-hopf").exit_code() == 0);
  CHECK(run_pipeline(preset("quantum-plane"), "solve-twist").exit_code() == 0);
  CHECK_THROWS_AS(run_pipeline(preset("quantum-plane"), "no-such-command"), Error);
  PipelineOptions bad;
  bad.argument = "q^";
  CHECK_THROWS_AS(run_pipeline(preset("m-qp-2"), "normal-form", bad), ParseError);
}

TEST_CASE("checks option filters the bialgebra checks") {
  AlgebraSpec spec = preset("m-qp-2");
  spec.checks = {"counit", "coideal"};
  const Report r = run_pipeline(spec, "check-bialgebra");
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].name == "counit");
  CHECK(r.checks[1].name == "coideal");
}

TEST_CASE("normal-form in the localized algebra") {
  PipelineOptions opt;
  opt.argument = "D*b*Dinv";
  const Report r = run_pipeline(preset("gl-qp-2"), "normal-form", opt);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].details["normal_form"] == P("p^-2*b", Alphabet::standard(2, false, true)).str());
}

TEST_CASE("reports are deterministic without timing") {
  for (const auto& name : preset_names()) {
    for (const auto& cmd : {"check-yb", "derive-bialgebra", "confluence"}) {
      CAPTURE(name);
      CAPTURE(cmd);
      const std::string a = run_pipeline(preset(name), cmd).json(false);
      const std::string b = run_pipeline(preset(name), cmd).json(false);
      CHECK(a == b);
      CHECK(a.find("timing") == std::string::npos);
    }
  }
}
