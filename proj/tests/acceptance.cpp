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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "twistfrt/hopf.hpp"
#include "twistfrt/pipeline.hpp"
#include "twistfrt/solver.hpp"
#include "twistfrt/spec.hpp"

using namespace twistfrt;
using fixtures::P;
using fixtures::S;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

const CheckResult* find_check(const Report& r, std::string_view name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Status status_of(const Report& r, std::string_view name) {
  const CheckResult* c = find_check(r, name);
  return c ? c->status : Status::Fail;
}

RewriteSystem system_of(const std::vector<NCPoly>& rels) {
  return RewriteSystem::from_relations(Alphabet::standard(2), rels);
}

// Words of length d over the alphabet containing no rule lhs.
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
    for (const auto& r : sys.rules())
      if (w.find(r.lhs) != std::string::npos) normal = false;
    if (normal) ++count;
  }
  return count;
}

Outcome yang_baxter() {
  Outcome o;
  o.require(status_of(run_pipeline(preset("quantum-plane"), "check-yb"), "yang-baxter") ==
                Status::Pass,
            "quantum-plane B fails");
  o.require(status_of(run_pipeline(preset("b-prime"), "check-yb"), "yang-baxter") == Status::Fail,
            "B' passes");
  o.require(yang_baxter_check(fixtures::quantum_plane_b()), "direct check on B fails");
  o.require(!yang_baxter_check(fixtures::b_prime()), "direct check on B' passes");
  return o;
}

Outcome b_prime_structure() {
  Outcome o;
  const EndoTensor bp = fixtures::b_prime();
  o.require(bp.is_symmetric(), "B' not symmetric");
  o.require(tensor_compose(bp, bp) == EndoTensor::identity(2), "B'^2 != I");
  const Report r = run_pipeline(preset("b-prime"), "check-yb");
  const CheckResult* c = find_check(r, "b-structure");
  o.require(c && c->status == Status::Warning, "wording not flagged");
  bool mentions = false;
  if (c)
    for (const auto& n : c->notes) mentions |= n.find("idempotent") != std::string::npos;
  o.require(mentions, "note does not mention idempotent");
  return o;
}

Outcome frt_derivation() {
  Outcome o;
  const Report r = run_pipeline(preset("quantum-plane"), "derive-bialgebra");
  o.require(status_of(r, "ideal") != Status::Fail, "ideal check failed");
  const std::vector<NCPoly> gens =
      ideal_generators(fixtures::quantum_plane_b(), build_M(fixtures::pq_twist()));
  o.require(gens.size() == 6, "ideal rank is not 6");
  o.require(fixtures::all_reduce(fixtures::printed_mqp2(), system_of(gens)),
            "printed relation does not reduce modulo the derived system");
  o.require(fixtures::all_reduce(gens, system_of(fixtures::printed_mqp2())),
            "derived relation does not reduce modulo the printed system");
  return o;
}

Outcome cross() {
  Outcome o;
  const auto al = Alphabet::standard(2, true);
  std::vector<NCPoly> expected;
  for (const std::string e : {"e1", "e2"}) {
    expected.push_back(P(e + "*a - a*" + e, al));
    expected.push_back(P(e + "*b - p*b*" + e, al));
    expected.push_back(P(e + "*c - p^-1*c*" + e, al));
    expected.push_back(P(e + "*d - d*" + e, al));
  }
  o.require(cross_relations(fixtures::pq_twist()) == expected, "cross relations differ");
  return o;
}

Outcome grassmann() {
  Outcome o;
  const MMatrix m = build_M(fixtures::pq_twist());
  const QuadraticSpace g = spectral_complement(fixtures::quantum_plane_b());
  o.require(g.relations.size() == 3, "complement does not have 3 relations");
  o.require(ideal_generators(g.b, m) == ideal_generators(fixtures::quantum_plane_b(), m),
            "ideals differ");
  return o;
}

Outcome bialgebra() {
  Outcome o;
  const EndoTensor b = fixtures::quantum_plane_b();
  const TwistTensor g = fixtures::pq_twist();
  const MMatrix m = build_M(g);
  const BialgebraPresentation pres = assemble_bialgebra(b, g);
  o.require(check_multiplicative(m, pres.relations).status == Status::Pass, "multiplicative");
  o.require(check_counit(m).status == Status::Pass, "counit");
  o.require(check_coideal(b, m, pres.relations).status == Status::Pass, "coideal");
  o.require(check_comodule_diagrams(b, g, m, pres.relations, relations_from_B(b).system()).status ==
                Status::Pass,
            "comodule diagrams");
  const TwistTensor bad = fixtures::two_parameter_twist(S("p"), S("p^3"));
  const CheckResult mult =
      check_multiplicative(build_M(bad), assemble_bialgebra(b, bad).relations);
  o.require(mult.status == Status::Fail && !mult.witnesses.empty(),
            "non-cocycle twist not rejected with a witness");
  TwistTensor off = g;
  off.set_g(1, 1, 1, S("p"));
  const CheckResult eps = check_counit(build_M(off));
  o.require(eps.status == Status::Fail && !eps.witnesses.empty(),
            "counit perturbation not rejected with a witness");
  return o;
}

Outcome hopf() {
  Outcome o;
  BialgebraPresentation pres = presentation_from_relations(2, fixtures::printed_mqp2());
  pres.deformation = Deformation{S("q"), S("p")};
  const DeterminantElement det = det_qp(pres);
  const auto al = Alphabet::standard(2);
  for (const char* x : {"a", "b", "c", "d"}) {
    const NCPoly gen = P(x);
    o.require(is_zero_mod(det.value * gen - gen * det.value * det.lambda[al->id(x)],
                          pres.relations)
                  .zero,
              std::string("D does not commute with ") + x);
  }
  o.require(det.lambda[al->id("b")] == S("p^-2") && det.lambda[al->id("c")] == S("p^2"),
            "commutation factors");
  const LocalizedPresentation loc = localize(pres, det);
  const CheckResult r = check_antipode(antipode_map(loc), loc, fixtures::pq_twist());
  for (const char* leg : {"generator-left", "generator-right", "matrix-left", "matrix-right"})
    o.require(r.details[leg] == "pass", std::string("antipode leg ") + leg);
  o.require(r.status == Status::Pass, "antipode");
  return o;
}

Outcome solver() {
  Outcome o;
  const TwistFamily two = solve_diagonal_twist(generate_constraints(2));
  o.require(two.parameters.size() == 1 && two.g == fixtures::pq_twist(), "n=2 family");
  for (const auto& r : verify_twist(two.g, fixtures::quantum_plane_b()))
    o.require(r.status == Status::Pass, "verify-" + r.name);
  const CocycleSystem three = generate_constraints(3);
  const TwistFamily fam = solve_diagonal_twist(three);
  o.require(fam.parameters.size() == 2, "n=3 parameter count");
  o.require(check_constraints(three, fam.g).status == Status::Pass, "n=3 constraints");
  return o;
}

Outcome pbw() {
  Outcome o;
  const RewriteSystem sys = system_of(fixtures::printed_mqp2());
  o.require(sys.confluence().resolved && sys.confluence().certified_degree >= 3,
            "critical pairs up to degree 3");
  const std::uint64_t expected[] = {1, 4, 10, 20};
  for (int d = 0; d <= 3; ++d) {
    o.require(count_normal_words(sys, d) == expected[d], "count_normal_words");
    o.require(brute_force_normal_words(sys, d) == expected[d], "enumerated normal words");
  }
  const RewriteSystem combined =
      combined_system(sys, relations_from_B(fixtures::quantum_plane_b()).system(),
                      fixtures::pq_twist(), 3);
  o.require(combined.confluence().resolved && combined.confluence().certified_degree >= 3,
            "combined system");
  return o;
}

Outcome classical_limit() {
  Outcome o;
  const std::map<std::string, mpq_class> one{{"p", 1}};
  const AlgebraSpec qp = specialize(preset("quantum-plane"), one);
  const EndoTensor b = spec_b(qp);
  const TwistTensor g = spec_twist(qp);
  const std::vector<NCPoly> gens = ideal_generators(b, build_M(g));
  o.require(gens == ideal_generators(b, build_M(TwistTensor::flip(2))), "ideal is not M_q(2)");
  const auto al = Alphabet::standard(2, true);
  for (const auto& r : cross_relations(g)) {
    const Word w = r.leading_word();
    o.require(r == NCPoly(al, w) - NCPoly(al, Word({w[1], w[0]})), "cross relation " + r.str());
  }
  BialgebraPresentation pres = presentation_from_relations(2, gens);
  pres.deformation = spec_deformation(qp);
  const DeterminantElement det = det_qp(pres);
  o.require(det.value == P("ad - q*bc"), "determinant");
  for (const auto& l : det.lambda) o.require(l.is_one(), "D not central");
  const LocalizedPresentation loc = localize(pres, det);
  o.require(check_antipode(antipode_map(loc), loc, g).status == Status::Pass, "antipode");
  o.require(run_pipeline(specialize(preset("gl-qp-2"), one), "check-hopf").exit_code() == 0,
            "check-hopf");
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : preset_names())
    for (const auto& cmd : pipeline_commands()) {
      PipelineOptions opt;
      if (cmd == "normal-form") opt.argument = "da*b";
      const std::string a = run_pipeline(preset(name), cmd, opt).json(false);
      const std::string b = run_pipeline(preset(name), cmd, opt).json(false);
      o.require(a == b, name + " " + cmd);
    }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Yang-Baxter holds for B and fails for B'", yang_baxter},
      {"B' symmetric with B'^2 = I, wording flagged", b_prime_structure},
      {"derived ideal mutually reduces with the M_qp(2) relations", frt_derivation},
      {"cross relations", cross},
      {"Grassmann complement gives the same ideal", grassmann},
      {"bialgebra axioms and perturbed-twist witnesses", bialgebra},
      {"determinant commutations and antipode", hopf},
      {"cocycle solver for n = 2 and n = 3", solver},
      {"confluence and PBW counts", pbw},
      {"classical limit p = 1", classical_limit},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%-4s %2d  %s%s%s\n", o.ok ? "PASS" : "FAIL", index, title,
                o.ok ? "" : ": ", o.note.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
