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


#include "twistfrt/pipeline.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "twistfrt/expr_parser.hpp"
#include "twistfrt/hopf.hpp"
#include "twistfrt/solver.hpp"

namespace twistfrt {

namespace {

using json = nlohmann::ordered_json;

json texts(const std::vector<NCPoly>& polys) {
  json arr = json::array();
  for (const auto& p : polys) arr.push_back(p.str());
  return arr;
}

bool propagates(ErrorCode code) {
  return code == ErrorCode::SyntaxError || code == ErrorCode::SemanticError ||
         code == ErrorCode::InvalidArgument;
}

class Context {
 public:
  Context(const AlgebraSpec& spec, int max_degree) : spec_(spec), max_degree_(max_degree) {}

  const AlgebraSpec& spec() const { return spec_; }
  int max_degree() const { return max_degree_; }
  bool has_b() const { return spec_.b.has_value(); }

  const EndoTensor& b() {
    if (!b_) b_ = spec_b(spec_);
    return *b_;
  }
  const TwistTensor& twist() {
    if (!twist_) twist_ = spec_twist(spec_);
    return *twist_;
  }
  const MMatrix& m() {
    if (!m_) m_ = build_M(twist());
    return *m_;
  }
  const std::vector<NCPoly>& derived() {
    if (!derived_) derived_ = ideal_generators(b(), m());
    return *derived_;
  }
  /// Given relations when present, otherwise the derived ideal.
  const BialgebraPresentation& presentation() {
    if (!presentation_) {
      presentation_ = presentation_from_relations(
          spec_.dim, spec_.relations.empty() ? derived() : spec_.relations, max_degree_);
      presentation_->deformation = spec_deformation(spec_);
    }
    return *presentation_;
  }
  const RewriteSystem& h() { return presentation().relations; }
  const QuadraticSpace& plane() {
    if (!plane_) plane_ = relations_from_B(b());
    return *plane_;
  }
  const RewriteSystem& plane_system() {
    if (!plane_system_) plane_system_ = plane().system(max_degree_);
    return *plane_system_;
  }

 private:
  const AlgebraSpec& spec_;
  int max_degree_;
  std::optional<EndoTensor> b_;
  std::optional<TwistTensor> twist_;
  std::optional<MMatrix> m_;
  std::optional<std::vector<NCPoly>> derived_;
  std::optional<BialgebraPresentation> presentation_;
  std::optional<QuadraticSpace> plane_;
  std::optional<RewriteSystem> plane_system_;
};

class Runner {
 public:
  Runner(Report& report, const AlgebraSpec& spec) : report_(report), spec_(spec) {}

  bool wanted(const std::string& name) const {
    return spec_.checks.empty() ||
           std::find(spec_.checks.begin(), spec_.checks.end(), name) != spec_.checks.end();
  }

  /// Runs `body`, converting algebraic errors into a failed check.
  void run(const std::string& name, const std::function<CheckResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result(name);
    try {
      result = body();
      result.name = name;
    } catch (const Error& e) {
      if (propagates(e.code())) throw;
      result.fail(std::string(to_string(e.code())), e.what());
    }
    result.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  void run_filtered(const std::string& name, const std::function<CheckResult()>& body) {
    if (wanted(name)) run(name, body);
  }

 private:
  Report& report_;
  const AlgebraSpec& spec_;
};

CheckResult confluence_result(const std::string& name, const RewriteSystem& sys) {
  CheckResult r(name);
  const ConfluenceStatus& st = sys.confluence();
  r.details["rules"] = sys.rules().size();
  r.details["pairs_checked"] = st.pairs_checked;
  r.details["pairs_skipped"] = st.pairs_skipped;
  r.details["resolved"] = st.resolved;
  if (st.certified_degree == ConfluenceStatus::kAllDegrees) {
    r.details["certified_degree"] = "all";
  } else {
    r.details["certified_degree"] = st.certified_degree;
  }
  if (!st.resolved) {
    for (const auto& pair : critical_pairs(sys)) {
      if (!pair.residual.is_zero()) r.fail(pair.overlap.str(*sys.alphabet()), pair.residual.str());
    }
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_yb(Context& ctx, Runner& run) {
  run.run("yang-baxter", [&] {
    CheckResult r("yang-baxter");
    if (!yang_baxter_check(ctx.b())) r.fail("B12 B23 B12 - B23 B12 B23", "nonzero");
    return r;
  });
  run.run("b-structure", [&] {
    CheckResult r("b-structure");
    const EndoTensor& b = ctx.b();
    const EndoTensor sq = tensor_compose(b, b);
    const EndoTensor id = EndoTensor::identity(b.dim());
    const bool involutive = sq == id;
    const bool idempotent = sq == b;
    r.details["symmetric"] = b.is_symmetric();
    r.details["involutive"] = involutive;
    r.details["idempotent"] = idempotent;
    try {
      const QuadraticSpectrum s = quadratic_spectrum(b);
      r.details["minimal_polynomial"] = "B^2 = (" + s.trace_coefficient.str() + ")*B + (" +
                                        s.constant.str() + ")*I";
      r.details["eigenvalues"] = json::array({s.unit_eigenvalue.str(), s.other_eigenvalue.str()});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDiagonalizableQuadratic) throw;
      r.details["minimal_polynomial"] = "none with eigenvalue 1";
    }
    if (involutive && !(b == id)) {
      r.warn("B squares to the identity: it is involutive, not idempotent (B^2 != B)");
    }
    return r;
  });
}

void derive_bialgebra(Context& ctx, Runner& run) {
  run.run("ideal", [&] {
    CheckResult r("ideal");
    r.details["relations"] = texts(ctx.derived());
    if (ctx.spec().complement) r.details["b"] = "spectral complement";
    return r;
  });
  run.run("plane-relations", [&] {
    CheckResult r("plane-relations");
    r.details["relations"] = texts(ctx.plane().relations);
    return r;
  });
  run.run("cross-relations", [&] {
    CheckResult r("cross-relations");
    r.details["relations"] = texts(cross_relations(ctx.twist()));
    return r;
  });
  if (!ctx.spec().relations.empty()) {
    run.run("presentation-agreement", [&] {
      CheckResult r("presentation-agreement");
      const AlphabetPtr alphabet = Alphabet::standard(ctx.spec().dim);
      const RewriteSystem derived =
          RewriteSystem::from_relations(alphabet, ctx.derived(), ctx.max_degree());
      for (const auto& rel : ctx.spec().relations) {
        r.expect_zero("given " + rel.str(), is_zero_mod(rel, derived));
      }
      for (const auto& rel : ctx.derived()) {
        r.expect_zero("derived " + rel.str(), is_zero_mod(rel, ctx.h()));
      }
      return r;
    });
  }
}

void check_bialgebra(Context& ctx, Runner& run) {
  run.run_filtered("multiplicative", [&] { return check_multiplicative(ctx.m(), ctx.h()); });
  run.run_filtered("counit", [&] { return check_counit(ctx.m()); });
  run.run_filtered("coideal", [&] { return check_coideal(ctx.b(), ctx.m(), ctx.h()); });
  run.run_filtered("comodule-diagrams", [&] {
    return check_comodule_diagrams(ctx.b(), ctx.twist(), ctx.m(), ctx.h(), ctx.plane_system());
  });
  if (tensor_compose(ctx.b(), ctx.b()) == EndoTensor::identity(ctx.spec().dim)) {
    run.run_filtered("master-relation", [&] {
      return master_relation_check(ctx.b(), ctx.m(), ctx.h());
    });
  }
  run.run_filtered("combined-confluence", [&] {
    return confluence_result("combined-confluence",
                             combined_system(ctx.h(), ctx.plane_system(), ctx.twist(),
                                             ctx.max_degree()));
  });
}

void solve_twist(Context& ctx, Runner& run) {
  const int n = ctx.spec().dim;
  std::optional<TwistFamily> family;
  const CocycleSystem system = generate_constraints(n);
  run.run("cocycle-solution", [&] {
    CheckResult r("cocycle-solution");
    family = solve_diagonal_twist(system);
    r.details["equations"] = system.equations.size();
    r.details["gauge"] = family->gauge;
    r.details["parameters"] = family->parameters;
    json phi = json::array();
    for (const auto& v : family->phi) phi.push_back(v.str());
    r.details["phi"] = phi;
    json table = json::object();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          table["g(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")"] =
              family->g.g(i, j, k).str();
        }
    r.details["g"] = table;
    r.details["matches_spec_twist"] = family->g == ctx.twist();
    return r;
  });
  if (!family) return;
  run.run("cocycle-constraints", [&] { return check_constraints(system, family->g); });
  if (!ctx.has_b()) return;
  const std::vector<CheckResult> checks = verify_twist(family->g, ctx.b(), ctx.max_degree());
  for (const auto& c : checks) {
    run.run("verify-" + c.name, [&] { return c; });
  }
}

void check_hopf(Context& ctx, Runner& run) {
  if (ctx.spec().dim != 2) {
    throw Error(ErrorCode::SemanticError, "check-hopf requires dim = 2");
  }
  std::optional<DeterminantElement> det;
  std::optional<LocalizedPresentation> loc;
  std::optional<AntipodeMap> s;
  run.run("determinant", [&] {
    CheckResult r("determinant");
    det = det_qp(ctx.presentation());
    r.details["value"] = det->value.str();
    json table = json::object();
    bool central = true;
    for (LetterId x = 0; x < 4; ++x) {
      table[ctx.presentation().alphabet->letter(x).name] = det->lambda[x].str();
      central = central && det->lambda[x].is_one();
    }
    r.details["commutation"] = table;
    r.details["central"] = central;
    return r;
  });
  if (!det) return;
  run.run("localization-confluence", [&] {
    loc = localize(ctx.presentation(), *det);
    s = antipode_map(*loc);
    return confluence_result("localization-confluence", loc->system);
  });
  if (!loc) return;
  run.run("determinant-coproduct", [&] { return check_determinant_coproduct(*loc); });
  run.run("localization", [&] { return check_localization(*loc, *s); });
  run.run("antipode", [&] {
    CheckResult r = check_antipode(*s, *loc, ctx.twist());
    json table = json::object();
    for (LetterId x = 0; x < loc->alphabet->size(); ++x) {
      table[loc->alphabet->letter(x).name] = s->table[x]->str();
    }
    r.details["table"] = table;
    return r;
  });
  run.run("antipode-square", [&] { return antipode_square(*s, *loc); });
}

void normal_form_command(Context& ctx, Runner& run, const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "normal-form needs an expression");
  const ParamSet params = ctx.spec().param_set();
  std::optional<LocalizedPresentation> loc;
  AlphabetPtr alphabet;
  std::optional<RewriteSystem> combined;
  if (ctx.spec().localize) {
    loc = localize(ctx.presentation(), det_qp(ctx.presentation()));
    alphabet = loc->alphabet;
  } else if (ctx.has_b()) {
    combined = combined_system(ctx.h(), ctx.plane_system(), ctx.twist(), ctx.max_degree());
    alphabet = combined->alphabet();
  } else {
    alphabet = ctx.h().alphabet();
  }
  NCPoly input = parse_ncpoly(text, alphabet, params);
  if (!ctx.spec().bindings.empty()) {
    input = input.map_coefficients(
        [&](const Scalar& c) { return c.substitute(ctx.spec().bindings); });
  }
  run.run("normal-form", [&] {
    CheckResult r("normal-form");
    const RewriteSystem& sys = loc ? loc->system : combined ? *combined : ctx.h();
    const ZeroTest t = is_zero_mod(input, sys);
    r.details["input"] = input.str();
    r.details["normal_form"] = t.residual.str();
    r.details["zero"] = t.zero;
    if (loc && !t.zero) r.details["zero"] = is_zero_localized(input, *loc).zero;
    if (!t.certified) r.warn("ConfluenceNotEstablished: input degree exceeds the verified degree");
    return r;
  });
}

void confluence_command(Context& ctx, Runner& run) {
  run.run("confluence", [&] { return confluence_result("confluence", ctx.h()); });
  run.run("pbw", [&] {
    CheckResult r("pbw");
    const std::uint64_t letters = static_cast<std::uint64_t>(ctx.spec().dim * ctx.spec().dim);
    json counts = json::array();
    for (int d = 0; d <= ctx.max_degree(); ++d) {
      const std::uint64_t got = count_normal_words(ctx.h(), d);
      const std::uint64_t expected = binomial(static_cast<std::uint64_t>(d) + letters - 1, letters - 1);
      counts.push_back(got);
      if (got != expected) {
        r.fail("degree " + std::to_string(d),
               std::to_string(got) + " normal words, expected " + std::to_string(expected));
      }
    }
    r.details["normal_words"] = counts;
    return r;
  });
  if (ctx.has_b()) {
    run.run("plane-confluence",
            [&] { return confluence_result("plane-confluence", ctx.plane_system()); });
    run.run("combined-confluence", [&] {
      return confluence_result("combined-confluence",
                               combined_system(ctx.h(), ctx.plane_system(), ctx.twist(),
                                               ctx.max_degree()));
    });
  }
  if (ctx.spec().localize) {
    run.run("localized-confluence", [&] {
      const LocalizedPresentation loc = localize(ctx.presentation(), det_qp(ctx.presentation()));
      return confluence_result("localized-confluence", loc.system);
    });
  }
}

}  // namespace

const std::vector<std::string>& pipeline_commands() {
  static const std::vector<std::string> commands = {
      "check-yb", "derive-bialgebra", "check-bialgebra", "solve-twist",
      "check-hopf", "normal-form",    "confluence"};
  return commands;
}

Report run_pipeline(const AlgebraSpec& spec, std::string_view command,
                    const PipelineOptions& options) {
  Report report;
  report.version = std::string(kVersion);
  report.command = std::string(command);
  report.spec_name = spec.name;
  report.spec_hash = fnv1a_hex(render_spec(spec));

  const int max_degree = options.max_degree > 0 ? options.max_degree : spec.max_degree;
  if (max_degree < 2) throw Error(ErrorCode::InvalidArgument, "max degree must be at least 2");
  Context ctx(spec, max_degree);
  Runner run(report, spec);
  if (command == "check-yb") {
    check_yb(ctx, run);
  } else if (command == "derive-bialgebra") {
    derive_bialgebra(ctx, run);
  } else if (command == "check-bialgebra") {
    check_bialgebra(ctx, run);
  } else if (command == "solve-twist") {
    solve_twist(ctx, run);
  } else if (command == "check-hopf") {
    check_hopf(ctx, run);
  } else if (command == "normal-form") {
    normal_form_command(ctx, run, options.argument);
  } else if (command == "confluence") {
    confluence_command(ctx, run);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(command) + "'");
  }
  return report;
}

}  // namespace twistfrt
