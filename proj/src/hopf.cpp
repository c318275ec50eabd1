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


#include "twistfrt/hopf.hpp"

#include <algorithm>
#include <map>

namespace twistfrt {

namespace {

Deformation deformation_of(const BialgebraPresentation& p) {
  return p.deformation ? *p.deformation : Deformation{Scalar(1), Scalar(1)};
}

NCPoly letter(const AlphabetPtr& alphabet, std::string_view name) {
  return NCPoly::letter(alphabet, name);
}

NCPoly power(const NCPoly& x, std::size_t k, const AlphabetPtr& alphabet) {
  NCPoly r = NCPoly::constant(Scalar(1), alphabet);
  for (std::size_t i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

DeterminantElement det_qp(const BialgebraPresentation& presentation) {
  const AlphabetPtr& alphabet = presentation.alphabet;
  if (alphabet->dim() != 2 || !(*alphabet == *Alphabet::standard(2))) {
    throw Error(ErrorCode::InvalidArgument, "the determinant is defined for the 2x2 presentation");
  }
  const auto [q, p] = deformation_of(presentation);
  DeterminantElement det;
  det.value = letter(alphabet, "a") * letter(alphabet, "d") -
              letter(alphabet, "b") * letter(alphabet, "c") * (p.inverse() * q);
  det.lambda = {Scalar(1), p.pow(-2), p.pow(2), Scalar(1)};
  for (LetterId x = 0; x < 4; ++x) {
    const NCPoly gen = NCPoly::letter(alphabet, x);
    const NCPoly r = det.value * gen - gen * det.value * det.lambda[x];
    const ZeroTest t = is_zero_mod(r, presentation.relations);
    if (!t.zero) {
      throw Error(ErrorCode::CommutationFailure, "D" + alphabet->letter(x).name + " - (" +
                                                     det.lambda[x].str() + ")" +
                                                     alphabet->letter(x).name +
                                                     "D does not vanish: " + t.residual.str());
    }
  }
  return det;
}

LocalizedPresentation localize(const BialgebraPresentation& presentation,
                               const DeterminantElement& det) {
  const AlphabetPtr alphabet = Alphabet::standard(2, false, true);
  const RewriteSystem& base = presentation.relations;
  std::vector<RewriteRule> rules;
  for (const auto& rule : base.rules()) {
    Word lhs;
    for (std::size_t i = 0; i < rule.lhs.size(); ++i)
      lhs.push_back(alphabet->id(base.alphabet()->letter(rule.lhs[i]).name));
    rules.push_back({lhs, rule.rhs.rebased(alphabet)});
  }
  const LetterId d = alphabet->id("D");
  const LetterId dinv = alphabet->id("Dinv");
  for (LetterId x = 0; x < 4; ++x) {
    rules.push_back({Word({d, x}), NCPoly(alphabet, Word({x, d}), det.lambda[x])});
  }
  for (LetterId x = 0; x < 4; ++x) {
    rules.push_back({Word({dinv, x}), NCPoly(alphabet, Word({x, dinv}), det.lambda[x].inverse())});
  }
  rules.push_back({Word({d, dinv}), NCPoly::constant(Scalar(1), alphabet)});
  rules.push_back({Word({dinv, d}), NCPoly::constant(Scalar(1), alphabet)});

  RewriteSystem system(alphabet, std::move(rules), base.max_degree());
  if (!system.confluence().resolved) {
    std::string witness;
    for (const auto& pair : critical_pairs(system)) {
      if (!pair.residual.is_zero()) {
        witness = pair.overlap.str(*alphabet) + ": " + pair.residual.str();
        break;
      }
    }
    throw Error(ErrorCode::ConfluenceFailure, "localized system is not confluent at " + witness);
  }
  return LocalizedPresentation{presentation, det, alphabet, std::move(system),
                               standard_coproduct(alphabet), standard_counit(alphabet)};
}

NCPoly localized_normal_form(const NCPoly& x, const LocalizedPresentation& loc) {
  return normal_form(x.rebased(loc.alphabet), loc.system);
}

ZeroTest is_zero_localized(const NCPoly& x, const LocalizedPresentation& loc) {
  const NCPoly input = x.rebased(loc.alphabet);
  ZeroTest first = is_zero_mod(input, loc.system);
  if (first.zero) return first;

  const LetterId dinv = loc.alphabet->id("Dinv");
  std::size_t k = 0;
  for (const auto& [w, c] : first.residual.terms()) {
    k = std::max<std::size_t>(k, static_cast<std::size_t>(
                                     std::count(w.bytes().begin(), w.bytes().end(),
                                                static_cast<char>(dinv))));
  }
  const NCPoly cleared =
      normal_form(first.residual * power(letter(loc.alphabet, "D"), k, loc.alphabet), loc.system);

  const AlphabetPtr& base = loc.base.alphabet;
  NCPoly eliminated(base);
  for (const auto& [w, c] : cleared.terms()) {
    NCPoly term = NCPoly::constant(c, base);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter& l = loc.alphabet->letter(w[i]);
      if (l.name == "D") {
        term = term * loc.det.value;
      } else if (l.role == LetterRole::MatrixEntry) {
        term = term * NCPoly::letter(base, l.name);
      } else {
        throw Error(ErrorCode::InvalidRule, "Dinv survived clearing of denominators");
      }
    }
    eliminated += term;
  }
  ZeroTest second = is_zero_mod(eliminated, loc.base.relations);
  return ZeroTest{second.zero, first.certified && second.certified, first.residual};
}

AntipodeMap antipode_map(const LocalizedPresentation& loc) {
  const auto [q, p] = deformation_of(loc.base);
  const AlphabetPtr& al = loc.alphabet;
  const NCPoly dinv = letter(al, "Dinv");
  AntipodeMap s;
  s.table.resize(al->size());
  s.table[al->id("a")] = dinv * letter(al, "d");
  s.table[al->id("b")] = dinv * letter(al, "b") * -(p * q).inverse();
  s.table[al->id("c")] = dinv * letter(al, "c") * -(p * q);
  s.table[al->id("d")] = dinv * letter(al, "a");
  s.table[al->id("D")] = dinv;
  s.table[al->id("Dinv")] = letter(al, "D");
  return s;
}

NCPoly apply_antipode(const NCPoly& x, const AntipodeMap& s) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    NCPoly term = NCPoly::constant(c);
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] >= s.table.size() || !s.table[w[i]]) {
        throw Error(ErrorCode::MissingGeneratorImage,
                    "antipode has no image for letter " + x.alphabet()->letter(w[i]).name);
      }
      term = term * *s.table[w[i]];
    }
    out += term;
  }
  return out;
}

CheckResult check_antipode(const AntipodeMap& s, const LocalizedPresentation& loc,
                           const TwistTensor& twist) {
  CheckResult result("antipode");
  const AlphabetPtr& al = loc.alphabet;
  const int n = 2;
  auto t = [&](int row, int col) { return NCPoly::letter(al, *al->matrix_entry(row, col)); };
  auto st = [&](int row, int col) { return apply_antipode(t(row, col), s); };
  auto delta = [&](bool same) { return NCPoly::constant(Scalar(same ? 1 : 0), al); };

  std::size_t failures_before = 0;
  auto leg = [&](const char* name) {
    result.details[name] = result.failures == failures_before ? "pass" : "fail";
    failures_before = result.failures;
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly sum(al);
      for (int k = 1; k <= n; ++k) sum += st(i, k) * t(k, j);
      result.expect_zero("S(T)T (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                         is_zero_localized(sum - delta(i == j), loc));
    }
  leg("generator-left");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly sum(al);
      for (int k = 1; k <= n; ++k) sum += t(i, k) * st(k, j);
      result.expect_zero("TS(T) (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                         is_zero_localized(sum - delta(i == j), loc));
    }
  leg("generator-right");

  const MMatrix m = build_M(twist).map([&](const NCPoly& x) { return x.rebased(al); });
  const MMatrix sm = m.map([&](const NCPoly& x) { return apply_antipode(x, s); });
  const MMatrix left = compose(m, sm);
  const MMatrix right = compose(sm, m);
  for (const auto* prod : {&left, &right}) {
    const std::string tag = prod == &left ? "MS(M) " : "S(M)M ";
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const NCPoly x = (*prod)(i, j, k, l) - delta(i == k && j == l);
            result.expect_zero(tag + index_label(i, j, k, l), is_zero_localized(x, loc));
          }
    leg(prod == &left ? "matrix-left" : "matrix-right");
  }
  return result;
}

CheckResult check_determinant_coproduct(const LocalizedPresentation& loc) {
  CheckResult result("determinant-coproduct");
  const NCPoly& d = loc.det.value;
  const TensorNCPoly diff = coproduct(d, loc.base.coproduct) - TensorNCPoly::pure({d, d});
  const RewriteSystem* sys = &loc.base.relations;
  const TensorNCPoly reduced = reduce_factors<2>(diff, {sys, sys});
  result.expect_zero("Δ(D) - D⊗D", reduced.str(), reduced.is_zero(),
                     static_cast<long>(tensor_degree(diff)) <= sys->confluence().certified_degree);
  result.details["epsilon(D)"] = counit(d, loc.base.counit).str();
  if (!counit(d, loc.base.counit).is_one()) result.fail("ε(D)", counit(d, loc.base.counit).str());
  return result;
}

CheckResult check_localization(const LocalizedPresentation& loc, const AntipodeMap& s) {
  CheckResult result("localization");
  const AlphabetPtr& al = loc.alphabet;
  const NCPoly dl = letter(al, "D");
  const NCPoly dinv = letter(al, "Dinv");
  for (LetterId x = 0; x < 4; ++x) {
    const NCPoly gen = NCPoly::letter(al, x);
    result.expect_zero("D" + al->letter(x).name + "Dinv",
                       is_zero_mod(dl * gen * dinv - gen * loc.det.lambda[x], loc.system));
    const Scalar e_s = counit(apply_antipode(gen, s), loc.counit);
    const Scalar e = counit(gen, loc.counit);
    if (e_s != e) result.fail("ε(S(" + al->letter(x).name + "))", (e_s - e).str());
  }
  for (const auto& r : loc.base.relations.relations()) {
    result.expect_zero("S(" + r.str() + ")", is_zero_localized(apply_antipode(r.rebased(al), s), loc));
  }
  return result;
}

CheckResult antipode_square(const AntipodeMap& s, const LocalizedPresentation& loc) {
  CheckResult result("antipode-square");
  for (LetterId x = 0; x < loc.alphabet->size(); ++x) {
    const NCPoly gen = NCPoly::letter(loc.alphabet, x);
    result.details[loc.alphabet->letter(x).name] =
        localized_normal_form(apply_antipode(apply_antipode(gen, s), s), loc).str();
  }
  return result;
}

}  // namespace twistfrt
