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

// Oriented rewriting modulo a two-sided ideal of the free algebra.

#include <climits>
#include <cstdint>
#include <memory>
#include <vector>

#include "twistfrt/freealg.hpp"

namespace twistfrt {

/// lhs -> rhs, every word of rhs strictly smaller than lhs.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

struct CriticalPair {
  Word overlap;
  std::size_t first_rule = 0;   // applied at the start of the overlap
  std::size_t second_rule = 0;  // applied at `offset`
  std::size_t offset = 0;
  bool inclusion = false;
  NCPoly left_step;   // one-step reduction by first_rule
  NCPoly right_step;  // one-step reduction by second_rule
  NCPoly left_normal;
  NCPoly right_normal;
  NCPoly residual;  // left_normal - right_normal
};

struct ConfluenceStatus {
  static constexpr int kAllDegrees = INT_MAX;
  bool resolved = true;        // every enumerated pair resolves
  int certified_degree = 0;    // words up to this degree have unique normal forms
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // overlaps longer than max_degree
};

class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules, int max_degree = 4);

  /// Orients the Scalar-span of `relations`: echelonized with columns in
  /// decreasing word order, each basis element becomes leading word ->
  /// minus the rest. Throws InvalidRule if the span contains a nonzero
  /// constant or a relation with a leading word of degree < 2.
  static RewriteSystem from_relations(AlphabetPtr alphabet, const std::vector<NCPoly>& relations,
                                      int max_degree = 4);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  int max_degree() const noexcept { return max_degree_; }
  /// lhs - rhs for every rule.
  std::vector<NCPoly> relations() const;

  /// Normal form of a single word (memoized).
  NCPoly normal_word(const Word& w) const;
  /// First redex in leftmost position, rules tried in declaration order.
  /// Returns false when `w` is normal.
  bool find_redex(const Word& w, std::size_t* position, std::size_t* rule) const;
  NCPoly rewrite_at(const Word& w, std::size_t position, std::size_t rule) const;

  /// Lazily computed, cached critical-pair analysis up to max_degree.
  const ConfluenceStatus& confluence() const;

  /// Copy with a different degree bound for confluence analysis.
  RewriteSystem with_max_degree(int max_degree) const;

  std::string str() const;

 private:
  struct Cache;

  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  int max_degree_;
  std::shared_ptr<Cache> cache_;
};

NCPoly normal_form(const NCPoly& x, const RewriteSystem& sys);

struct ZeroTest {
  bool zero = false;
  /// False when deg(x) exceeds the degree through which local confluence
  /// was verified (a ConfluenceNotEstablished warning).
  bool certified = false;
  NCPoly residual;  // the normal form
};

ZeroTest is_zero_mod(const NCPoly& x, const RewriteSystem& sys);

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);

/// Number of words of length `degree` over the system's alphabet containing
/// no rule lhs as a subword.
std::uint64_t count_normal_words(const RewriteSystem& sys, int degree);

/// Union of the relations of several systems over a common alphabet.
RewriteSystem combine(const AlphabetPtr& alphabet, const std::vector<const RewriteSystem*>& parts,
                      const std::vector<NCPoly>& extra = {}, int max_degree = 4);

/// Reduces every tensor factor independently: the image in
/// (H/I1) ⊗ .. ⊗ (H/IN). A null system leaves that factor untouched.
template <std::size_t N>
Tensor<N> reduce_factors(const Tensor<N>& t, const std::array<const RewriteSystem*, N>& systems) {
  Tensor<N> out(t.alphabets());
  for (const auto& [key, c] : t.terms()) {
    std::array<NCPoly, N> factors;
    for (std::size_t i = 0; i < N; ++i) {
      factors[i] = systems[i] ? systems[i]->normal_word(key[i])
                              : NCPoly(t.alphabets()[i], key[i]);
      factors[i] = factors[i].rebased(t.alphabets()[i]);
    }
    out = out + Tensor<N>::pure(factors) * c;
  }
  return out;
}

/// Largest word length of any factor of any term.
template <std::size_t N>
std::size_t tensor_degree(const Tensor<N>& t) {
  std::size_t d = 0;
  for (const auto& [key, c] : t.terms()) {
    for (const auto& w : key) d = std::max(d, w.size());
  }
  return d;
}

}  // namespace twistfrt
