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

#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "twistfrt/linalg.hpp"
#include "twistfrt/rewrite.hpp"

namespace twistfrt {

struct RewriteSystem::Cache {
  std::mutex mutex;
  std::unordered_map<std::string, NCPoly> normal_words;
  std::once_flag confluence_once;
  ConfluenceStatus confluence;
};

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules, int max_degree)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      max_degree_(max_degree),
      cache_(std::make_shared<Cache>()) {
  WordLess less;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    RewriteRule& r = rules_[i];
    if (r.lhs.empty()) throw Error(ErrorCode::InvalidRule, "rule with empty left-hand side");
    r.rhs = r.rhs.rebased(alphabet_);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!less(w, r.lhs)) {
        throw Error(ErrorCode::InvalidRule, "rule " + r.lhs.str(*alphabet_) +
                                                " -> " + r.rhs.str() + " does not decrease");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[j].lhs == r.lhs) {
        throw Error(ErrorCode::InvalidRule,
                    "two rules share left-hand side " + r.lhs.str(*alphabet_));
      }
    }
  }
}

RewriteSystem RewriteSystem::from_relations(AlphabetPtr alphabet,
                                            const std::vector<NCPoly>& relations,
                                            int max_degree) {
  std::vector<NCPoly> rebased;
  rebased.reserve(relations.size());
  for (const auto& r : relations) rebased.push_back(r.rebased(alphabet));
  std::vector<RewriteRule> rules;
  for (const NCPoly& b : echelon_basis(rebased)) {
    const Word lhs = b.leading_word();
    if (lhs.empty()) {
      throw Error(ErrorCode::InvalidRule, "relations generate the whole algebra");
    }
    if (lhs.size() < 2) {
      throw Error(ErrorCode::InvalidRule,
                  "relation " + b.str() + " has a leading word of degree < 2");
    }
    NCPoly rhs = -(b - NCPoly(alphabet, lhs));
    rules.push_back({lhs, rhs.rebased(alphabet)});
  }
  return RewriteSystem(std::move(alphabet), std::move(rules), max_degree);
}

std::vector<NCPoly> RewriteSystem::relations() const {
  std::vector<NCPoly> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(NCPoly(alphabet_, r.lhs) - r.rhs);
  return out;
}

bool RewriteSystem::find_redex(const Word& w, std::size_t* position, std::size_t* rule) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Word& lhs = rules_[i].lhs;
      if (pos + lhs.size() <= w.size() &&
          w.bytes().compare(pos, lhs.size(), lhs.bytes()) == 0) {
        *position = pos;
        *rule = i;
        return true;
      }
    }
  }
  return false;
}

NCPoly RewriteSystem::rewrite_at(const Word& w, std::size_t position, std::size_t rule) const {
  const RewriteRule& r = rules_[rule];
  const Word prefix = w.sub(0, position);
  const Word suffix = w.sub(position + r.lhs.size());
  NCPoly out(alphabet_);
  for (const auto& [rw, rc] : r.rhs.terms()) out.add_term(prefix + rw + suffix, rc);
  return out;
}

NCPoly RewriteSystem::normal_word(const Word& w) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->normal_words.find(w.bytes());
    if (it != cache_->normal_words.end()) return it->second;
  }
  std::size_t pos = 0;
  std::size_t rule = 0;
  NCPoly result(alphabet_);
  if (!find_redex(w, &pos, &rule)) {
    result.add_term(w, Scalar(1));
  } else {
    const NCPoly step = rewrite_at(w, pos, rule);
    for (const auto& [nw, c] : step.terms()) {
      result += normal_word(nw) * c;
    }
  }
  std::lock_guard lock(cache_->mutex);
  cache_->normal_words.emplace(w.bytes(), result);
  return result;
}

RewriteSystem RewriteSystem::with_max_degree(int max_degree) const {
  return RewriteSystem(alphabet_, rules_, max_degree);
}

std::string RewriteSystem::str() const {
  std::string out;
  for (const auto& r : rules_) {
    out += r.lhs.str(*alphabet_) + " -> " + r.rhs.str() + "\n";
  }
  return out;
}

NCPoly normal_form(const NCPoly& x, const RewriteSystem& sys) {
  NCPoly result(sys.alphabet());
  const NCPoly input = x.rebased(sys.alphabet());
  for (const auto& [w, c] : input.terms()) {
    result += sys.normal_word(w) * c;
  }
  return result;
}

const ConfluenceStatus& RewriteSystem::confluence() const {
  std::call_once(cache_->confluence_once, [this] {
    ConfluenceStatus status;
    status.certified_degree = ConfluenceStatus::kAllDegrees;
    int first_failure = INT_MAX;
    for (const auto& cp : critical_pairs(*this)) {
      ++status.pairs_checked;
      if (!cp.residual.is_zero()) {
        status.resolved = false;
        first_failure = std::min(first_failure, static_cast<int>(cp.overlap.size()));
      }
    }
    // Count overlaps that exceed the degree bound.
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Word& a = rules_[i].lhs;
        const Word& b = rules_[j].lhs;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          if (a.bytes().compare(a.size() - k, k, b.bytes(), 0, k) == 0 &&
              static_cast<int>(a.size() + b.size() - k) > max_degree_) {
            ++status.pairs_skipped;
          }
        }
      }
    }
    if (!status.resolved) {
      status.certified_degree = first_failure - 1;
    } else if (status.pairs_skipped > 0) {
      status.certified_degree = max_degree_;
    }
    cache_->confluence = status;
  });
  return cache_->confluence;
}

ZeroTest is_zero_mod(const NCPoly& x, const RewriteSystem& sys) {
  ZeroTest t;
  t.residual = normal_form(x, sys);
  t.zero = t.residual.is_zero();
  t.certified = static_cast<int>(x.degree()) <= sys.confluence().certified_degree;
  return t;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
  std::vector<CriticalPair> out;
  const auto& rules = sys.rules();
  const AlphabetPtr& alphabet = sys.alphabet();
  auto finish = [&](CriticalPair cp) {
    cp.left_normal = normal_form(cp.left_step, sys);
    cp.right_normal = normal_form(cp.right_step, sys);
    cp.residual = cp.left_normal - cp.right_normal;
    out.push_back(std::move(cp));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& a = rules[i].lhs;
      const Word& b = rules[j].lhs;
      // Overlaps: a = XY, b = YZ with Y nonempty and proper.
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.bytes().compare(a.size() - k, k, b.bytes(), 0, k) != 0) continue;
        const Word overlap = a + b.sub(k);
        if (static_cast<int>(overlap.size()) > sys.max_degree()) continue;
        CriticalPair cp;
        cp.overlap = overlap;
        cp.first_rule = i;
        cp.second_rule = j;
        cp.offset = a.size() - k;
        cp.left_step = sys.rewrite_at(overlap, 0, i);
        cp.right_step = sys.rewrite_at(overlap, cp.offset, j);
        finish(std::move(cp));
      }
      // Inclusions: b occurs inside a.
      if (i != j && b.size() <= a.size()) {
        for (std::size_t pos = a.find(b); pos != std::string::npos; pos = a.find(b, pos + 1)) {
          CriticalPair cp;
          cp.overlap = a;
          cp.first_rule = i;
          cp.second_rule = j;
          cp.offset = pos;
          cp.inclusion = true;
          cp.left_step = sys.rewrite_at(a, 0, i);
          cp.right_step = sys.rewrite_at(a, pos, j);
          finish(std::move(cp));
        }
      }
    }
  }
  (void)alphabet;
  return out;
}

std::uint64_t count_normal_words(const RewriteSystem& sys, int degree) {
  if (degree < 0) return 0;
  const auto& rules = sys.rules();
  const std::size_t letters = sys.alphabet()->size();
  std::uint64_t count = 0;
  Word w;
  // Depth-first extension; a rule lhs can only newly appear as a suffix.
  auto ends_with_lhs = [&](const Word& x) {
    for (const auto& r : rules) {
      const std::size_t n = r.lhs.size();
      if (n <= x.size() && x.bytes().compare(x.size() - n, n, r.lhs.bytes()) == 0) return true;
    }
    return false;
  };
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (std::size_t l = 0; l < letters; ++l) {
      Word next = w;
      next.push_back(static_cast<LetterId>(l));
      if (ends_with_lhs(next)) continue;
      std::swap(w, next);
      extend(remaining - 1);
      std::swap(w, next);
    }
  };
  extend(degree);
  return count;
}

RewriteSystem combine(const AlphabetPtr& alphabet, const std::vector<const RewriteSystem*>& parts,
                      const std::vector<NCPoly>& extra, int max_degree) {
  std::vector<NCPoly> relations;
  for (const RewriteSystem* part : parts) {
    for (auto& r : part->relations()) relations.push_back(r.rebased(alphabet));
  }
  for (const auto& r : extra) relations.push_back(r.rebased(alphabet));
  return RewriteSystem::from_relations(alphabet, relations, max_degree);
}

}  // namespace twistfrt
