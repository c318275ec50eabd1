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
#include <cassert>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "twistfrt/error.hpp"
#include "twistfrt/scalar.hpp"

namespace twistfrt {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::vector<std::string> names;
  std::unordered_map<std::string, ParamId> ids;
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

ParamId intern_param(std::string_view name) {
  Registry& reg = registry();
  {
    std::shared_lock lock(reg.mutex);
    auto it = reg.ids.find(std::string(name));
    if (it != reg.ids.end()) return it->second;
  }
  std::unique_lock lock(reg.mutex);
  auto [it, inserted] =
      reg.ids.emplace(std::string(name), static_cast<ParamId>(reg.names.size()));
  if (inserted) reg.names.emplace_back(name);
  return it->second;
}

ParamId find_param(std::string_view name) {
  Registry& reg = registry();
  std::shared_lock lock(reg.mutex);
  auto it = reg.ids.find(std::string(name));
  return it == reg.ids.end() ? -1 : it->second;
}

const std::string& param_name(ParamId id) {
  Registry& reg = registry();
  std::shared_lock lock(reg.mutex);
  return reg.names.at(static_cast<std::size_t>(id));
}

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorCode::SemanticError,
                    "parameter '" + names_[i] + "' declared twice");
      }
    }
    intern_param(names_[i]);
  }
}

bool ParamSet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(ParamId id, int exponent) {
  Monomial m;
  if (exponent != 0) {
    m.exps_.assign(static_cast<std::size_t>(id) + 1, 0);
    m.exps_[id] = exponent;
  }
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_ordinary() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.trim();
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (int& e : r.exps_) e = -e;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  return *this * other.inverse();
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exponent(static_cast<ParamId>(i)),
                          b.exponent(static_cast<ParamId>(i)));
  }
  r.trim();
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const std::size_t n = std::max(a.exponents().size(), b.exponents().size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ea = a.exponent(static_cast<ParamId>(i));
    const int eb = b.exponent(static_cast<ParamId>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace_back(Monomial(), mpq_class(value));
}

Polynomial::Polynomial(const mpq_class& value) {
  if (sgn(value) != 0) terms_.emplace_back(Monomial(), value);
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& coeff) {
  Polynomial p;
  if (sgn(coeff) != 0) p.terms_.emplace_back(m, coeff);
  return p;
}

Polynomial Polynomial::var(ParamId id, int exponent) {
  return monomial(Monomial::var(id, exponent));
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return grlex_less(y.first, x.first);
  });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) {
        out.terms_.pop_back();
      }
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) {
    out.terms_.pop_back();
  }
  return out;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

Monomial Polynomial::min_monomial() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_[0].first;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    m = Monomial::gcd(m, terms_[i].first);
  }
  return m;
}

bool Polynomial::is_ordinary() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.is_ordinary(); });
}

int Polynomial::degree_in(ParamId id) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    const int e = t.first.exponent(id);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

bool Polynomial::contains(ParamId id) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [id](const Term& t) { return t.first.exponent(id) != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.first == b.first) {
      mpq_class c = a.second + b.second;
      if (sgn(c) != 0) r.terms_.emplace_back(a.first, std::move(c));
      ++i;
      ++j;
    } else if (grlex_less(b.first, a.first)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  if (other.is_term()) return (*this * other.terms_[0].first) * other.terms_[0].second;
  if (is_term()) return (other * terms_[0].first) * terms_[0].second;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      prod.emplace_back(a.first * b.first, a.second * b.second);
    }
  }
  return from_unsorted(std::move(prod));
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;  // multiplication by a monomial preserves grlex order
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  if (sgn(c) == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (divisor.is_term()) {
    return (*this * divisor.terms_[0].first.inverse()) *
           mpq_class(1 / divisor.terms_[0].second);
  }
  const bool ordinary = is_ordinary() && divisor.is_ordinary();
  std::vector<Term> quotient;
  Polynomial rem = *this;
  const Term& lead = divisor.terms_.front();
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.front();
    Monomial m = top.first / lead.first;
    if (ordinary && !m.is_ordinary()) {
      throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
    mpq_class c = top.second / lead.second;
    quotient.emplace_back(m, c);
    rem -= (divisor * m) * c;
    if (!ordinary && quotient.size() > 4 * (terms_.size() + 1) * (divisor.terms_.size() + 1)) {
      throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
  }
  return from_unsorted(std::move(quotient));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / terms_.front().second);
}

std::vector<Polynomial> Polynomial::coefficients_in(ParamId id) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(id)) + 1);
  const Monomial strip = Monomial::var(id, 1);
  for (const auto& t : terms_) {
    const int e = t.first.exponent(id);
    assert(e >= 0);
    Monomial rest = t.first;
    if (e != 0) rest = rest / Monomial::var(id, e);
    buckets[static_cast<std::size_t>(e)].emplace_back(std::move(rest), t.second);
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_unsorted(std::move(b)));
  return out;
}

namespace {

mpq_class ipow(const mpq_class& base, int exponent) {
  mpq_class r = 1;
  mpq_class b = exponent < 0 ? mpq_class(1 / base) : base;
  for (int e = std::abs(exponent); e > 0; --e) r *= b;
  return r;
}

}  // namespace

Polynomial Polynomial::evaluate(const std::map<ParamId, mpq_class>& binding,
                                bool* pole) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpq_class c = t.second;
    Monomial rest = t.first;
    for (const auto& [id, value] : binding) {
      const int e = t.first.exponent(id);
      if (e == 0) continue;
      if (sgn(value) == 0) {
        if (e < 0) {
          if (pole) *pole = true;
          return Polynomial();
        }
        c = 0;
      } else {
        c *= ipow(value, e);
      }
      rest = rest / Monomial::var(id, e);
    }
    if (sgn(c) != 0) out.emplace_back(std::move(rest), std::move(c));
  }
  return from_unsorted(std::move(out));
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += param_name(static_cast<ParamId>(i));
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class mag = abs(c);
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += monomial_str(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd over Q[params] by recursive primitive remainder sequences.

namespace {

ParamId first_variable(const Polynomial& a, const Polynomial& b) {
  ParamId best = -1;
  for (const Polynomial* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      const auto& e = t.first.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) {
          if (best < 0 || static_cast<ParamId>(i) < best) best = static_cast<ParamId>(i);
          break;
        }
      }
    }
  }
  return best;
}

Polynomial gcd_ordinary(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, ParamId v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_ordinary(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, ParamId v) {
  if (p.is_zero()) return p;
  return p.exact_div(content_in(p, v));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, ParamId v) {
  const int db = b.degree_in(v);
  const Polynomial lcb = b.coefficients_in(v).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    const Polynomial lcr = r.coefficients_in(v).back();
    r = lcb * r - (lcr * Monomial::var(v, dr - db)) * b;
  }
  return r;
}

Polynomial gcd_ordinary(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  const Monomial ma = a.min_monomial();
  const Monomial mb = b.min_monomial();
  const Monomial mg = Monomial::gcd(ma, mb);
  Polynomial x = a * ma.inverse();
  Polynomial y = b * mb.inverse();
  if (x.is_constant() || y.is_constant()) return Polynomial::monomial(mg);

  const ParamId v = first_variable(x, y);
  if (!x.contains(v)) return (gcd_ordinary(x, content_in(y, v)) * mg).monic();
  if (!y.contains(v)) return (gcd_ordinary(content_in(x, v), y) * mg).monic();

  const Polynomial cx = content_in(x, v);
  const Polynomial cy = content_in(y, v);
  const Polynomial c = gcd_ordinary(cx, cy);
  Polynomial f = x.exact_div(cx);
  Polynomial g = y.exact_div(cy);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (!g.is_zero()) {
    if (g.degree_in(v) == 0) {
      f = Polynomial(1);
      break;
    }
    Polynomial r = pseudo_remainder(f, g, v);
    f = std::move(g);
    g = primitive_in(r, v);
  }
  Polynomial result = f.degree_in(v) == 0 ? Polynomial(1) : primitive_in(f, v);
  return (c * result * mg).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.is_ordinary() || !b.is_ordinary()) {
    throw Error(ErrorCode::InvalidArgument, "gcd requires ordinary polynomials");
  }
  return gcd_ordinary(a, b);
}

}  // namespace twistfrt
