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

// Exact multivariate Laurent polynomials over Q and the rational-function
// field built on top of them.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistfrt {

/// Index of a parameter in the process-wide parameter registry. Registration
/// order is the variable order used by every canonical form.
using ParamId = int;

/// Interns `name` and returns its id. Thread-safe.
ParamId intern_param(std::string_view name);
/// Id of an already registered parameter, or -1.
ParamId find_param(std::string_view name);
const std::string& param_name(ParamId id);

/// Ordered list of declared parameter names. Declaring a set registers the
/// names in the given order if they were not registered before.
class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }
  bool contains(std::string_view name) const;
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Laurent monomial: integer exponent per parameter id, trailing zeros
/// trimmed so that equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(ParamId id, int exponent = 1);

  int exponent(ParamId id) const noexcept {
    return id < static_cast<ParamId>(exps_.size()) ? exps_[id] : 0;
  }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept;
  bool is_one() const noexcept { return exps_.empty(); }
  /// True when every exponent is nonnegative.
  bool is_ordinary() const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial inverse() const;
  /// Componentwise minimum.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim();
  std::vector<int> exps_;
};

/// Graded lexicographic order on Laurent monomials: total degree first, then
/// the larger exponent of the earliest parameter wins.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Laurent polynomial with rational coefficients. Terms are kept sorted in
/// decreasing grlex order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Polynomial() = default;
  Polynomial(long value);  // NOLINT: implicit constant
  explicit Polynomial(const mpq_class& value);
  static Polynomial monomial(const Monomial& m, const mpq_class& coeff = 1);
  static Polynomial var(ParamId id, int exponent = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Single term (possibly with negative exponents).
  bool is_term() const noexcept { return terms_.size() == 1; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Componentwise minimum exponent over all terms (one for zero).
  Monomial min_monomial() const;
  bool is_ordinary() const;
  int degree_in(ParamId id) const;
  bool contains(ParamId id) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Monomial& m) const;
  Polynomial operator*(const mpq_class& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  /// Exact quotient; throws if `divisor` does not divide this polynomial.
  Polynomial exact_div(const Polynomial& divisor) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Coefficients as a polynomial in `id`: result[k] multiplies id^k. Only
  /// valid for ordinary polynomials.
  std::vector<Polynomial> coefficients_in(ParamId id) const;

  /// Partial evaluation; `pole` is set when a negative power of a zero value
  /// would be needed.
  Polynomial evaluate(const std::map<ParamId, mpq_class>& binding,
                      bool* pole) const;

  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

/// Monic gcd of two ordinary polynomials (zero only if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(params): numerator is a Laurent polynomial, denominator an
/// ordinary polynomial divisible by no parameter with grlex-leading
/// coefficient 1, coprime to the numerator. Zero is 0/1. Immutable value.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT: implicit constant
  explicit Scalar(const mpq_class& value) : num_(value), den_(1) {}
  explicit Scalar(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
  /// Canonicalizes numerator/denominator; throws DivisionByZero on 0 den.
  Scalar(const Polynomial& numerator, const Polynomial& denominator);

  static Scalar param(std::string_view name, int exponent = 1);
  static Scalar param(ParamId id, int exponent = 1);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// A single coefficient times a Laurent monomial.
  bool is_monomial() const noexcept { return den_.is_one() && num_.is_term(); }
  bool is_rational() const noexcept;
  mpq_class rational_value() const;  // requires is_rational()

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  Scalar& operator/=(const Scalar& other) { return *this = *this / other; }
  Scalar inverse() const;
  Scalar pow(int exponent) const;

  /// Throws PoleAtSubstitution when the denominator vanishes.
  Scalar substitute(const std::map<ParamId, mpq_class>& binding) const;
  Scalar substitute(const std::map<std::string, mpq_class>& binding) const;

  /// Text in the scalar grammar, reparseable by parse_scalar.
  std::string str() const;
  /// True when str() can be used as a product factor without parentheses.
  bool is_atomic() const noexcept;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b);

}  // namespace twistfrt
