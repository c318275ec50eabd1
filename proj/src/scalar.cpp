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

#include "twistfrt/error.hpp"
#include "twistfrt/scalar.hpp"

namespace twistfrt {

Scalar::Scalar(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (numerator.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  // Pull the monomial content of the denominator into the Laurent numerator.
  const Monomial shift = denominator.min_monomial();
  Polynomial den = denominator * shift.inverse();
  Polynomial num = numerator * shift.inverse();
  if (!den.is_constant()) {
    const Monomial nshift = num.min_monomial();
    Polynomial ordinary_num = num * nshift.inverse();
    const Polynomial g = gcd(ordinary_num, den);
    if (!g.is_one()) {
      ordinary_num = ordinary_num.exact_div(g);
      den = den.exact_div(g);
    }
    num = ordinary_num * nshift;
  }
  const mpq_class lead = den.leading().second;
  if (lead != 1) {
    const mpq_class inv = 1 / lead;
    num = num * inv;
    den = den * inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Scalar Scalar::param(std::string_view name, int exponent) {
  return param(intern_param(name), exponent);
}

Scalar Scalar::param(ParamId id, int exponent) {
  return Scalar(Polynomial::var(id, exponent));
}

bool Scalar::is_rational() const noexcept {
  return num_.is_constant() && den_.is_one();
}

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar is not a rational number");
  return num_.is_zero() ? mpq_class(0) : num_.leading().second;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (den_.is_one() && other.den_.is_one()) return Scalar(num_ + other.num_);
  if (den_ == other.den_) return Scalar(num_ + other.num_, den_);
  return Scalar(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  if (is_zero() || other.is_zero()) return Scalar();
  if (den_.is_one() && other.den_.is_one()) return Scalar(num_ * other.num_);
  return Scalar(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::operator/(const Scalar& other) const {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this * other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (num_.is_term()) {
    // Monomial numerators invert without a gcd.
    const auto& [m, c] = num_.leading();
    Scalar r;
    r.num_ = den_ * m.inverse() * mpq_class(1 / c);
    r.den_ = Polynomial(1);
    return r;
  }
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  Scalar r(1);
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) r *= base;
  return r;
}

Scalar Scalar::substitute(const std::map<ParamId, mpq_class>& binding) const {
  bool pole = false;
  Polynomial n = num_.evaluate(binding, &pole);
  Polynomial d = den_.evaluate(binding, &pole);
  if (pole || d.is_zero()) {
    throw Error(ErrorCode::PoleAtSubstitution,
                "substitution hits a pole of " + str());
  }
  return Scalar(n, d);
}

Scalar Scalar::substitute(const std::map<std::string, mpq_class>& binding) const {
  std::map<ParamId, mpq_class> ids;
  for (const auto& [name, value] : binding) {
    const ParamId id = find_param(name);
    if (id >= 0) ids.emplace(id, value);
  }
  return substitute(ids);
}

bool Scalar::is_atomic() const noexcept {
  if (!den_.is_one()) return false;
  if (num_.is_zero()) return true;
  if (!num_.is_term()) return false;
  const auto& [m, c] = num_.leading();
  // A bare rational like 3/4 is atomic only as a leading factor; keep
  // parentheses whenever it is not an integer.
  return sgn(c) > 0 && (m.is_one() ? c.get_den() == 1 : c == 1);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (!num_.is_term()) n = "(" + n + ")";
  std::string d = den_.str();
  if (!den_.is_term() || !den_.leading().first.is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scalar operation");
}

}  // namespace twistfrt
