// Copyright 2026 The polympo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYMPO_POLYNOMIAL_HPP
#define POLYMPO_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polympo/real.hpp"

namespace polympo {

/// Interaction profile beta^r P(r) with P(x) = sum_{i=1..k} alpha_i x^i.
/// There is no constant term by construction and alpha_k is nonzero.
class PolynomialSpec {
 public:
  /// P(x) = x^k.
  static PolynomialSpec power(int k, Rational beta = 1);

  /// alphas[i] multiplies x^(i+1).
  static PolynomialSpec from_alphas(std::vector<Rational> alphas, Rational beta = 1);

  /// coefficients[0] is the constant term and must be zero.
  static PolynomialSpec from_coefficients(std::span<const Rational> coefficients,
                                          Rational beta = 1);

  int degree() const { return static_cast<int>(alphas_.size()); }
  const std::vector<Rational>& alphas() const { return alphas_; }
  const Rational& beta() const { return beta_; }

  bool is_pure_power() const;

  Rational operator()(const Rational& x) const;
  Real evaluate(const Real& x) const;
  double evaluate(double x) const;

  /// P / P(1), so that the nearest-neighbour value is one. Throws
  /// std::domain_error when P(1) = 0.
  PolynomialSpec normalized() const;

  PolynomialSpec with_beta(Rational beta) const;

  friend bool operator==(const PolynomialSpec&, const PolynomialSpec&) = default;

 private:
  PolynomialSpec(std::vector<Rational> alphas, Rational beta);

  std::vector<Rational> alphas_;
  Rational beta_;
};

/// Accepts integers ("3"), fractions ("-3/4") and decimals ("0.25", "1e-2").
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& x);

/// Exact decimal expansion when the denominator is of the form 2^a 5^b,
/// otherwise "p/q".
std::string to_decimal_string(const Rational& x);

}  // namespace polympo

#endif  // POLYMPO_POLYNOMIAL_HPP
