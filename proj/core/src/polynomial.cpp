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

#include "polympo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polympo {

PolynomialSpec::PolynomialSpec(std::vector<Rational> alphas, Rational beta)
    : alphas_(std::move(alphas)), beta_(std::move(beta)) {
  if (alphas_.empty()) {
    throw std::invalid_argument("polynomial degree must be >= 1");
  }
  if (alphas_.back() == 0) {
    throw std::invalid_argument("leading coefficient alpha_" +
                                std::to_string(alphas_.size()) + " must be nonzero");
  }
  if (beta_ < 0) {
    throw std::invalid_argument("decay factor beta must be non-negative");
  }
}

PolynomialSpec PolynomialSpec::power(int k, Rational beta) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  std::vector<Rational> alphas(static_cast<std::size_t>(k), Rational(0));
  alphas.back() = 1;
  return PolynomialSpec(std::move(alphas), std::move(beta));
}

PolynomialSpec PolynomialSpec::from_alphas(std::vector<Rational> alphas, Rational beta) {
  return PolynomialSpec(std::move(alphas), std::move(beta));
}

PolynomialSpec PolynomialSpec::from_coefficients(std::span<const Rational> coefficients,
                                                 Rational beta) {
  if (coefficients.empty()) throw std::invalid_argument("empty coefficient list");
  if (coefficients.front() != 0) {
    throw std::invalid_argument("polynomial must have no constant term");
  }
  return PolynomialSpec({coefficients.begin() + 1, coefficients.end()}, std::move(beta));
}

bool PolynomialSpec::is_pure_power() const {
  return alphas_.back() == 1 &&
         std::all_of(alphas_.begin(), alphas_.end() - 1, [](const Rational& a) { return a == 0; });
}

Rational PolynomialSpec::operator()(const Rational& x) const {
  Rational out = 0;
  for (auto it = alphas_.rbegin(); it != alphas_.rend(); ++it) out = (out + *it) * x;
  return out;
}

Real PolynomialSpec::evaluate(const Real& x) const {
  Real out = 0;
  for (auto it = alphas_.rbegin(); it != alphas_.rend(); ++it) out = (out + to_real(*it)) * x;
  return out;
}

double PolynomialSpec::evaluate(double x) const {
  double out = 0;
  for (auto it = alphas_.rbegin(); it != alphas_.rend(); ++it) {
    out = (out + static_cast<double>(*it)) * x;
  }
  return out;
}

PolynomialSpec PolynomialSpec::normalized() const {
  const Rational at_one = (*this)(Rational(1));
  if (at_one == 0) {
    throw std::domain_error("P(1) = 0: nearest-neighbour coupling vanishes");
  }
  std::vector<Rational> scaled = alphas_;
  for (auto& a : scaled) a /= at_one;
  return PolynomialSpec(std::move(scaled), beta_);
}

PolynomialSpec PolynomialSpec::with_beta(Rational beta) const {
  return PolynomialSpec(alphas_, std::move(beta));
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("not a rational literal: '" + std::string(whole) + "'");
  }
  // Boost reads a leading zero as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), whole);
    const Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      const Integer magnitude = parse_integer(exp_text, whole);
      if (magnitude > 4096) throw std::invalid_argument("exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.convert_to<long>() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      const std::string_view int_part = text.substr(0, dot);
      const std::string_view frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) {
        throw std::invalid_argument("not a rational literal: '" + std::string(whole) + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(text);
    }
    const Integer mantissa = parse_integer(digits, whole);
    const Integer scale = mp::pow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
    value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::string to_decimal_string(const Rational& x) {
  Integer den = mp::denominator(x);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_string(x);

  const int places = std::max(twos, fives);
  const Integer scale = mp::pow(Integer(10), static_cast<unsigned>(places));
  const Integer scaled = mp::numerator(x) * scale / mp::denominator(x);
  const bool negative = scaled < 0;
  std::string digits = Integer(mp::abs(scaled)).str();
  if (places == 0) return (negative ? "-" : "") + digits;
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return (negative ? "-" : "") + digits;
}

}  // namespace polympo
