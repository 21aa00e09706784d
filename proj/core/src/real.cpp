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

#include "polympo/real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polympo {

unsigned digits10_for_bits(int bits) {
  if (bits < 1) {
    throw std::invalid_argument("precision must be positive");
  }
  // log10(2) rounded up so the backend never allocates fewer bits.
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
}

PrecisionScope::PrecisionScope(int bits)
    : previous_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_digits10_); }

int precision_bits_of(const Real& x) {
  return static_cast<int>(mpfr_get_prec(x.backend().data()));
}

Real to_real(const Integer& x) { return Real(x); }

Real to_real(const Rational& x) {
  return Real(mp::numerator(x)) / Real(mp::denominator(x));
}

Real parse_real(std::string_view text) {
  try {
    return Real(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
}

std::string to_decimal(const Real& x) {
  const int digits =
      static_cast<int>(std::ceil(precision_bits_of(x) * 0.30102999566398120)) + 1;
  return to_decimal(x, digits);
}

std::string to_decimal(const Real& x, int significant_digits) {
  return x.str(significant_digits, std::ios_base::scientific);
}

std::string to_fixed(const Real& x, int significant_digits) {
  if (x == 0) {
    return Real(0).str(significant_digits - 1, std::ios_base::fixed);
  }
  // Digits after the decimal point = significant - (integer digits).
  const long exponent = static_cast<long>(floor(log10(abs(x))));
  const long decimals = std::max(0L, significant_digits - 1 - exponent);
  return x.str(static_cast<std::streamsize>(decimals), std::ios_base::fixed);
}

Real relative_error(const Real& got, const Real& want) {
  const Real diff = abs(got - want);
  if (want == 0) {
    return diff;
  }
  return diff / abs(want);
}

}  // namespace polympo
