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

#ifndef POLYMPO_REAL_HPP
#define POLYMPO_REAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace polympo {

namespace mp = boost::multiprecision;

/// Exact integers and rationals for everything combinatorial.
using Integer = mp::cpp_int;
using Rational = mp::cpp_rational;

/// Runtime-precision binary floating point. Expression templates are off so
/// that `auto` and generic code behave like a plain value type.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr int kDefaultPrecisionBits = 256;
inline constexpr int kMinPrecisionBits = 53;

/// Sets the precision of newly created Real values on this thread for the
/// lifetime of the object and restores the previous setting afterwards.
/// The achieved precision is at least `bits`.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_digits10_;
};

/// Decimal digits requested from the backend so that it allocates >= bits.
unsigned digits10_for_bits(int bits);

/// Binary precision actually held by `x`.
int precision_bits_of(const Real& x);

/// base^n for rationals, which Boost does not provide.
inline Rational pow_exact(const Rational& base, unsigned n) {
  return Rational(Integer(mp::pow(mp::numerator(base), n)),
                  Integer(mp::pow(mp::denominator(base), n)));
}

Real to_real(const Integer& x);
Real to_real(const Rational& x);

/// Parses a decimal literal at the current thread precision.
Real parse_real(std::string_view text);

/// Scientific notation with enough digits to reproduce `x` at its own
/// precision.
std::string to_decimal(const Real& x);

/// Scientific notation with a fixed number of significant digits.
std::string to_decimal(const Real& x, int significant_digits);

/// Fixed notation with `significant_digits` significant digits, e.g.
/// 2.0000000000000000 for 17 digits.
std::string to_fixed(const Real& x, int significant_digits);

/// |got - want| / |want|, or |got - want| when want is zero.
Real relative_error(const Real& got, const Real& want);

}  // namespace polympo

#endif  // POLYMPO_REAL_HPP
