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

#ifndef POLYMPO_SOLVER_HPP
#define POLYMPO_SOLVER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "polympo/polynomial.hpp"
#include "polympo/real.hpp"

namespace polympo {

/// Toeplitz coefficients a_1..a_k in ascending index order.
///
/// The coefficients always describe the normalized profile P(r) / P(1);
/// `amplitude` = P(1) is carried separately and ends up on the X entries of
/// the MPO. For pure powers the amplitude is one.
struct CoefficientVector {
  int k = 0;
  std::vector<Real> values;
  int precision_bits = kDefaultPrecisionBits;
  /// Relative residual of the order-m equation at index m-1 (absolute when
  /// the right-hand side is zero).
  std::vector<Real> residuals;
  Rational amplitude = 1;

  /// 1-based access, a(1) = a_1.
  const Real& a(int index) const { return values.at(static_cast<std::size_t>(index - 1)); }
  Real max_residual() const;
};

class SolveError : public std::runtime_error {
 public:
  enum class Reason {
    kVanishingNearestNeighbour,  // P(1) = 0
    kNonRealRoot,                // a_1^k = negative value with k even
    kVanishingCoefficient,       // linear coefficient of the new unknown is zero
  };

  SolveError(Reason reason, int equation, const std::string& message)
      : std::runtime_error(message), reason_(reason), equation_(equation) {}

  Reason reason() const noexcept { return reason_; }
  /// Order m of the equation being solved, 0 when not tied to one.
  int equation() const noexcept { return equation_; }

 private:
  Reason reason_;
  int equation_;
};

/// Solves the triangular eta system in descending order m = k..1, each step
/// introducing a_{k-m+1} linearly. Precision is in bits and must be >= 53.
CoefficientVector solve_coefficients(const PolynomialSpec& poly,
                                     int precision_bits = kDefaultPrecisionBits);

/// Pure power P(x) = x^k.
CoefficientVector solve_coefficients(int k, int precision_bits = kDefaultPrecisionBits);

}  // namespace polympo

#endif  // POLYMPO_SOLVER_HPP
