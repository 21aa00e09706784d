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

#include "polympo/solver.hpp"

#include <algorithm>

#include "polympo/constraints.hpp"

namespace polympo {

Real CoefficientVector::max_residual() const {
  Real worst = 0;
  for (const auto& r : residuals) worst = std::max(worst, r);
  return worst;
}

namespace {

/// Real k-th root of `target`, polished with one Newton step on x^k - target.
Real leading_root(const Rational& target, int k) {
  if (target == 0) {
    throw SolveError(SolveError::Reason::kVanishingCoefficient, k,
                     "equation m=" + std::to_string(k) + ": a_1^k = 0 has no usable root");
  }
  if (target < 0 && k % 2 == 0) {
    throw SolveError(SolveError::Reason::kNonRealRoot, k,
                     "equation m=" + std::to_string(k) + ": a_1^" + std::to_string(k) + " = " +
                         to_string(target) + " has no real root");
  }
  const Real rhs = to_real(target);
  const Real magnitude = abs(rhs);
  Real x = exp(log(magnitude) / k);
  if (rhs < 0) x = -x;
  x -= (pow(x, k) - rhs) / (k * pow(x, k - 1));
  return x;
}

}  // namespace

CoefficientVector solve_coefficients(const PolynomialSpec& poly, int precision_bits) {
  if (precision_bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision_bits must be >= " + std::to_string(kMinPrecisionBits));
  }
  const int k = poly.degree();

  Rational amplitude;
  PolynomialSpec profile = poly;
  try {
    amplitude = poly(Rational(1));
    profile = poly.normalized();
  } catch (const std::domain_error& e) {
    throw SolveError(SolveError::Reason::kVanishingNearestNeighbour, 0, e.what());
  }

  PrecisionScope scope(precision_bits);
  const std::vector<EtaEquation> system = build_eta_system(profile);

  std::vector<Real> a(static_cast<std::size_t>(k), Real(0));
  a[0] = leading_root(system[k - 1].rhs, k);

  for (int m = k - 1; m >= 1; --m) {
    const EtaEquation& eq = system[m - 1];
    const int sought = k - m + 1;
    Real rhs = to_real(eq.rhs);
    const PartitionMonomial* linear = nullptr;
    for (const auto& term : eq.lhs) {
      if (term.powers.contains(sought)) {
        linear = &term;
      } else {
        rhs -= term.evaluate(a);
      }
    }
    if (linear == nullptr || linear->powers.at(sought) != 1) {
      throw std::logic_error("equation m=" + std::to_string(m) + " is not linear in a_" +
                             std::to_string(sought));
    }
    Real coefficient = Real(linear->weight);
    for (const auto& [index, exponent] : linear->powers) {
      if (index != sought) coefficient *= pow(a[index - 1], exponent);
    }
    if (coefficient == 0) {
      throw SolveError(SolveError::Reason::kVanishingCoefficient, m,
                       "equation m=" + std::to_string(m) + ": coefficient of a_" +
                           std::to_string(sought) + " vanishes");
    }
    a[sought - 1] = rhs / coefficient;
  }

  CoefficientVector out;
  out.k = k;
  out.precision_bits = precision_bits;
  out.amplitude = amplitude;
  out.residuals.reserve(static_cast<std::size_t>(k));
  for (const auto& eq : system) {
    out.residuals.push_back(relative_error(eq.evaluate_lhs(a), to_real(eq.rhs)));
  }
  out.values = std::move(a);
  return out;
}

CoefficientVector solve_coefficients(int k, int precision_bits) {
  return solve_coefficients(PolynomialSpec::power(k), precision_bits);
}

}  // namespace polympo
