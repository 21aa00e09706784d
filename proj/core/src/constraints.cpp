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

#include "polympo/constraints.hpp"

#include <stdexcept>
#include <string>

#include "polympo/combinatorics.hpp"

namespace polympo {

namespace {

void require_order(int m, int k) {
  if (k < 1 || m < 1 || m > k) {
    throw std::invalid_argument("eta equation order must satisfy 1 <= m <= k (m = " +
                                std::to_string(m) + ", k = " + std::to_string(k) + ")");
  }
}

void require_length(std::span<const Real> a, int k) {
  if (static_cast<int>(a.size()) != k) {
    throw std::invalid_argument("coefficient vector has length " + std::to_string(a.size()) +
                                ", expected " + std::to_string(k));
  }
}

}  // namespace

int PartitionMonomial::degree() const {
  int total = 0;
  for (const auto& [index, exponent] : powers) total += exponent;
  return total;
}

int PartitionMonomial::max_index() const { return powers.empty() ? 0 : powers.rbegin()->first; }

Real PartitionMonomial::evaluate(std::span<const Real> a) const {
  Real value = Real(weight);
  for (const auto& [index, exponent] : powers) {
    if (index < 1 || index > static_cast<int>(a.size())) {
      throw std::out_of_range("monomial index a_" + std::to_string(index) + " out of range");
    }
    value *= pow(a[index - 1], exponent);
  }
  return value;
}

Real EtaEquation::evaluate_lhs(std::span<const Real> a) const {
  Real total = 0;
  for (const auto& term : lhs) total += term.evaluate(a);
  return total;
}

Integer xi_target(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("xi_target: need n >= 0, k >= 1");
  return (k + 1) * (mp::pow(Integer(n + 1), static_cast<unsigned>(k)) - 1);
}

Integer eta_rhs_power(int m, int k) {
  require_order(m, k);
  Integer alternating = 0;
  for (int j = 1; j <= m; ++j) {
    Integer term = binomial(m, j) * (mp::pow(Integer(j + 1), static_cast<unsigned>(k)) - 1);
    if ((j + m) % 2 == 0) {
      alternating += term;
    } else {
      alternating -= term;
    }
  }
  alternating *= (k + 1);

  const Integer closed = (k + 1) * factorial(m) * stirling2(k + 1, m + 1);
  if (alternating != closed) {
    throw std::logic_error("eta_rhs_power(" + std::to_string(m) + ", " + std::to_string(k) +
                           "): alternating sum " + alternating.str() +
                           " disagrees with Stirling form " + closed.str());
  }
  return closed;
}

Rational eta_rhs_general(int m, const PolynomialSpec& poly) {
  const int k = poly.degree();
  require_order(m, k);
  Rational sum = 0;
  for (int j = 1; j <= m; ++j) {
    Rational term = Rational(binomial(m, j)) * (poly(Rational(j + 1)) - 1);
    if ((j + m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum * (k + 1);
}

std::vector<PartitionMonomial> build_eta_lhs(int m, int k) {
  require_order(m, k);
  std::vector<PartitionMonomial> terms;
  terms.push_back({Integer(k + 1 - m), {{1, m}}});
  for (int q = 1; q <= k - m; ++q) {
    const int outer = k + 1 - m - q;
    for (const auto& p : partitions(q, m)) {
      PartitionMonomial term;
      term.weight = outer * multiplicity_factor(m, p);
      // A piece s of the excess raises one factor from a_1 to a_{s+1}.
      for (const auto& [value, multiplicity] : p.parts) term.powers[value + 1] = multiplicity;
      if (const int ones = m - p.piece_count(); ones > 0) term.powers[1] += ones;
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

std::vector<EtaEquation> build_eta_system(const PolynomialSpec& poly) {
  const int k = poly.degree();
  const bool power = poly.is_pure_power();
  std::vector<EtaEquation> system;
  system.reserve(static_cast<std::size_t>(k));
  for (int m = 1; m <= k; ++m) {
    EtaEquation eq;
    eq.m = m;
    eq.k = k;
    eq.lhs = build_eta_lhs(m, k);
    eq.rhs = power ? Rational(eta_rhs_power(m, k)) : eta_rhs_general(m, poly);
    system.push_back(std::move(eq));
  }
  return system;
}

std::vector<Real> c_coeffs(int n, int k, std::span<const Real> a) {
  if (n < 0) throw std::invalid_argument("c_coeffs: n must be >= 0");
  require_length(a, k);
  std::vector<Real> c(static_cast<std::size_t>(k) + 1, Real(0));
  c[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Real sum = 0;
    for (int j = 1; j <= m; ++j) {
      sum += Real(j * (n + 1) - m) * a[j - 1] * c[m - j];
    }
    c[m] = sum / m;
  }
  return c;
}

std::vector<Real> c_coeffs_by_convolution(int n, int k, std::span<const Real> a) {
  if (n < 0) throw std::invalid_argument("c_coeffs: n must be >= 0");
  require_length(a, k);
  std::vector<Real> c(static_cast<std::size_t>(k) + 1, Real(0));
  c[0] = 1;
  for (int step = 1; step <= n; ++step) {
    std::vector<Real> next = c;
    for (int j = 1; j <= k; ++j) {
      for (int p = 1; p <= j; ++p) next[j] += a[p - 1] * c[j - p];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace polympo
