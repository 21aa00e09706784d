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

#ifndef POLYMPO_VERIFY_HPP
#define POLYMPO_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polympo/mpo.hpp"
#include "polympo/polynomial.hpp"
#include "polympo/real.hpp"
#include "polympo/solver.hpp"

namespace polympo {

/// Concrete single-site operators substituted for the X and Y labels.
struct LocalOperatorPair {
  int d = 2;
  Eigen::MatrixXd X;
  Eigen::MatrixXd Y;

  /// d = 2, X = |0><1|, Y = |1><0|. Every X_i Y_j term lands in its own
  /// matrix element, so entrywise comparison isolates each coupling.
  static LocalOperatorPair nilpotent();

  /// Dense symmetric X and Y with entries in [-1, 1), reproducible from the
  /// seed on every platform.
  static LocalOperatorPair random_symmetric(int d, std::uint64_t seed);

  /// Throws std::invalid_argument when d < 2, shapes disagree or both are zero.
  void validate() const;
};

/// Largest Hilbert-space dimension d^L the dense routines accept.
inline constexpr long kMaxDenseDimension = 4096;

/// Relative tolerance of the eta residuals at a given precision.
Real residual_tolerance(int precision_bits);
/// Relative tolerance of 1^T L^n 1 against its target.
Real power_sum_tolerance(int precision_bits);
/// Relative tolerance of extracted pair couplings against beta^r P(r).
Real coefficient_tolerance(int precision_bits);

struct PowerSumEntry {
  int n = 0;
  Real value;
  Real target;
  Real relative_error;
};

struct PowerSumReport {
  std::vector<PowerSumEntry> entries;
  Real tolerance;

  bool passed() const;
  std::vector<int> failing_n() const;
  Real max_error() const;
};

/// Compares 1^T L^n 1 (direct matrix powers) with (k+1) P(n+1) / P(1) for
/// n = 0..n_max. n > k exercises the regime not constrained by the solve.
PowerSumReport power_sum_check(const CoefficientVector& a, const PolynomialSpec& poly, int n_max,
                               std::optional<Real> tolerance = std::nullopt);

/// c_0..c_k read off the first column of L_k(a)^n.
std::vector<Real> c_coeffs_by_matrix_power(int n, const CoefficientVector& a);

/// sum_{i<j} beta^(j-i) P(j-i) X_i Y_j by explicit Kronecker products, in
/// double precision. Site 1 is the most significant tensor factor.
Eigen::MatrixXd dense_hamiltonian(const LocalOperatorPair& ops, const PolynomialSpec& poly, int L);

/// Ordered product of the open-boundary MPO factors with labels replaced by
/// the concrete operators.
Eigen::MatrixXd contract_mpo(const SymbolicMPO& mpo, const LocalOperatorPair& ops, int L);

struct DenseComparison {
  double max_deviation = 0;
  double reference_max = 0;
  double tolerance = 0;
  bool passed() const { return max_deviation <= tolerance; }
};

/// max |contract_mpo - dense_hamiltonian| against 1e-9 max(1, |H|_max).
DenseComparison compare_with_dense(const SymbolicMPO& mpo, const LocalOperatorPair& ops,
                                   const PolynomialSpec& poly, int L);

struct CoefficientCheck {
  int worst_r = 0;
  Real max_relative_error;
  Real tolerance;
  bool passed() const { return max_relative_error <= tolerance; }
};

/// Coupling of X_1 Y_{1+r} extracted from the MPO against beta^r P(r) for
/// r = 1..r_max.
CoefficientCheck check_pair_coefficients(const SymbolicMPO& mpo, const PolynomialSpec& poly,
                                         int r_max, std::optional<Real> tolerance = std::nullopt);

/// One line of a verification report.
struct CheckResult {
  std::string name;
  int k = 0;
  std::string param;
  double err = 0;
  double tol = 0;
  bool pass = false;

  /// CHECK <name> k=<k> param=<...> err=<e> tol=<t> PASS|FAIL
  std::string line() const;

  friend auto operator<=>(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Sorts by (k, name, param) so output does not depend on execution order.
  void sort();
  std::string text() const;
  std::string json() const;
};

struct VerifyOptions {
  int precision_bits = kDefaultPrecisionBits;
  int n_max = 0;   // 0 means 3k
  int r_max = 60;  // pair couplings checked at the coefficient level
  int L_max = 8;   // largest chain for the dense oracle
  int d = 2;       // local dimension of the random operator pair
  std::uint64_t seed = 1;
  bool random_ops = true;
  std::vector<Rational> betas{Rational(1), Rational(1, 2)};
};

/// Solves for `poly` and runs every oracle against the resulting MPO:
/// eta residuals, power sums, pair couplings and dense equivalence for
/// L = 2..L_max (skipping sizes beyond kMaxDenseDimension).
VerificationReport verify_construction(const PolynomialSpec& poly, const VerifyOptions& options);

}  // namespace polympo

#endif  // POLYMPO_VERIFY_HPP
