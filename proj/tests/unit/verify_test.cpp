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

#include "polympo/verify.hpp"

#include <gtest/gtest.h>

#include "polympo/constraints.hpp"

namespace polympo {
namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

TEST(PowerSum, NearestNeighbour) {
  const auto a = solve_coefficients(1);
  const auto report = power_sum_check(a, PolynomialSpec::power(1), 3);
  ASSERT_EQ(report.entries.size(), 4u);
  const std::vector<int> expected{2, 4, 6, 8};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(report.entries[n].value, Real(expected[n]));
    EXPECT_EQ(report.entries[n].target, Real(expected[n]));
  }
  EXPECT_TRUE(report.passed());
}

TEST(PowerSum, QuadraticTargets) {
  const auto a = solve_coefficients(2);
  const auto report = power_sum_check(a, PolynomialSpec::power(2), 10);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.entries[1].target, Real(12));
  EXPECT_EQ(report.entries[2].target, Real(27));
  EXPECT_EQ(report.entries[3].target, Real(48));
  EXPECT_EQ(report.entries[4].target, Real(75));
}

TEST(PowerSum, PerturbedVectorNamesFailingOrders) {
  auto a = solve_coefficients(3);
  {
    PrecisionScope scope(a.precision_bits);
    a.values[2] += Real("1e-10");
  }
  const auto report = power_sum_check(a, PolynomialSpec::power(3), 9);
  EXPECT_FALSE(report.passed());
  const auto failing = report.failing_n();
  ASSERT_FALSE(failing.empty());
  // a_3 first enters 1^T L^n 1 at n = 1.
  EXPECT_EQ(failing.front(), 1);
}

TEST(PowerSum, RejectsShortRangeAndDegreeMismatch) {
  const auto a = solve_coefficients(3);
  EXPECT_THROW(power_sum_check(a, PolynomialSpec::power(3), 2), std::invalid_argument);
  EXPECT_THROW(power_sum_check(a, PolynomialSpec::power(2), 6), std::invalid_argument);
}

TEST(CCoeffs, ThreeRoutesAgree) {
  for (int k = 1; k <= 8; ++k) {
    const auto a = solve_coefficients(k);
    PrecisionScope scope(a.precision_bits);
    for (int n = 0; n <= 12; ++n) {
      const auto miller = c_coeffs(n, k, a.values);
      const auto conv = c_coeffs_by_convolution(n, k, a.values);
      const auto power = c_coeffs_by_matrix_power(n, a);
      ASSERT_EQ(power.size(), static_cast<std::size_t>(k + 1));
      for (int j = 0; j <= k; ++j) {
        EXPECT_LE(relative_error(miller[j], power[j]), Real("1e-70")) << k << "," << n << "," << j;
        EXPECT_LE(relative_error(conv[j], power[j]), Real("1e-70")) << k << "," << n << "," << j;
      }
    }
  }
}

TEST(DenseHamiltonian, SinglePair) {
  const auto ops = LocalOperatorPair::nilpotent();
  const Eigen::MatrixXd h = dense_hamiltonian(ops, PolynomialSpec::power(1), 2);
  EXPECT_EQ(h, kron(ops.X, ops.Y));
}

TEST(DenseHamiltonian, ThreeSitesLinear) {
  const auto ops = LocalOperatorPair::nilpotent();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  const Eigen::MatrixXd expected = kron(kron(ops.X, ops.Y), id) + kron(kron(id, ops.X), ops.Y) +
                                   2.0 * kron(kron(ops.X, id), ops.Y);
  EXPECT_EQ(dense_hamiltonian(ops, PolynomialSpec::power(1), 3), expected);
}

TEST(DenseHamiltonian, ZeroBetaVanishes) {
  const auto ops = LocalOperatorPair::random_symmetric(2, 3);
  for (int L = 2; L <= 5; ++L) {
    const Eigen::MatrixXd h = dense_hamiltonian(ops, PolynomialSpec::power(2, Rational(0)), L);
    EXPECT_TRUE(h.isZero(0.0)) << L;
  }
}

TEST(DenseHamiltonian, CapIsEnforced) {
  const auto ops = LocalOperatorPair::nilpotent();
  EXPECT_NO_THROW(dense_hamiltonian(ops, PolynomialSpec::power(1), 12));
  EXPECT_THROW(dense_hamiltonian(ops, PolynomialSpec::power(1), 13), std::invalid_argument);
  const auto mpo = build_mpo(solve_coefficients(1));
  EXPECT_THROW(contract_mpo(mpo, ops, 13), std::invalid_argument);
  EXPECT_THROW(contract_mpo(mpo, ops, 1), std::invalid_argument);
}

TEST(LocalOperators, Validation) {
  EXPECT_NO_THROW(LocalOperatorPair::nilpotent().validate());
  EXPECT_THROW(LocalOperatorPair::random_symmetric(1, 0), std::invalid_argument);
  LocalOperatorPair zero;
  zero.d = 2;
  zero.X = Eigen::MatrixXd::Zero(2, 2);
  zero.Y = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(zero.validate(), std::invalid_argument);
  LocalOperatorPair shape = LocalOperatorPair::nilpotent();
  shape.Y = Eigen::MatrixXd::Zero(3, 3);
  EXPECT_THROW(shape.validate(), std::invalid_argument);
}

TEST(LocalOperators, RandomPairIsReproducibleAndSymmetric) {
  const auto a = LocalOperatorPair::random_symmetric(3, 42);
  const auto b = LocalOperatorPair::random_symmetric(3, 42);
  const auto c = LocalOperatorPair::random_symmetric(3, 43);
  EXPECT_EQ(a.X, b.X);
  EXPECT_EQ(a.Y, b.Y);
  EXPECT_NE(a.X, c.X);
  EXPECT_EQ(a.X, a.X.transpose());
  EXPECT_LE(a.X.cwiseAbs().maxCoeff(), 1.0);
  EXPECT_LE(a.Y.cwiseAbs().maxCoeff(), 1.0);
}

TEST(Contract, TwoSitesIsBarePair) {
  const auto ops = LocalOperatorPair::nilpotent();
  for (int k = 1; k <= 4; ++k) {
    const auto mpo = build_mpo(solve_coefficients(k));
    const Eigen::MatrixXd h = contract_mpo(mpo, ops, 2);
    EXPECT_LE((h - kron(ops.X, ops.Y)).cwiseAbs().maxCoeff(), 1e-12) << k;
  }
}

TEST(Contract, ThreeSitesQuadratic) {
  const auto ops = LocalOperatorPair::nilpotent();
  const auto mpo = build_mpo(solve_coefficients(2));
  const Eigen::MatrixXd h = contract_mpo(mpo, ops, 3);
  // X on site 1 and Y on site 3 maps |1 0 0> to |0 0 1>.
  EXPECT_NEAR(h(0b001, 0b100), 4.0, 1e-12);
  EXPECT_NEAR(h(0b010, 0b100), 1.0, 1e-12);
  EXPECT_NEAR(h(0b001, 0b010), 1.0, 1e-12);
}

TEST(Contract, DampedLinearChain) {
  const Rational beta(7, 10);
  const auto mpo = build_mpo(solve_coefficients(1), beta);
  const auto cmp = compare_with_dense(mpo, LocalOperatorPair::nilpotent(),
                                      PolynomialSpec::power(1, beta), 6);
  EXPECT_LE(cmp.max_deviation, 1e-9);
}

TEST(Contract, OracleGrid) {
  const std::vector<LocalOperatorPair> op_sets{LocalOperatorPair::nilpotent(),
                                               LocalOperatorPair::random_symmetric(2, 1)};
  for (int k = 1; k <= 4; ++k) {
    const auto a = solve_coefficients(k);
    for (const Rational& beta : {Rational(1), Rational(1, 2)}) {
      const auto mpo = build_mpo(a, beta);
      const auto poly = PolynomialSpec::power(k, beta);
      for (const auto& ops : op_sets) {
        for (int L = 2; L <= 8; ++L) {
          const auto cmp = compare_with_dense(mpo, ops, poly, L);
          EXPECT_TRUE(cmp.passed()) << "k=" << k << " L=" << L << " dev=" << cmp.max_deviation;
        }
      }
    }
  }
}

TEST(Contract, WiderLocalDimension) {
  const auto ops = LocalOperatorPair::random_symmetric(3, 9);
  const auto mpo = build_mpo(solve_coefficients(3), Rational(1, 2));
  for (int L = 2; L <= 5; ++L) {
    EXPECT_TRUE(compare_with_dense(mpo, ops, PolynomialSpec::power(3, Rational(1, 2)), L).passed());
  }
}

TEST(PairCoefficients, PowerLawsToSixty) {
  for (int k = 1; k <= 10; ++k) {
    const auto mpo = build_mpo(solve_coefficients(k));
    const auto check = check_pair_coefficients(mpo, PolynomialSpec::power(k), 60);
    EXPECT_TRUE(check.passed()) << "k=" << k << " r=" << check.worst_r;
    EXPECT_LE(check.max_relative_error, Real("1e-20"));
  }
}

TEST(PairCoefficients, DetectsWrongPolynomial) {
  const auto mpo = build_mpo(solve_coefficients(2));
  const auto check = check_pair_coefficients(mpo, PolynomialSpec::power(2, Rational(1)) , 5);
  EXPECT_TRUE(check.passed());
  const auto wrong = check_pair_coefficients(
      mpo, PolynomialSpec::from_alphas({Rational(1), Rational(1)}), 5);
  EXPECT_FALSE(wrong.passed());
}

TEST(Tolerances, Pinned) {
  PrecisionScope scope(256);
  EXPECT_EQ(residual_tolerance(256), pow(Real(2), -244));
  EXPECT_EQ(power_sum_tolerance(256), pow(Real(2), -240));
  EXPECT_EQ(coefficient_tolerance(256), pow(Real(2), -232));
}

TEST(Report, LineFormat) {
  const CheckResult c{"dense_oracle", 3, "x^3,beta=1,L=04", 1.5e-15, 1e-9, true};
  EXPECT_EQ(c.line(), "CHECK dense_oracle k=3 param=x^3,beta=1,L=04 err=1.500e-15 tol=1.000e-09 PASS");
  const CheckResult f{"power_sum", 2, "x^2", 2.0, 1.0, false};
  EXPECT_EQ(f.line(), "CHECK power_sum k=2 param=x^2 err=2.000e+00 tol=1.000e+00 FAIL");
}

TEST(Report, SortAndJson) {
  VerificationReport report;
  report.checks.push_back({"power_sum", 2, "b", 0, 1, true});
  report.checks.push_back({"eta_residual", 2, "a", 0, 1, true});
  report.checks.push_back({"bond_dim", 1, "z", 0, 0, false});
  report.sort();
  EXPECT_EQ(report.checks[0].k, 1);
  EXPECT_EQ(report.checks[1].name, "eta_residual");
  EXPECT_FALSE(report.passed());
  const std::string json = report.json();
  EXPECT_NE(json.find("\"passed\": false"), std::string::npos);
  EXPECT_NE(json.find("\"status\": \"FAIL\""), std::string::npos);
  EXPECT_EQ(report.text().substr(0, 15), "CHECK bond_dim ");
}

TEST(VerifyConstruction, SmallRunPasses) {
  VerifyOptions options;
  options.L_max = 5;
  options.r_max = 10;
  const auto report = verify_construction(PolynomialSpec::power(2), options);
  EXPECT_TRUE(report.passed()) << report.text();
  // residual, power sum, then per beta: bond, coefficient, 4 L values for 2 op sets.
  EXPECT_EQ(report.checks.size(), 2u + 2u * (2u + 8u));
}

TEST(VerifyConstruction, Deterministic) {
  VerifyOptions options;
  options.L_max = 4;
  options.r_max = 5;
  const auto p = PolynomialSpec::from_alphas({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(verify_construction(p, options).text(), verify_construction(p, options).text());
}

}  // namespace
}  // namespace polympo
