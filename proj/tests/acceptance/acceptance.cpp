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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "polympo/combinatorics.hpp"
#include "polympo/constraints.hpp"
#include "polympo/mpo.hpp"
#include "polympo/polybasis.hpp"
#include "polympo/solver.hpp"
#include "polympo/verify.hpp"

namespace {

using namespace polympo;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Published coefficient table, columns as printed (a_k first).
const std::map<int, std::vector<std::string>> kTable{
    {1, {"2.0000000000000000"}},
    {2, {"4.1010205144336442", "2.4494897427831779"}},
    {3, {"8.4748302749699516", "5.4358361515927998", "2.8844991406148166"}},
    {4, {"17.55558915612346", "11.719390564662234", "6.9222086786548589", "3.3097509196468731"}},
    {5, {"36.379219139956668", "24.929714047082978", "15.628482874669601", "8.5590769439779582",
         "3.7279192731913513"}},
    {6, {"75.3472962465863", "52.61301470336558", "34.27556525233372", "20.25723076990663",
         "10.345394101852634", "4.1406808334652885"}},
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Outcome table_reproduction() {
  PrecisionScope scope(kDefaultPrecisionBits);
  Outcome out;
  int compared = 0;
  for (const auto& [k, row] : kTable) {
    std::ostringstream os;
    std::ostringstream err;
    const int code = cli::run({"solve", std::to_string(k), "--table-order"}, os, err);
    if (code != cli::kSuccess) {
      out.pass = false;
      out.detail += " k=" + std::to_string(k) + ":exit" + std::to_string(code);
      continue;
    }
    std::vector<std::string> printed;
    std::istringstream lines(os.str());
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("a_", 0) == 0) printed.push_back(line.substr(line.find('=') + 2));
    }
    if (printed.size() != row.size()) {
      out.pass = false;
      out.detail += " k=" + std::to_string(k) + ":count";
      continue;
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string got = to_decimal(parse_real(printed[i]), 12);
      const std::string want = to_decimal(parse_real(row[i]), 12);
      ++compared;
      if (got != want) {
        out.pass = false;
        out.detail += " k=" + std::to_string(k) + ",col=" + std::to_string(i + 1) + ":" + got +
                      "!=" + want;
      }
    }
  }
  out.detail = "entries=" + std::to_string(compared) + " sig=12" + out.detail;
  return out;
}

Outcome constraint_residuals() {
  Outcome out;
  const Real tol("1e-60");
  Real worst = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto a = solve_coefficients(k, 256);
    PrecisionScope scope(256);
    for (int m = 1; m <= k; ++m) {
      Real lhs = 0;
      for (const auto& term : build_eta_lhs(m, k)) lhs += term.evaluate(a.values);
      const Real rhs = to_real(eta_rhs_power(m, k));
      worst = std::max<Real>(worst, abs(lhs - rhs) / rhs);
    }
  }
  out.pass = worst <= tol;
  out.detail = "max_rel=" + fmt(static_cast<double>(worst)) + " tol=1e-60";
  return out;
}

Outcome power_sums() {
  Outcome out;
  const Real tol("1e-20");
  Real worst = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto a = solve_coefficients(k, 256);
    PrecisionScope scope(256);
    const auto l = build_toeplitz(a).dense;
    Matrix<Real> power = Matrix<Real>::identity(l.rows());
    for (int n = 1; n <= 3 * k; ++n) {
      power = power * l;
      Integer target = k + 1;
      for (int e = 0; e < k; ++e) target *= n + 1;
      worst = std::max<Real>(worst, relative_error(power.sum(), to_real(target)));
    }
  }
  out.pass = worst <= tol;
  out.detail = "max_rel=" + fmt(static_cast<double>(worst)) + " tol=1e-20 n=1..3k";
  return out;
}

Outcome dense_grid(const std::vector<std::pair<PolynomialSpec, std::vector<Rational>>>& cases,
                   int r_max) {
  Outcome out;
  const std::vector<std::pair<std::string, LocalOperatorPair>> op_sets{
      {"nilpotent", LocalOperatorPair::nilpotent()},
      {"random", LocalOperatorPair::random_symmetric(2, 1)}};
  double worst_ratio = 0;
  int runs = 0;
  Real worst_coefficient = 0;
  for (const auto& [poly, betas] : cases) {
    const auto a = solve_coefficients(poly, 256);
    for (const Rational& beta : betas) {
      const auto mpo = build_mpo(a, beta);
      const auto decorated = poly.with_beta(beta);
      for (const auto& [name, ops] : op_sets) {
        for (int L = 2; L <= 8; ++L) {
          const auto cmp = compare_with_dense(mpo, ops, decorated, L);
          ++runs;
          worst_ratio = std::max(worst_ratio, cmp.max_deviation / cmp.tolerance);
          if (!cmp.passed()) {
            out.pass = false;
            out.detail += " fail:k=" + std::to_string(poly.degree()) + ",L=" + std::to_string(L) +
                          ",ops=" + name;
          }
        }
      }
      if (r_max > 0) {
        const auto cc = check_pair_coefficients(mpo, decorated, r_max, Real("1e-20"));
        worst_coefficient = std::max<Real>(worst_coefficient, cc.max_relative_error);
        if (!cc.passed()) {
          out.pass = false;
          out.detail += " coeff_fail:k=" + std::to_string(poly.degree()) + ",r=" +
                        std::to_string(cc.worst_r);
        }
      }
    }
  }
  std::string head = "runs=" + std::to_string(runs) + " max_dev/tol=" + fmt(worst_ratio);
  if (r_max > 0) head += " coeff_max_rel=" + fmt(static_cast<double>(worst_coefficient)) + " tol=1e-20";
  out.detail = head + out.detail;
  return out;
}

Outcome dense_oracle() {
  std::vector<std::pair<PolynomialSpec, std::vector<Rational>>> cases;
  for (int k = 1; k <= 4; ++k) cases.push_back({PolynomialSpec::power(k), {Rational(1), Rational(1, 2)}});
  return dense_grid(cases, 0);
}

Outcome bond_dimension() {
  Outcome out;
  for (int k = 1; k <= 10; ++k) {
    const auto mpo = build_mpo(solve_coefficients(k));
    const bool ok = mpo.bond_dim() == k + 3 && mpo.bulk().rows() == mpo.bulk().cols() &&
                    mpo.left_boundary().cols() == static_cast<std::size_t>(k + 3) &&
                    mpo.right_boundary().rows() == static_cast<std::size_t>(k + 3);
    if (!ok) {
      out.pass = false;
      out.detail += " k=" + std::to_string(k) + ":D=" + std::to_string(mpo.bond_dim());
    }
  }
  out.detail = "k=1..10 D=k+3" + out.detail;
  return out;
}

Outcome hankel_exactness() {
  Outcome out;
  for (int k = 1; k <= 12; ++k) {
    const auto h = hankel_matrix(k);
    Matrix<Integer> inv;
    try {
      inv = hankel_inverse(k);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail += " k=" + std::to_string(k) + ":" + e.what();
      continue;
    }
    if (h * inv != Matrix<Integer>::identity(h.rows())) {
      out.pass = false;
      out.detail += " k=" + std::to_string(k);
    }
  }
  out.detail = "k=1..12 exact" + out.detail;
  return out;
}

Outcome eulerian_recovery() {
  Outcome out;
  for (int k = 1; k <= 10; ++k) {
    const auto w = basis_weights(PolynomialSpec::power(k));
    for (int q = 0; q < k; ++q) {
      if (w.weights[q] != Rational(eulerian(k, q))) {
        out.pass = false;
        out.detail += " k=" + std::to_string(k) + ",q=" + std::to_string(q);
      }
    }
  }
  out.detail = "k=1..10 exact" + out.detail;
  return out;
}

Outcome general_polynomials() {
  const std::vector<Rational> betas{Rational(1), Rational(4, 5)};
  return dense_grid({{PolynomialSpec::from_alphas({Rational(1), Rational(0), Rational(1)}), betas},
                     {PolynomialSpec::from_alphas({Rational(0), Rational(2), Rational(0), Rational(1)}), betas}},
                    20);
}

Outcome eta_closed_form() {
  Outcome out;
  // Stirling numbers of the second kind from the triangle recurrence.
  std::vector<std::vector<Integer>> s(17, std::vector<Integer>(17, 0));
  s[0][0] = 1;
  for (int n = 1; n <= 16; ++n) {
    for (int j = 1; j <= n; ++j) s[n][j] = j * s[n - 1][j] + s[n - 1][j - 1];
  }
  int checked = 0;
  for (int k = 1; k <= 15; ++k) {
    for (int m = 1; m <= k; ++m) {
      const Integer closed = Integer((k + 1) * factorial(m) * s[k + 1][m + 1]);
      const Rational alternating = eta_rhs_general(m, PolynomialSpec::power(k));
      ++checked;
      if (alternating != Rational(closed) || eta_rhs_power(m, k) != closed) {
        out.pass = false;
        out.detail += " m=" + std::to_string(m) + ",k=" + std::to_string(k);
      }
    }
    if (eta_rhs_power(k, k) != factorial(k + 1)) {
      out.pass = false;
      out.detail += " top,k=" + std::to_string(k);
    }
  }
  out.detail = "pairs=" + std::to_string(checked) + " exact" + out.detail;
  return out;
}

Outcome c_coefficients() {
  Outcome out;
  const int bits = kDefaultPrecisionBits;
  PrecisionScope scope(bits);
  const Real eps = pow(Real(2), 1 - precision_bits_of(Real(1)));
  const Real tol = 10 * eps;
  Real worst = 0;
  for (int k = 1; k <= 8; ++k) {
    const auto a = solve_coefficients(k, bits);
    for (int n = 0; n <= 12; ++n) {
      const auto miller = c_coeffs(n, k, a.values);
      const auto conv = c_coeffs_by_convolution(n, k, a.values);
      const auto power = c_coeffs_by_matrix_power(n, a);
      for (int j = 0; j <= k; ++j) {
        worst = std::max<Real>(worst, relative_error(miller[j], power[j]));
        worst = std::max<Real>(worst, relative_error(conv[j], power[j]));
        worst = std::max<Real>(worst, relative_error(miller[j], conv[j]));
      }
    }
  }
  out.pass = worst <= tol;
  out.detail = "max_rel=" + fmt(static_cast<double>(worst)) + " tol=10eps=" + fmt(static_cast<double>(tol));
  return out;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 when no limit applies
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table_reproduction", table_reproduction, 1.0},
      {2, "constraint_residuals", constraint_residuals, 5.0},
      {3, "power_sum_identity", power_sums, 0.0},
      {4, "dense_oracle_equivalence", dense_oracle, 30.0},
      {5, "bond_dimension", bond_dimension, 0.0},
      {6, "hankel_exactness", hankel_exactness, 0.0},
      {7, "eulerian_recovery", eulerian_recovery, 0.0},
      {8, "general_polynomial_end_to_end", general_polynomials, 0.0},
      {9, "eta_closed_form", eta_closed_form, 0.0},
      {10, "c_coefficient_agreement", c_coefficients, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = outcome.pass;
    std::string timing = "time=" + fmt(seconds) + "s";
    if (c.time_limit_s > 0) {
      timing += " limit=" + fmt(c.time_limit_s) + "s";
      if (seconds >= c.time_limit_s) pass = false;
    }
    if (!pass) ++failed;
    std::printf("ACCEPT %02d %-30s %s %s %s\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL",
                outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("ACCEPT SUMMARY criteria=%zu failed=%d %s\n", criteria.size(), failed,
              failed == 0 ? "PASS" : "FAIL");
  return failed == 0 ? 0 : 1;
}
