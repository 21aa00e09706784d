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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polympo/document.hpp"
#include "polympo/mpo.hpp"
#include "polympo/polynomial.hpp"
#include "polympo/solver.hpp"
#include "polympo/verify.hpp"

namespace polympo::cli {

namespace {

struct ProblemFlags {
  int k = 0;
  std::string poly;
  std::string beta = "1";
  int precision = kDefaultPrecisionBits;
};

void add_problem_flags(CLI::App& cmd, ProblemFlags& flags, bool k_required) {
  auto* k = cmd.add_option("k", flags.k, "Polynomial degree k (bond dimension k+3)")
                ->check(CLI::PositiveNumber);
  if (k_required) k->required();
  cmd.add_option("--poly", flags.poly,
                 "Comma-separated alpha_1,...,alpha_k of P(x) = sum alpha_i x^i "
                 "(rationals such as 1/2 or 0.25); default x^k");
  cmd.add_option("--precision", flags.precision, "Working precision in bits")
      ->default_val(kDefaultPrecisionBits)
      ->check(CLI::Range(kMinPrecisionBits, 1 << 16));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

PolynomialSpec make_polynomial(int k, const std::string& poly, const std::string& beta) {
  const Rational b = parse_rational(beta);
  if (b <= 0) throw CLI::ValidationError("--beta", "beta must be positive");
  if (poly.empty()) return PolynomialSpec::power(k, b);
  std::vector<Rational> alphas;
  for (const auto& s : split_commas(poly)) alphas.push_back(parse_rational(s));
  if (static_cast<int>(alphas.size()) != k) {
    throw CLI::ValidationError("--poly", "expected " + std::to_string(k) +
                                             " coefficients, got " +
                                             std::to_string(alphas.size()));
  }
  if (alphas.back() == 0) {
    throw CLI::ValidationError("--poly", "alpha_k must be nonzero (true degree k)");
  }
  return PolynomialSpec::from_alphas(std::move(alphas), b);
}

int cmd_solve(const ProblemFlags& flags, bool table_order, int digits, std::ostream& out) {
  const PolynomialSpec poly = make_polynomial(flags.k, flags.poly, flags.beta);
  const CoefficientVector a = solve_coefficients(poly, flags.precision);
  out << "k = " << a.k << '\n';
  out << "precision_bits = " << a.precision_bits << '\n';
  if (a.amplitude != 1) out << "amplitude = " << to_string(a.amplitude) << '\n';
  for (int i = 0; i < a.k; ++i) {
    const int index = table_order ? a.k - i : i + 1;
    out << "a_" << index << " = " << to_fixed(a.a(index), digits) << '\n';
  }
  for (int m = 1; m <= a.k; ++m) {
    out << "residual_" << m << " = " << to_decimal(a.residuals[m - 1], 3) << '\n';
  }
  return kSuccess;
}

int cmd_build(const ProblemFlags& flags, const std::string& out_path, std::ostream& out) {
  const PolynomialSpec poly = make_polynomial(flags.k, flags.poly, flags.beta);
  const CoefficientVector a = solve_coefficients(poly, flags.precision);
  const SymbolicMPO mpo = build_mpo(a, poly.beta());
  const MpoDocument doc = make_document(poly, a, mpo);
  if (out_path.empty()) {
    out << to_json(doc);
  } else {
    write_document(out_path, doc);
    out << "wrote " << out_path << " (k=" << doc.k << ", bond_dim=" << doc.bond_dim << ")\n";
  }
  return kSuccess;
}

struct VerifyFlags {
  ProblemFlags problem;
  bool all = false;
  int k_max = 6;
  int L_max = 6;
  int n_max = 0;
  int r_max = 60;
  int d = 2;
  std::uint64_t seed = 1;
  std::vector<std::string> betas;
  std::string json_path;
  std::string document_path;
};

VerificationReport verify_document(const VerifyFlags& flags) {
  const MpoDocument doc = read_document(flags.document_path);
  const SymbolicMPO mpo = to_mpo(doc);
  const PolynomialSpec poly = to_polynomial(doc);
  VerificationReport report;
  const std::string tag = "document";
  report.checks.push_back({"bond_dim", doc.k, tag, 0.0, 0.0, mpo.bond_dim() == doc.k + 3});
  if (flags.r_max > 0) {
    const CoefficientCheck cc = check_pair_coefficients(mpo, poly, flags.r_max);
    report.checks.push_back({"pair_coefficient", doc.k,
                             tag + ",rmax=" + std::to_string(flags.r_max) +
                                 ",worst_r=" + std::to_string(cc.worst_r),
                             static_cast<double>(cc.max_relative_error),
                             static_cast<double>(cc.tolerance), cc.passed()});
  }
  std::vector<std::pair<std::string, LocalOperatorPair>> op_sets{
      {"nilpotent", LocalOperatorPair::nilpotent()},
      {"random_d" + std::to_string(flags.d) + "_seed" + std::to_string(flags.seed),
       LocalOperatorPair::random_symmetric(flags.d, flags.seed)}};
  for (const auto& [name, ops] : op_sets) {
    long dim = ops.d;
    for (int L = 2; L <= flags.L_max; ++L) {
      dim *= ops.d;
      if (dim > kMaxDenseDimension) break;
      const DenseComparison cmp = compare_with_dense(mpo, ops, poly, L);
      report.checks.push_back({"dense_oracle", doc.k,
                               tag + ",ops=" + name + ",L=" + (L < 10 ? "0" : "") + std::to_string(L),
                               cmp.max_deviation, cmp.tolerance, cmp.passed()});
    }
  }
  report.sort();
  return report;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  VerificationReport report;
  if (!flags.document_path.empty()) {
    report = verify_document(flags);
  } else {
    VerifyOptions options;
    options.precision_bits = flags.problem.precision;
    options.n_max = flags.n_max;
    options.r_max = flags.r_max;
    options.L_max = flags.L_max;
    options.d = flags.d;
    options.seed = flags.seed;
    if (!flags.betas.empty()) {
      options.betas.clear();
      for (const auto& b : flags.betas) {
        const Rational beta = parse_rational(b);
        if (beta <= 0) throw CLI::ValidationError("--beta", "beta must be positive");
        options.betas.push_back(beta);
      }
    }

    std::vector<int> ks;
    if (flags.all) {
      for (int k = 1; k <= flags.k_max; ++k) ks.push_back(k);
    } else {
      ks.push_back(flags.problem.k);
    }
    for (int k : ks) {
      const PolynomialSpec poly = make_polynomial(k, flags.problem.poly, "1");
      VerificationReport part = verify_construction(poly, options);
      report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
    }
    report.sort();
  }

  out << report.text();
  const std::size_t failed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return !c.pass; }));
  out << "SUMMARY checks=" << report.checks.size() << " failed=" << failed << ' '
      << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (!flags.json_path.empty()) {
    std::ofstream json(flags.json_path, std::ios::binary | std::ios::trunc);
    if (!json) throw DocumentError("cannot open '" + flags.json_path + "' for writing");
    json << report.json();
  }
  return report.passed() ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "polympo: exact matrix product operators for polynomial-times-exponential "
      "pair interactions sum_{i<j} beta^(j-i) P(j-i) X_i Y_j.\n"
      "Defaults: beta = 1, precision = 256 bits, P(x) = x^k.\n"
      "Exit codes: 0 success, 1 verification failure or unsolvable system, 2 usage error."};
  app.name("polympo");
  app.require_subcommand(1);

  ProblemFlags solve_flags;
  bool table_order = false;
  int digits = 17;
  auto* solve = app.add_subcommand("solve", "Solve for the Toeplitz coefficients a_1..a_k");
  add_problem_flags(*solve, solve_flags, true);
  solve->add_option("--beta", solve_flags.beta, "Exponential decay factor (does not affect a)")
      ->default_val("1");
  solve->add_flag("--table-order", table_order,
                  "List a_k first and a_1 last (the column layout of published tables)");
  solve->add_option("--digits", digits, "Significant digits printed")
      ->default_val(17)
      ->check(CLI::Range(1, 10000));

  ProblemFlags build_flags;
  std::string out_path;
  auto* build = app.add_subcommand("build", "Build the MPO and write it as a JSON document");
  add_problem_flags(*build, build_flags, true);
  build->add_option("--beta", build_flags.beta, "Exponential decay factor")->default_val("1");
  build->add_option("--out", out_path, "Output path (stdout when omitted)");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check the construction against independent oracles");
  add_problem_flags(*verify, verify_flags.problem, false);
  verify->add_flag("--all", verify_flags.all, "Verify k = 1..kmax");
  verify->add_option("--kmax", verify_flags.k_max, "Largest k for --all")
      ->default_val(6)
      ->check(CLI::Range(1, 40));
  verify->add_option("--Lmax", verify_flags.L_max, "Largest chain length for the dense oracle")
      ->default_val(6)
      ->check(CLI::Range(2, 12));
  verify->add_option("--nmax", verify_flags.n_max, "Largest power n in the power-sum check (default 3k)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--rmax", verify_flags.r_max, "Largest separation in the coupling check")
      ->default_val(60)
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--d", verify_flags.d, "Local dimension of the random operator pair")
      ->default_val(2)
      ->check(CLI::Range(2, 64));
  verify->add_option("--seed", verify_flags.seed, "Seed of the random operator pair")->default_val(1);
  verify->add_option("--beta", verify_flags.betas, "Decay factors to test (default 1 and 0.5)");
  verify->add_option("--json", verify_flags.json_path, "Also write a machine-readable report");
  verify->add_option("--document", verify_flags.document_path,
                     "Verify a previously built MPO document instead of solving");

  std::vector<const char*> argv{"polympo"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags, table_order, digits, out);
    if (build->parsed()) return cmd_build(build_flags, out_path, out);
    if (verify->parsed()) {
      if (!verify_flags.all && verify_flags.problem.k == 0 && verify_flags.document_path.empty()) {
        err << "verify: give k, --all or --document\n";
        return kUsage;
      }
      return cmd_verify(verify_flags, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SolveError& e) {
    err << "unsolvable: " << e.what() << '\n';
    return kFailure;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace polympo::cli
