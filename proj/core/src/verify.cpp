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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polympo {

namespace {

Real two_to_minus(int exponent) { return pow(Real(2), -exponent); }

long checked_dimension(int d, int L) {
  if (L < 2) throw std::invalid_argument("dense oracle needs L >= 2");
  long dim = 1;
  for (int s = 0; s < L; ++s) {
    dim *= d;
    if (dim > kMaxDenseDimension) {
      throw std::invalid_argument("d^L = " + std::to_string(d) + "^" + std::to_string(L) +
                                  " exceeds the dense cap of " +
                                  std::to_string(kMaxDenseDimension));
    }
  }
  return dim;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXd identity(long n) { return Eigen::MatrixXd::Identity(n, n); }

long ipow(long base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

const Eigen::MatrixXd& concrete(OpLabel label, const LocalOperatorPair& ops,
                                const Eigen::MatrixXd& id) {
  switch (label) {
    case OpLabel::kX: return ops.X;
    case OpLabel::kY: return ops.Y;
    default: return id;
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

LocalOperatorPair LocalOperatorPair::nilpotent() {
  LocalOperatorPair ops;
  ops.d = 2;
  ops.X = Eigen::MatrixXd::Zero(2, 2);
  ops.Y = Eigen::MatrixXd::Zero(2, 2);
  ops.X(0, 1) = 1.0;
  ops.Y(1, 0) = 1.0;
  return ops;
}

LocalOperatorPair LocalOperatorPair::random_symmetric(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
  std::mt19937_64 engine(seed);
  // 53 random mantissa bits mapped to [-1, 1); distribution objects are not
  // reproducible across standard libraries, the raw engine is.
  auto uniform = [&engine] {
    return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
  };
  LocalOperatorPair ops;
  ops.d = d;
  ops.X = Eigen::MatrixXd::Zero(d, d);
  ops.Y = Eigen::MatrixXd::Zero(d, d);
  for (auto* m : {&ops.X, &ops.Y}) {
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        const double v = uniform();
        (*m)(i, j) = v;
        (*m)(j, i) = v;
      }
    }
  }
  return ops;
}

void LocalOperatorPair::validate() const {
  if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
  if (X.rows() != d || X.cols() != d || Y.rows() != d || Y.cols() != d) {
    throw std::invalid_argument("X and Y must be d x d");
  }
  if (X.isZero(0.0) && Y.isZero(0.0)) {
    throw std::invalid_argument("X and Y cannot both be zero");
  }
}

Real residual_tolerance(int precision_bits) { return two_to_minus(precision_bits - 12); }
Real power_sum_tolerance(int precision_bits) { return two_to_minus(precision_bits - 16); }
Real coefficient_tolerance(int precision_bits) { return two_to_minus(precision_bits - 24); }

bool PowerSumReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [this](const PowerSumEntry& e) { return e.relative_error <= tolerance; });
}

std::vector<int> PowerSumReport::failing_n() const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (e.relative_error > tolerance) out.push_back(e.n);
  }
  return out;
}

Real PowerSumReport::max_error() const {
  Real worst = 0;
  for (const auto& e : entries) worst = std::max(worst, e.relative_error);
  return worst;
}

PowerSumReport power_sum_check(const CoefficientVector& a, const PolynomialSpec& poly, int n_max,
                               std::optional<Real> tolerance) {
  if (poly.degree() != a.k) throw std::invalid_argument("polynomial degree differs from k");
  if (n_max < a.k) throw std::invalid_argument("power_sum_check: n_max must be >= k");
  PrecisionScope scope(a.precision_bits);
  const PolynomialSpec profile = poly.normalized();
  const Matrix<Real> l = build_toeplitz(a).dense;

  PowerSumReport report;
  report.tolerance = tolerance.value_or(power_sum_tolerance(a.precision_bits));
  Matrix<Real> power = Matrix<Real>::identity(l.rows());
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) power = power * l;
    PowerSumEntry entry;
    entry.n = n;
    entry.value = power.sum();
    entry.target = to_real(Rational(a.k + 1) * profile(Rational(n + 1)));
    entry.relative_error = relative_error(entry.value, entry.target);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Real> c_coeffs_by_matrix_power(int n, const CoefficientVector& a) {
  PrecisionScope scope(a.precision_bits);
  const Matrix<Real> power = matrix_power(build_toeplitz(a).dense, n);
  std::vector<Real> c;
  c.reserve(power.rows());
  for (std::size_t j = 0; j < power.rows(); ++j) c.push_back(power(j, 0));
  return c;
}

Eigen::MatrixXd dense_hamiltonian(const LocalOperatorPair& ops, const PolynomialSpec& poly, int L) {
  ops.validate();
  const long dim = checked_dimension(ops.d, L);
  const double beta = static_cast<double>(poly.beta());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 1; i <= L; ++i) {
    for (int j = i + 1; j <= L; ++j) {
      const int r = j - i;
      const double coupling = std::pow(beta, r) * poly.evaluate(static_cast<double>(r));
      if (coupling == 0.0) continue;
      Eigen::MatrixXd term = kron(identity(ipow(ops.d, i - 1)), ops.X);
      term = kron(term, identity(ipow(ops.d, r - 1)));
      term = kron(term, ops.Y);
      term = kron(term, identity(ipow(ops.d, L - j)));
      h += coupling * term;
    }
  }
  return h;
}

Eigen::MatrixXd contract_mpo(const SymbolicMPO& mpo, const LocalOperatorPair& ops, int L) {
  ops.validate();
  checked_dimension(ops.d, L);
  const auto factors = boundary_vectors(mpo, L);
  const Eigen::MatrixXd id = identity(ops.d);

  // state[c]: accumulated operator on sites 1..s attached to open bond c.
  const OperatorFactor& first = factors.front();
  std::vector<Eigen::MatrixXd> state(first.cols());
  for (std::size_t c = 0; c < first.cols(); ++c) {
    const OpEntry& e = first(0, c);
    state[c] = e.is_zero() ? Eigen::MatrixXd::Zero(ops.d, ops.d)
                           : Eigen::MatrixXd(static_cast<double>(e.weight) * concrete(e.op, ops, id));
  }
  long block = ops.d;
  for (std::size_t s = 1; s < factors.size(); ++s) {
    const OperatorFactor& f = factors[s];
    if (f.rows() != state.size()) {
      throw std::logic_error("bond dimension mismatch at site " + std::to_string(s + 1));
    }
    std::vector<Eigen::MatrixXd> next(f.cols(), Eigen::MatrixXd::Zero(block * ops.d, block * ops.d));
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (state[r].isZero(0.0)) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const OpEntry& e = f(r, c);
        if (e.is_zero()) continue;
        next[c] += static_cast<double>(e.weight) * kron(state[r], concrete(e.op, ops, id));
      }
    }
    state = std::move(next);
    block *= ops.d;
  }
  if (state.size() != 1) throw std::logic_error("open chain did not close");
  return state.front();
}

DenseComparison compare_with_dense(const SymbolicMPO& mpo, const LocalOperatorPair& ops,
                                   const PolynomialSpec& poly, int L) {
  const Eigen::MatrixXd reference = dense_hamiltonian(ops, poly, L);
  const Eigen::MatrixXd contracted = contract_mpo(mpo, ops, L);
  DenseComparison out;
  out.reference_max = reference.cwiseAbs().maxCoeff();
  out.max_deviation = (contracted - reference).cwiseAbs().maxCoeff();
  out.tolerance = 1e-9 * std::max(1.0, out.reference_max);
  return out;
}

CoefficientCheck check_pair_coefficients(const SymbolicMPO& mpo, const PolynomialSpec& poly,
                                         int r_max, std::optional<Real> tolerance) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  int bits = kMinPrecisionBits;
  for (std::size_t c = 0; c < mpo.bulk().cols(); ++c) {
    bits = std::max(bits, precision_bits_of(mpo.bulk()(mpo.bulk().rows() - 1, c).weight));
  }
  PrecisionScope scope(bits);
  CoefficientCheck out;
  out.tolerance = tolerance.value_or(coefficient_tolerance(bits));
  out.max_relative_error = 0;
  for (int r = 1; r <= r_max; ++r) {
    const Real extracted = pair_coefficient(mpo, r + 1, 1, r + 1);
    const Rational exact = pow_exact(mpo.beta(), static_cast<unsigned>(r)) * poly(Rational(r));
    const Real err = relative_error(extracted, to_real(exact));
    if (err > out.max_relative_error || out.worst_r == 0) {
      out.max_relative_error = err;
      out.worst_r = r;
    }
  }
  return out;
}

std::string CheckResult::line() const {
  std::ostringstream os;
  os << "CHECK " << name << " k=" << k << " param=" << param << " err=" << format_double(err)
     << " tol=" << format_double(tol) << ' ' << (pass ? "PASS" : "FAIL");
  return os.str();
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::sort() {
  std::sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.k, a.name, a.param) < std::tie(b.k, b.name, b.param);
  });
}

std::string VerificationReport::text() const {
  std::string out;
  for (const auto& c : checks) out += c.line() + '\n';
  return out;
}

std::string VerificationReport::json() const {
  nlohmann::ordered_json doc;
  doc["format_version"] = "1";
  doc["passed"] = passed();
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["k"] = c.k;
    entry["param"] = c.param;
    entry["err"] = format_double(c.err);
    entry["tol"] = format_double(c.tol);
    entry["status"] = c.pass ? "PASS" : "FAIL";
    list.push_back(std::move(entry));
  }
  return doc.dump(2) + '\n';
}

VerificationReport verify_construction(const PolynomialSpec& poly, const VerifyOptions& options) {
  const int k = poly.degree();
  const int bits = options.precision_bits;
  const std::string poly_tag = poly.is_pure_power() ? "x^" + std::to_string(k) : "poly";
  VerificationReport report;

  const CoefficientVector a = solve_coefficients(poly, bits);
  PrecisionScope scope(bits);

  {
    const Real tol = residual_tolerance(bits);
    const Real worst = a.max_residual();
    report.checks.push_back({"eta_residual", k, poly_tag + ",bits=" + std::to_string(bits),
                             static_cast<double>(worst), static_cast<double>(tol), worst <= tol});
  }
  {
    const int n_max = options.n_max > 0 ? options.n_max : 3 * k;
    const PowerSumReport ps = power_sum_check(a, poly, std::max(n_max, k));
    std::string param = poly_tag + ",nmax=" + std::to_string(std::max(n_max, k));
    if (!ps.passed()) {
      param += ",failing_n=";
      const auto failing = ps.failing_n();
      for (std::size_t i = 0; i < failing.size(); ++i) {
        param += (i ? ";" : "") + std::to_string(failing[i]);
      }
    }
    report.checks.push_back({"power_sum", k, param, static_cast<double>(ps.max_error()),
                             static_cast<double>(ps.tolerance), ps.passed()});
  }

  std::vector<Rational> betas = options.betas;
  if (betas.empty()) betas.push_back(poly.beta());

  std::vector<std::pair<std::string, LocalOperatorPair>> op_sets;
  op_sets.emplace_back("nilpotent", LocalOperatorPair::nilpotent());
  if (options.random_ops) {
    op_sets.emplace_back("random_d" + std::to_string(options.d) + "_seed" +
                             std::to_string(options.seed),
                         LocalOperatorPair::random_symmetric(options.d, options.seed));
  }

  for (const Rational& beta : betas) {
    const PolynomialSpec decorated = poly.with_beta(beta);
    const SymbolicMPO mpo = build_mpo(a, beta);
    const std::string beta_tag = "beta=" + to_decimal_string(beta);

    report.checks.push_back({"bond_dim", k, poly_tag + "," + beta_tag, 0.0, 0.0,
                             mpo.bond_dim() == k + 3});

    if (options.r_max > 0) {
      const CoefficientCheck cc = check_pair_coefficients(mpo, decorated, options.r_max);
      report.checks.push_back({"pair_coefficient", k,
                               poly_tag + "," + beta_tag + ",rmax=" + std::to_string(options.r_max) +
                                   ",worst_r=" + std::to_string(cc.worst_r),
                               static_cast<double>(cc.max_relative_error),
                               static_cast<double>(cc.tolerance), cc.passed()});
    }

    for (const auto& [ops_name, ops] : op_sets) {
      long dim = ops.d;
      for (int L = 2; L <= options.L_max; ++L) {
        dim *= ops.d;
        if (dim > kMaxDenseDimension) break;
        const DenseComparison cmp = compare_with_dense(mpo, ops, decorated, L);
        char lbuf[16];
        std::snprintf(lbuf, sizeof lbuf, "%02d", L);
        report.checks.push_back({"dense_oracle", k,
                                 poly_tag + "," + beta_tag + ",ops=" + ops_name + ",L=" + lbuf,
                                 cmp.max_deviation, cmp.tolerance, cmp.passed()});
      }
    }
  }
  report.sort();
  return report;
}

}  // namespace polympo
