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

#ifndef POLYMPO_CONSTRAINTS_HPP
#define POLYMPO_CONSTRAINTS_HPP

#include <map>
#include <span>
#include <vector>

#include "polympo/polynomial.hpp"
#include "polympo/real.hpp"

namespace polympo {

/// weight * prod_p a_p^{e_p}, indices p are 1-based Toeplitz coefficient
/// indices (a_1 sits on the first subdiagonal).
struct PartitionMonomial {
  Integer weight;
  std::map<int, int> powers;

  int degree() const;
  int max_index() const;
  /// `a` holds a_1..a_k.
  Real evaluate(std::span<const Real> a) const;

  friend bool operator==(const PartitionMonomial&, const PartitionMonomial&) = default;
};

/// One order-m equation sum(lhs) = rhs of the triangular system for a.
struct EtaEquation {
  int m = 0;
  int k = 0;
  std::vector<PartitionMonomial> lhs;
  Rational rhs;

  Real evaluate_lhs(std::span<const Real> a) const;
};

/// (k+1)((n+1)^k - 1), the required value of sum_j (k+1-j) c_j^(n).
Integer xi_target(int n, int k);

/// Right-hand side for P(x) = x^k. The alternating binomial sum and the
/// Stirling closed form (k+1) m! S(k+1, m+1) are both evaluated; a mismatch
/// throws std::logic_error.
Integer eta_rhs_power(int m, int k);

/// (k+1) sum_{j=1}^{m} (-1)^(j+m) C(m,j) [P(j+1) - 1].
Rational eta_rhs_general(int m, const PolynomialSpec& poly);

/// Left-hand side of the order-m equation: (k+1-m) a_1^m plus, for each
/// excess q = 1..k-m and each partition p of q into at most m pieces,
/// (k+1-m-q) * multiplicity_factor(m, p) * a_1^(m - pieces) prod a_{s+1}^{m_s}.
std::vector<PartitionMonomial> build_eta_lhs(int m, int k);

/// Equations for m = 1..k (index m-1). The right-hand sides use the
/// polynomial exactly as given; callers wanting P(1) = 1 normalize first.
std::vector<EtaEquation> build_eta_system(const PolynomialSpec& poly);

/// Coefficients c_0..c_k of Z^j in L_k(a)^n from the logarithmic-derivative
/// recursion c_m = (1/m) sum_{j=1}^m [j(n+1) - m] a_j c_{m-j}.
std::vector<Real> c_coeffs(int n, int k, std::span<const Real> a);

/// Same coefficients from c^(n) = c^(n-1) * c^(1) as truncated power series.
std::vector<Real> c_coeffs_by_convolution(int n, int k, std::span<const Real> a);

}  // namespace polympo

#endif  // POLYMPO_CONSTRAINTS_HPP
