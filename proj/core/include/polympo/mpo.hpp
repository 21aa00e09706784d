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

#ifndef POLYMPO_MPO_HPP
#define POLYMPO_MPO_HPP

#include <span>
#include <vector>

#include "polympo/matrix.hpp"
#include "polympo/real.hpp"
#include "polympo/solver.hpp"

namespace polympo {

/// n x n matrix with ones on the first subdiagonal.
Matrix<Integer> shift_matrix(int n);

/// Lower-triangular Toeplitz matrix L_k(a) = sum_{i=0}^{k} a_i Z^i, a_0 = 1.
struct ToeplitzL {
  int k = 0;
  Matrix<Real> dense;  // (k+1) x (k+1)
};

ToeplitzL build_toeplitz(const CoefficientVector& a);

enum class OpLabel { kZero, kIdentity, kX, kY };

/// '0', 'I', 'X' or 'Y'.
char label_symbol(OpLabel label);
OpLabel label_from_symbol(char symbol);

struct OpEntry {
  OpLabel op = OpLabel::kZero;
  Real weight = 0;

  bool is_zero() const { return op == OpLabel::kZero; }
};

/// Operator-valued matrix; entries are weighted symbolic operators.
using OperatorFactor = Matrix<OpEntry>;

/// Bulk tensor of the translationally invariant MPO,
///
///     | I                 0                 0 |
///     | Y 1/sqrt(k+1)     beta L_k(a) I     0 |
///     | 0                 beta s X 1^T/sqrt(k+1)   I |
///
/// with s the amplitude P(1). Open chains use the last row on the first site
/// and the first column on the last site.
class SymbolicMPO {
 public:
  SymbolicMPO(int k, Rational beta, OperatorFactor bulk);

  int k() const { return k_; }
  const Rational& beta() const { return beta_; }
  int bond_dim() const { return static_cast<int>(bulk_.rows()); }
  const OperatorFactor& bulk() const { return bulk_; }

  OperatorFactor left_boundary() const;   // 1 x D, last row of the bulk
  OperatorFactor right_boundary() const;  // D x 1, first column of the bulk

 private:
  int k_;
  Rational beta_;
  OperatorFactor bulk_;
};

/// Requires beta > 0.
SymbolicMPO build_mpo(const CoefficientVector& a, const Rational& beta = 1);

/// [left row, bulk x (L-2), right column] for an open chain of L >= 2 sites.
std::vector<OperatorFactor> boundary_vectors(const SymbolicMPO& mpo, int L);

/// Scalar multiplying the operator string labels[0] (x) ... (x) labels[L-1]
/// in the ordered product of `factors`. Labels are treated as independent
/// symbols, so this is exact for any local dimension.
Real label_coefficient(std::span<const OperatorFactor> factors, std::span<const OpLabel> labels);

/// Coefficient of X_i Y_j (identity elsewhere) on an open chain of L sites,
/// 1-based sites with i < j.
Real pair_coefficient(const SymbolicMPO& mpo, int L, int i, int j);

}  // namespace polympo

#endif  // POLYMPO_MPO_HPP
