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

#include "polympo/mpo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polympo {

Matrix<Integer> shift_matrix(int n) {
  if (n < 1) throw std::invalid_argument("shift_matrix: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  Matrix<Integer> z(size, size, 0);
  for (std::size_t i = 1; i < size; ++i) z(i, i - 1) = 1;
  return z;
}

ToeplitzL build_toeplitz(const CoefficientVector& a) {
  if (static_cast<int>(a.values.size()) != a.k) {
    throw std::invalid_argument("coefficient vector length does not match k");
  }
  PrecisionScope scope(a.precision_bits);
  const auto n = static_cast<std::size_t>(a.k + 1);
  ToeplitzL out{a.k, Matrix<Real>(n, n, Real(0))};
  for (std::size_t i = 0; i < n; ++i) {
    out.dense(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) out.dense(i, j) = a.values[i - j - 1];
  }
  return out;
}

char label_symbol(OpLabel label) {
  switch (label) {
    case OpLabel::kZero: return '0';
    case OpLabel::kIdentity: return 'I';
    case OpLabel::kX: return 'X';
    case OpLabel::kY: return 'Y';
  }
  return '?';
}

OpLabel label_from_symbol(char symbol) {
  switch (symbol) {
    case '0': return OpLabel::kZero;
    case 'I': return OpLabel::kIdentity;
    case 'X': return OpLabel::kX;
    case 'Y': return OpLabel::kY;
    default: throw std::invalid_argument(std::string("unknown operator label '") + symbol + "'");
  }
}

SymbolicMPO::SymbolicMPO(int k, Rational beta, OperatorFactor bulk)
    : k_(k), beta_(std::move(beta)), bulk_(std::move(bulk)) {
  if (bulk_.rows() != bulk_.cols() || static_cast<int>(bulk_.rows()) != k_ + 3) {
    throw std::invalid_argument("bulk must be (k+3) x (k+3)");
  }
}

OperatorFactor SymbolicMPO::left_boundary() const {
  const std::size_t d = bulk_.rows();
  OperatorFactor row(1, d);
  for (std::size_t c = 0; c < d; ++c) row(0, c) = bulk_(d - 1, c);
  return row;
}

OperatorFactor SymbolicMPO::right_boundary() const {
  const std::size_t d = bulk_.rows();
  OperatorFactor col(d, 1);
  for (std::size_t r = 0; r < d; ++r) col(r, 0) = bulk_(r, 0);
  return col;
}

SymbolicMPO build_mpo(const CoefficientVector& a, const Rational& beta) {
  if (beta <= 0) throw std::invalid_argument("build_mpo: beta must be positive");
  const ToeplitzL toeplitz = build_toeplitz(a);

  PrecisionScope scope(a.precision_bits);
  const int k = a.k;
  const auto dim = static_cast<std::size_t>(k + 3);
  const auto last = dim - 1;
  const Real b = to_real(beta);
  const Real norm = sqrt(Real(k + 1));

  OperatorFactor bulk(dim, dim);
  bulk(0, 0) = {OpLabel::kIdentity, Real(1)};
  bulk(last, last) = {OpLabel::kIdentity, Real(1)};
  for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) {
    bulk(i + 1, 0) = {OpLabel::kY, Real(1) / norm};
    bulk(last, i + 1) = {OpLabel::kX, b * to_real(a.amplitude) / norm};
    for (std::size_t j = 0; j <= i; ++j) {
      bulk(i + 1, j + 1) = {OpLabel::kIdentity, b * toeplitz.dense(i, j)};
    }
  }
  return SymbolicMPO(k, beta, std::move(bulk));
}

std::vector<OperatorFactor> boundary_vectors(const SymbolicMPO& mpo, int L) {
  if (L < 2) throw std::invalid_argument("boundary_vectors: need at least 2 sites");
  std::vector<OperatorFactor> factors;
  factors.reserve(static_cast<std::size_t>(L));
  factors.push_back(mpo.left_boundary());
  for (int site = 1; site < L - 1; ++site) factors.push_back(mpo.bulk());
  factors.push_back(mpo.right_boundary());
  return factors;
}

Real label_coefficient(std::span<const OperatorFactor> factors, std::span<const OpLabel> labels) {
  if (factors.size() != labels.size() || factors.empty()) {
    throw std::invalid_argument("label_coefficient: one label per factor required");
  }
  int bits = kMinPrecisionBits;
  for (std::size_t c = 0; c < factors[0].cols(); ++c) {
    for (std::size_t r = 0; r < factors[0].rows(); ++r) {
      bits = std::max(bits, precision_bits_of(factors[0](r, c).weight));
    }
  }
  PrecisionScope scope(bits);

  // Row vector of scalars carried across the chain.
  std::vector<Real> carry{Real(1)};
  for (std::size_t s = 0; s < factors.size(); ++s) {
    const OperatorFactor& f = factors[s];
    if (f.rows() != carry.size()) {
      throw std::logic_error("bond dimension mismatch at site " + std::to_string(s + 1));
    }
    std::vector<Real> next(f.cols(), Real(0));
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (carry[r] == 0) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const OpEntry& e = f(r, c);
        if (e.op == labels[s]) next[c] += carry[r] * e.weight;
      }
    }
    carry = std::move(next);
  }
  if (carry.size() != 1) throw std::logic_error("open chain did not close to a scalar");
  return carry[0];
}

Real pair_coefficient(const SymbolicMPO& mpo, int L, int i, int j) {
  if (i < 1 || j > L || i >= j) {
    throw std::invalid_argument("pair_coefficient: need 1 <= i < j <= L");
  }
  const auto factors = boundary_vectors(mpo, L);
  std::vector<OpLabel> labels(static_cast<std::size_t>(L), OpLabel::kIdentity);
  labels[i - 1] = OpLabel::kX;
  labels[j - 1] = OpLabel::kY;
  return label_coefficient(factors, labels);
}

}  // namespace polympo
