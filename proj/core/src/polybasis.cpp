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

#include "polympo/polybasis.hpp"

#include <stdexcept>
#include <string>

#include "polympo/combinatorics.hpp"

namespace polympo {

namespace {

void require_degree(int k) {
  if (k < 1) throw std::invalid_argument("Hankel basis: k must be >= 1");
}

Matrix<Integer> closed_form_inverse(int k) {
  const auto n = static_cast<std::size_t>(k);
  Matrix<Integer> inv(n, n, 0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int r = k + 1 - (i + j);
      if (r < 0) continue;
      Integer entry = binomial(k + 1, r);
      if (r % 2 != 0) entry = -entry;
      inv(i - 1, j - 1) = entry;
    }
  }
  return inv;
}

}  // namespace

Matrix<Integer> hankel_matrix(int k) {
  require_degree(k);
  const auto n = static_cast<std::size_t>(k);
  Matrix<Integer> h(n, n, 0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) h(i - 1, j - 1) = binomial(i + j - 1, k);
  }
  return h;
}

Matrix<Integer> hankel_inverse(int k) {
  require_degree(k);
  Matrix<Integer> inv = closed_form_inverse(k);
  if (hankel_matrix(k) * inv != Matrix<Integer>::identity(static_cast<std::size_t>(k))) {
    throw std::logic_error("closed-form Hankel inverse failed identity check for k = " +
                           std::to_string(k));
  }
  return inv;
}

Rational BasisWeights::evaluate(long x) const {
  Rational out = 0;
  for (int q = 0; q < k; ++q) out += Rational(binomial(q + x, k)) * weights[q];
  return out;
}

BasisWeights basis_weights(const PolynomialSpec& poly) {
  const int k = poly.degree();
  const Matrix<Integer> inv = hankel_inverse(k);
  BasisWeights out;
  out.k = k;
  out.weights.assign(static_cast<std::size_t>(k), Rational(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      out.weights[i] += Rational(inv(i, j)) * poly(Rational(j + 1));
    }
  }
  return out;
}

}  // namespace polympo
