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

#ifndef POLYMPO_POLYBASIS_HPP
#define POLYMPO_POLYBASIS_HPP

#include <vector>

#include "polympo/matrix.hpp"
#include "polympo/polynomial.hpp"
#include "polympo/real.hpp"

namespace polympo {

/// H_ij = C(i + j - 1, k) for 1-based i, j in [1, k]. Row i evaluates the
/// basis C(q + x, k), q = 0..k-1, at x = i.
Matrix<Integer> hankel_matrix(int k);

/// Closed-form inverse (-1)^(k+1-(i+j)) C(k+1, k+1-(i+j)). The product with
/// hankel_matrix(k) is checked against the identity before returning; a
/// mismatch throws std::logic_error.
Matrix<Integer> hankel_inverse(int k);

/// Coordinates of P in the basis {C(q + x, k)}, q = 0..k-1.
struct BasisWeights {
  int k = 0;
  std::vector<Rational> weights;  // W_{k0} .. W_{k,k-1}

  /// sum_q C(q + x, k) W_{kq} for integer x >= 0.
  Rational evaluate(long x) const;
};

BasisWeights basis_weights(const PolynomialSpec& poly);

}  // namespace polympo

#endif  // POLYMPO_POLYBASIS_HPP
