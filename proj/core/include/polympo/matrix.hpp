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

#ifndef POLYMPO_MATRIX_HPP
#define POLYMPO_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polympo {

/// Small row-major dense matrix over an arbitrary ring (exact integers,
/// rationals, multiprecision reals, symbolic entries). Sized for bond
/// dimensions, not for lattice Hilbert spaces.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Sum of all entries, i.e. 1^T A 1.
  T sum() const {
    T total(0);
    for (const auto& v : data_) total += v;
    return total;
  }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
      throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    Matrix out(lhs.rows_, rhs.cols_, T(0));
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t l = 0; l < lhs.cols_; ++l) {
        const T& left = lhs(i, l);
        if (left == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out(i, j) += left * rhs(l, j);
        }
      }
    }
    return out;
  }

  friend Matrix operator-(Matrix lhs, const Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
      throw std::invalid_argument("matrix difference: shapes differ");
    }
    for (std::size_t i = 0; i < lhs.data_.size(); ++i) lhs.data_[i] -= rhs.data_[i];
    return lhs;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// A^n by repeated multiplication; A^0 is the identity.
template <class T>
Matrix<T> matrix_power(const Matrix<T>& a, int n) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power: not square");
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Matrix<T> out = Matrix<T>::identity(a.rows());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

}  // namespace polympo

#endif  // POLYMPO_MATRIX_HPP
