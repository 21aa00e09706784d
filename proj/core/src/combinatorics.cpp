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

#include "polympo/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace polympo {

Integer binomial(long n, long r) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative n = " + std::to_string(n));
  }
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Integer out = 1;
  for (long i = 1; i <= r; ++i) {
    out *= (n - r + i);
    out /= i;
  }
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

namespace {

void require_non_negative(int value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
}

}  // namespace

Integer stirling2(int p, int k) {
  require_non_negative(p, "stirling2: p");
  require_non_negative(k, "stirling2: k");
  // The j = 0 term only matters for p = 0, where 0^0 = 1.
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binomial(k, j) * mp::pow(Integer(j), static_cast<unsigned>(p));
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const Integer kfact = factorial(k);
  if (sum % kfact != 0) {
    throw std::logic_error("stirling2: alternating sum not divisible by k!");
  }
  return sum / kfact;
}

Integer stirling2_by_recurrence(int p, int k) {
  require_non_negative(p, "stirling2: p");
  require_non_negative(k, "stirling2: k");
  if (k > p) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int n = 1; n <= p; ++n) {
    for (int j = std::min(n, k); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

Integer stirling1_unsigned(int n, int p) {
  require_non_negative(n, "stirling1: n");
  require_non_negative(p, "stirling1: p");
  if (p > n) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(p) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, p); j >= 1; --j) {
      row[j] = (i - 1) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[p];
}

Integer eulerian(int n, int m) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
  if (m < 0 || m > n - 1) {
    throw std::invalid_argument("eulerian: m = " + std::to_string(m) +
                                " outside [0, " + std::to_string(n - 1) + "]");
  }
  Integer sum = 0;
  for (int j = 0; j <= m; ++j) {
    Integer term =
        binomial(n + 1, j) * mp::pow(Integer(m + 1 - j), static_cast<unsigned>(n));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

double falling_factorial(double x, int n) { return falling_factorial<double>(x, n); }

int Partition::weight() const {
  int total = 0;
  for (const auto& [value, multiplicity] : parts) total += value * multiplicity;
  return total;
}

int Partition::piece_count() const {
  int total = 0;
  for (const auto& [value, multiplicity] : parts) total += multiplicity;
  return total;
}

PartitionStream::PartitionStream(int n, int max_pieces) : max_pieces_(max_pieces) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  if (max_pieces < 1) throw std::invalid_argument("partitions: m must be >= 1");
  if (n > 0) sequence_.push_back(n);
}

bool PartitionStream::step() {
  // Rightmost part larger than one.
  std::size_t i = sequence_.size();
  while (i > 0 && sequence_[i - 1] == 1) --i;
  if (i == 0) return false;
  --i;
  int remainder = static_cast<int>(sequence_.size() - i - 1) + 1;
  const int cap = --sequence_[i];
  sequence_.resize(i + 1);
  while (remainder > 0) {
    const int piece = std::min(cap, remainder);
    sequence_.push_back(piece);
    remainder -= piece;
  }
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!step()) {
    exhausted_ = true;
    return std::nullopt;
  }
  while (static_cast<int>(sequence_.size()) > max_pieces_) {
    if (!step()) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  Partition p;
  for (int part : sequence_) ++p.parts[part];
  if (sequence_.empty()) exhausted_ = true;  // n = 0: single empty partition
  return p;
}

PartitionStream partitions(int n, int max_pieces) { return PartitionStream(n, max_pieces); }

std::vector<Partition> all_partitions(int n, int max_pieces) {
  std::vector<Partition> out;
  for (const auto& p : partitions(n, max_pieces)) out.push_back(p);
  return out;
}

Integer multiplicity_factor(int m, const Partition& p) {
  const int pieces = p.piece_count();
  if (pieces > m) {
    throw std::invalid_argument("multiplicity_factor: partition has " +
                                std::to_string(pieces) + " pieces, more than m = " +
                                std::to_string(m));
  }
  const Integer numerator = falling_factorial<Integer>(Integer(m), pieces);
  Integer denominator = 1;
  for (const auto& [value, multiplicity] : p.parts) denominator *= factorial(multiplicity);
  if (numerator % denominator != 0) {
    throw std::logic_error("multiplicity_factor: non-integral arrangement count");
  }
  return numerator / denominator;
}

}  // namespace polympo
