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

#ifndef POLYMPO_COMBINATORICS_HPP
#define POLYMPO_COMBINATORICS_HPP

#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "polympo/real.hpp"

namespace polympo {

/// C(n, r) exactly; zero when r < 0 or r > n. Throws for n < 0.
Integer binomial(long n, long r);

Integer factorial(long n);

/// Stirling number of the second kind from the alternating binomial sum
/// S(p,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^p.
Integer stirling2(int p, int k);

/// Same quantity from S(n,k) = k S(n-1,k) + S(n-1,k-1). Kept as an
/// independent route for cross-checking the explicit sum.
Integer stirling2_by_recurrence(int p, int k);

/// Unsigned Stirling number of the first kind [n p].
Integer stirling1_unsigned(int n, int p);

/// Eulerian number <n m> from the explicit alternating sum
/// sum_{j=0}^{m} (-1)^j C(n+1, j) (m+1-j)^n. Requires n >= 1, 0 <= m <= n-1.
Integer eulerian(int n, int m);

/// x (x-1) ... (x-n+1); the empty product for n = 0 is 1.
template <class T>
T falling_factorial(const T& x, int n) {
  T out(1);
  for (int i = 0; i < n; ++i) out *= (x - T(i));
  return out;
}

double falling_factorial(double x, int n);

/// Integer partition stored as part value -> multiplicity.
struct Partition {
  std::map<int, int> parts;

  /// Sum of value * multiplicity.
  int weight() const;
  /// Total number of pieces, sum of multiplicities.
  int piece_count() const;
  /// Number of distinct part values.
  int length() const { return static_cast<int>(parts.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Lazily enumerates the partitions of n into at most m pieces. Each
/// partition is produced exactly once; n = 0 produces the empty partition.
/// Order is reverse lexicographic on the non-increasing part sequence.
class PartitionStream {
 public:
  PartitionStream(int n, int max_pieces);

  std::optional<Partition> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) { advance(); }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    void advance() { current_ = stream_->next(); }
    PartitionStream* stream_ = nullptr;
    std::optional<Partition> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool step();

  int max_pieces_;
  bool started_ = false;
  bool exhausted_ = false;
  std::vector<int> sequence_;  // non-increasing parts of the current partition
};

PartitionStream partitions(int n, int max_pieces);

/// Materialized form of `partitions`.
std::vector<Partition> all_partitions(int n, int max_pieces);

/// Number of ordered length-m tuples of non-negative integers whose nonzero
/// entries form the multiset `p`: (m)_{pieces(p)} / prod_i m_i!.
/// Throws when p has more than m pieces.
Integer multiplicity_factor(int m, const Partition& p);

}  // namespace polympo

#endif  // POLYMPO_COMBINATORICS_HPP
