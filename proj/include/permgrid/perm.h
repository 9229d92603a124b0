// Copyright 2026 The permgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMGRID_PERM_H_
#define PERMGRID_PERM_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permgrid {

// A permutation of {1..n} in one-line notation. The empty permutation is a
// valid value; operations that cannot accept it say so.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> entries);
  // Throws std::invalid_argument unless `entries` is a permutation of 1..n.
  explicit Permutation(std::vector<int> entries);

  // Accepts "2 4 7 3 5 1 6", "2,4,7,3,5,1,6" and, for n <= 9, "2473516".
  // The single token "e" or an empty string denotes the empty permutation.
  static Permutation Parse(std::string_view text);
  // The identity 12...n and its reverse n...21.
  static Permutation Increasing(int n);
  static Permutation Decreasing(int n);
  // Flattens distinct integers to the order-isomorphic permutation.
  static Permutation Flatten(std::span<const int> values);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // 0-based position, 1-based value.
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  // Compact digits for n <= 9, comma-separated otherwise, "e" when empty.
  std::string ToString() const;

  Permutation Inverse() const;
  Permutation Reverse() const;
  Permutation Complement() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// Contiguous 1-based index range [first, last] whose values are contiguous.
struct Interval {
  int first;
  int last;
  int min_value;
  int max_value;

  int length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// sigma[alpha_1, ..., alpha_m] with sigma simple.
struct Decomposition {
  Permutation skeleton;
  std::vector<Permutation> blocks;
};

// True iff some subsequence of `host` is order-isomorphic to `pattern`.
bool contains(const Permutation& pattern, const Permutation& host);

// Same as `contains`, restricted to occurrences that map pattern index
// `pattern_index` to host position `host_position` (both 0-based).
bool contains_at(const Permutation& pattern, int pattern_index,
                 std::span<const int> host, int host_position);

// pi(X x Y) for the 1-based inclusive windows X = [index_lo, index_hi] and
// Y = [value_lo, value_hi].
Permutation sub_pattern(const Permutation& host, int index_lo, int index_hi,
                        int value_lo, int value_hi);

// All intervals of length 2..n-1, ordered by (first, length).
std::vector<Interval> proper_intervals(const Permutation& p);

bool is_simple(const Permutation& p);
bool is_simple(std::span<const int> entries);

// Throws std::invalid_argument on a block count mismatch or an empty block.
Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> blocks);

// Requires p nonempty. For skeleton 12 (21) the first block is sum (skew)
// indecomposable.
Decomposition substitution_decompose(const Permutation& p);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

bool is_sum_decomposable(const Permutation& p);
bool is_skew_decomposable(const Permutation& p);
bool is_sum_decomposable(std::span<const int> entries);
bool is_skew_decomposable(std::span<const int> entries);

// The four simple parallel alternation shapes, numbered left to right as
// they are usually drawn:
//   1: 2 4 ... 2m 1 3 ... 2m-1
//   2: m+1 1 m+2 2 ... 2m m
//   3: 2m-1 ... 3 1 2m ... 4 2
//   4: m 2m m-1 2m-1 ... 1 m+1
// Returns the shape number if `p` is one of them (length >= 4).
std::optional<int> is_parallel_alternation(const Permutation& p);
Permutation parallel_alternation(int orientation, int m);

// Calls `visit` with every permutation of length n in lexicographic order.
void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& visit);

}  // namespace permgrid

template <>
struct std::hash<permgrid::Permutation> {
  std::size_t operator()(const permgrid::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.entries()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif  // PERMGRID_PERM_H_
