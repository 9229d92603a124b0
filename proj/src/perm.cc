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

#include "permgrid/perm.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permgrid {
namespace {

void CheckIsPermutation(const std::vector<int>& entries) {
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    if (v < 1 || v > static_cast<int>(entries.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

// Backtracking matcher. `chosen[j]` holds the host position for pattern
// index j once assigned.
class Matcher {
 public:
  Matcher(std::span<const int> pattern, std::span<const int> host,
          int fixed_index, int fixed_position)
      : pattern_(pattern),
        host_(host),
        fixed_index_(fixed_index),
        fixed_position_(fixed_position) {
    if (pattern.size() > inline_.size()) {
      heap_.resize(pattern.size());
      chosen_ = heap_.data();
    } else {
      chosen_ = inline_.data();
    }
  }

  bool Run() { return Extend(0, 0); }

 private:
  bool Consistent(int j, int pos) const {
    for (int i = 0; i < j; ++i) {
      if ((pattern_[i] < pattern_[j]) != (host_[chosen_[i]] < host_[pos])) {
        return false;
      }
    }
    return true;
  }

  bool Extend(int j, int from) {
    const int k = static_cast<int>(pattern_.size());
    if (j == k) return true;
    const int n = static_cast<int>(host_.size());
    int lo = from;
    int hi = n - (k - j);  // leave room for the remaining indices
    if (fixed_index_ >= 0) {
      if (j == fixed_index_) {
        lo = std::max(lo, fixed_position_);
        hi = std::min(hi, fixed_position_);
      } else if (j < fixed_index_) {
        hi = std::min(hi, fixed_position_ - (fixed_index_ - j));
      } else {
        lo = std::max(lo, fixed_position_ + 1);
      }
    }
    for (int pos = lo; pos <= hi; ++pos) {
      if (!Consistent(j, pos)) continue;
      chosen_[j] = pos;
      if (Extend(j + 1, pos + 1)) return true;
    }
    return false;
  }

  std::span<const int> pattern_;
  std::span<const int> host_;
  int fixed_index_;
  int fixed_position_;
  std::array<int, 16> inline_;
  std::vector<int> heap_;
  int* chosen_;
};

}  // namespace

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  CheckIsPermutation(entries_);
}

Permutation Permutation::Parse(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "e")) {
    return Permutation();
  }
  std::vector<int> entries;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Compact digit form.
    for (char c : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      entries.push_back(c - '0');
    }
  } else {
    for (const auto& tok : tokens) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      if (used != tok.size()) {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      entries.push_back(v);
    }
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::Increasing(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::Decreasing(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::Flatten(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> e(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    e[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(e));
}

std::string Permutation::ToString() const {
  if (entries_.empty()) return "e";
  std::string out;
  const bool compact = entries_.size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation Permutation::Inverse() const {
  std::vector<int> e(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    e[entries_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(e));
}

Permutation Permutation::Reverse() const {
  return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

Permutation Permutation::Complement() const {
  std::vector<int> e(entries_);
  const int n = size();
  for (int& v : e) v = n + 1 - v;
  return Permutation(std::move(e));
}

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  return Matcher(pattern.entries(), host.entries(), -1, -1).Run();
}

bool contains_at(const Permutation& pattern, int pattern_index,
                 std::span<const int> host, int host_position) {
  if (pattern.size() > static_cast<int>(host.size())) return false;
  return Matcher(pattern.entries(), host, pattern_index, host_position).Run();
}

Permutation sub_pattern(const Permutation& host, int index_lo, int index_hi,
                        int value_lo, int value_hi) {
  std::vector<int> picked;
  for (int i = std::max(index_lo, 1); i <= std::min(index_hi, host.size());
       ++i) {
    const int v = host[i - 1];
    if (v >= value_lo && v <= value_hi) picked.push_back(v);
  }
  return Permutation::Flatten(picked);
}

std::vector<Interval> proper_intervals(const Permutation& p) {
  std::vector<Interval> out;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    int lo = p[a];
    int hi = p[a];
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, p[b]);
      hi = std::max(hi, p[b]);
      const int len = b - a + 1;
      if (len >= n) break;
      if (hi - lo == b - a) out.push_back({a + 1, b + 1, lo, hi});
    }
  }
  return out;
}

bool is_simple(std::span<const int> e) {
  const int n = static_cast<int>(e.size());
  if (n <= 2) return true;
  for (int a = 0; a < n; ++a) {
    int lo = e[a];
    int hi = e[a];
    const int last = (a == 0) ? n - 2 : n - 1;
    for (int b = a + 1; b <= last; ++b) {
      lo = std::min(lo, e[b]);
      hi = std::max(hi, e[b]);
      if (hi - lo == b - a) return false;
    }
  }
  return true;
}

bool is_simple(const Permutation& p) { return is_simple(p.entries()); }

Permutation inflate(const Permutation& skeleton,
                    std::span<const Permutation> blocks) {
  const int m = skeleton.size();
  if (static_cast<int>(blocks.size()) != m) {
    throw std::invalid_argument("inflate: block count does not match skeleton");
  }
  // base[v] = total size of blocks whose skeleton value is below v.
  std::vector<int> size_by_value(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    if (blocks[i].empty()) throw std::invalid_argument("inflate: empty block");
    size_by_value[skeleton[i]] = blocks[i].size();
  }
  std::vector<int> base(m + 2, 0);
  for (int v = 1; v <= m; ++v) base[v + 1] = base[v] + size_by_value[v];
  std::vector<int> out;
  out.reserve(base[m + 1]);
  for (int i = 0; i < m; ++i) {
    for (int v : blocks[i].entries()) out.push_back(base[skeleton[i]] + v);
  }
  return Permutation(std::move(out));
}

namespace {

// Length of the first sum (skew) component of e, or e.size() if none.
int FirstSumComponent(std::span<const int> e) {
  int hi = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    hi = std::max(hi, e[i]);
    if (hi == static_cast<int>(i) + 1) return static_cast<int>(i) + 1;
  }
  return static_cast<int>(e.size());
}

int FirstSkewComponent(std::span<const int> e) {
  const int n = static_cast<int>(e.size());
  int lo = n + 1;
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, e[i]);
    if (lo == n - i) return i + 1;
  }
  return n;
}

Permutation Slice(const Permutation& p, int first, int count) {
  std::vector<int> v(p.entries().begin() + first,
                     p.entries().begin() + first + count);
  return Permutation::Flatten(v);
}

}  // namespace

bool is_sum_decomposable(std::span<const int> e) {
  return !e.empty() && FirstSumComponent(e) < static_cast<int>(e.size());
}

bool is_skew_decomposable(std::span<const int> e) {
  return !e.empty() && FirstSkewComponent(e) < static_cast<int>(e.size());
}

bool is_sum_decomposable(const Permutation& p) {
  return is_sum_decomposable(p.entries());
}

bool is_skew_decomposable(const Permutation& p) {
  return is_skew_decomposable(p.entries());
}

Decomposition substitution_decompose(const Permutation& p) {
  const int n = p.size();
  if (n == 0) {
    throw std::invalid_argument("substitution_decompose: empty permutation");
  }
  if (n == 1) return {Permutation{1}, {p}};
  if (int k = FirstSumComponent(p.entries()); k < n) {
    return {Permutation{1, 2}, {Slice(p, 0, k), Slice(p, k, n - k)}};
  }
  if (int k = FirstSkewComponent(p.entries()); k < n) {
    return {Permutation{2, 1}, {Slice(p, 0, k), Slice(p, k, n - k)}};
  }
  // Neither a sum nor a skew sum: the maximal proper intervals are disjoint
  // and, with the uncovered singletons, partition the positions.
  const auto intervals = proper_intervals(p);
  std::vector<int> block_end(n);
  std::iota(block_end.begin(), block_end.end(), 0);
  for (const auto& iv : intervals) {
    for (int i = iv.first - 1; i < iv.last; ++i) {
      block_end[i] = std::max(block_end[i], iv.last - 1);
    }
  }
  Decomposition d;
  std::vector<int> representatives;
  for (int i = 0; i < n;) {
    // A block starts at i; its extent is the furthest interval end reachable
    // from i (maximal intervals do not overlap here).
    int end = block_end[i];
    d.blocks.push_back(Slice(p, i, end - i + 1));
    representatives.push_back(p[i]);
    i = end + 1;
  }
  d.skeleton = Permutation::Flatten(representatives);
  return d;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return inflate(Permutation{1, 2}, std::vector<Permutation>{a, b});
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return inflate(Permutation{2, 1}, std::vector<Permutation>{a, b});
}

Permutation parallel_alternation(int orientation, int m) {
  if (m < 2) throw std::invalid_argument("parallel_alternation: m < 2");
  std::vector<int> e;
  switch (orientation) {
    case 1:
      for (int i = 1; i <= m; ++i) e.push_back(2 * i);
      for (int i = 1; i <= m; ++i) e.push_back(2 * i - 1);
      break;
    case 2:
      for (int i = 1; i <= m; ++i) {
        e.push_back(m + i);
        e.push_back(i);
      }
      break;
    case 3:
      for (int i = m; i >= 1; --i) e.push_back(2 * i - 1);
      for (int i = m; i >= 1; --i) e.push_back(2 * i);
      break;
    case 4:
      for (int i = m; i >= 1; --i) {
        e.push_back(i);
        e.push_back(m + i);
      }
      break;
    default:
      throw std::invalid_argument("parallel_alternation: orientation 1..4");
  }
  return Permutation(std::move(e));
}

std::optional<int> is_parallel_alternation(const Permutation& p) {
  const int n = p.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (int o = 1; o <= 4; ++o) {
    if (parallel_alternation(o, n / 2) == p) return o;
  }
  return std::nullopt;
}

void for_each_permutation(
    int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    visit(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace permgrid
