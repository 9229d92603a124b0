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

// Brute-force enumeration of Av(B) by inserting a new maximum into each
// member of the previous length.

#ifndef PERMGRID_CLASS_ENUM_H_
#define PERMGRID_CLASS_ENUM_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permgrid/perm.h"

namespace permgrid {

struct ClassSpec {
  std::vector<Permutation> basis;

  // Comma-separated basis elements, e.g. "4213,3142". Each element uses the
  // Permutation text format (space-separated for lengths above 9).
  static ClassSpec Parse(std::string_view text);

  // Basis elements sorted by (length, entries).
  std::vector<Permutation> SortedBasis() const;
  // False if some basis element contains another.
  bool IsAntichain() const;
  std::string ToString() const;
};

bool membership(const ClassSpec& spec, const Permutation& p);

// All members of length n, found by filtering every permutation.
std::vector<Permutation> brute_force_members(const ClassSpec& spec, int n);

struct LengthCensus {
  int n = 0;
  std::uint64_t count = 0;
  std::uint64_t simple_count = 0;
  std::uint64_t sumdec_count = 0;
  std::uint64_t skewdec_count = 0;
  // False once the member list was dropped (memory threshold or cache).
  bool members_retained = true;
  std::vector<Permutation> members;  // lexicographic
};

struct EnumerateOptions {
  std::size_t member_limit = 2'000'000;
  // Directory for census caches; empty disables caching.
  std::string cache_dir;
  // Member lists longer than this are left out of the JSON form.
  std::size_t json_member_limit = 50'000;
};

class ClassCensus {
 public:
  static constexpr int kFormatVersion = 1;

  ClassCensus() = default;
  ClassCensus(ClassSpec spec, std::vector<LengthCensus> lengths);

  const ClassSpec& spec() const { return spec_; }
  int n_max() const { return static_cast<int>(lengths_.size()) - 1; }
  const LengthCensus& at(int n) const;
  std::vector<std::uint64_t> counts() const;

  std::string ToJson(std::size_t json_member_limit = 50'000) const;
  static ClassCensus FromJson(std::string_view text);

 private:
  ClassSpec spec_;
  std::vector<LengthCensus> lengths_;
};

ClassCensus enumerate(const ClassSpec& spec, int n_max,
                      const EnumerateOptions& options = {});

// Throws std::out_of_range if members of length n were not retained.
std::vector<Permutation> simples_of(const ClassCensus& census, int n);

// (sum-decomposable, skew-decomposable) member counts at length n.
std::pair<std::uint64_t, std::uint64_t> decomposable_counts(
    const ClassCensus& census, int n);

}  // namespace permgrid

#endif  // PERMGRID_CLASS_ENUM_H_
