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

#include "permgrid/class_enum.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permgrid {

ClassSpec ClassSpec::Parse(std::string_view text) {
  ClassSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      Permutation p = Permutation::Parse(token);
      if (p.empty()) throw std::invalid_argument("empty basis element");
      spec.basis.push_back(std::move(p));
    }
    start = comma + 1;
  }
  if (spec.basis.empty()) throw std::invalid_argument("empty basis");
  return spec;
}

std::vector<Permutation> ClassSpec::SortedBasis() const {
  std::vector<Permutation> out = basis;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ClassSpec::IsAntichain() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j && contains(basis[i], basis[j])) return false;
    }
  }
  return true;
}

std::string ClassSpec::ToString() const {
  std::string out;
  for (const auto& b : SortedBasis()) {
    if (!out.empty()) out += ',';
    out += b.ToString();
  }
  return out;
}

bool membership(const ClassSpec& spec, const Permutation& p) {
  return std::none_of(spec.basis.begin(), spec.basis.end(),
                      [&](const Permutation& b) { return contains(b, p); });
}

std::vector<Permutation> brute_force_members(const ClassSpec& spec, int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (membership(spec, p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ClassCensus::ClassCensus(ClassSpec spec, std::vector<LengthCensus> lengths)
    : spec_(std::move(spec)), lengths_(std::move(lengths)) {}

const LengthCensus& ClassCensus::at(int n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("census does not reach length " + std::to_string(n));
  }
  return lengths_[n];
}

std::vector<std::uint64_t> ClassCensus::counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& l : lengths_) out.push_back(l.count);
  return out;
}

std::string ClassCensus::ToJson(std::size_t json_member_limit) const {
  nlohmann::ordered_json j;
  j["version"] = kFormatVersion;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : spec_.SortedBasis()) j["basis"].push_back(b.ToString());
  j["n_max"] = n_max();
  j["lengths"] = nlohmann::ordered_json::array();
  for (const auto& l : lengths_) {
    nlohmann::ordered_json e;
    e["n"] = l.n;
    e["count"] = l.count;
    e["simple_count"] = l.simple_count;
    e["sumdec_count"] = l.sumdec_count;
    e["skewdec_count"] = l.skewdec_count;
    if (l.members_retained && l.members.size() <= json_member_limit) {
      e["members"] = nlohmann::ordered_json::array();
      for (const auto& m : l.members) e["members"].push_back(m.ToString());
    }
    j["lengths"].push_back(std::move(e));
  }
  return j.dump(1) + "\n";
}

ClassCensus ClassCensus::FromJson(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("version").get<int>() != kFormatVersion) {
    throw std::runtime_error("census format version mismatch");
  }
  ClassSpec spec;
  for (const auto& b : j.at("basis")) {
    spec.basis.push_back(Permutation::Parse(b.get<std::string>()));
  }
  std::vector<LengthCensus> lengths;
  for (const auto& e : j.at("lengths")) {
    LengthCensus l;
    l.n = e.at("n").get<int>();
    l.count = e.at("count").get<std::uint64_t>();
    l.simple_count = e.at("simple_count").get<std::uint64_t>();
    l.sumdec_count = e.at("sumdec_count").get<std::uint64_t>();
    l.skewdec_count = e.at("skewdec_count").get<std::uint64_t>();
    l.members_retained = e.contains("members");
    if (l.members_retained) {
      for (const auto& m : e.at("members")) {
        l.members.push_back(Permutation::Parse(m.get<std::string>()));
      }
    }
    lengths.push_back(std::move(l));
  }
  return ClassCensus(std::move(spec), std::move(lengths));
}

namespace {

struct BasisEntry {
  Permutation pattern;
  int max_index;
};

class Enumerator {
 public:
  Enumerator(const ClassSpec& spec, int n_max, std::size_t member_limit)
      : n_max_(n_max), member_limit_(member_limit), lengths_(n_max + 1) {
    for (const auto& b : spec.SortedBasis()) {
      int max_index = static_cast<int>(
          std::max_element(b.entries().begin(), b.entries().end()) -
          b.entries().begin());
      basis_.push_back({b, max_index});
    }
    for (int n = 0; n <= n_max; ++n) lengths_[n].n = n;
  }

  std::vector<LengthCensus> Run() {
    std::vector<int> empty;
    Record(empty);
    if (n_max_ > 0) Extend(empty);
    for (auto& l : lengths_) {
      if (l.members_retained) std::sort(l.members.begin(), l.members.end());
    }
    return std::move(lengths_);
  }

 private:
  // Only occurrences using the new maximum need checking: the parent
  // already avoids every basis element.
  bool Admissible(const std::vector<int>& child, int position) const {
    for (const auto& b : basis_) {
      if (b.pattern.size() > static_cast<int>(child.size())) continue;
      if (contains_at(b.pattern, b.max_index, child, position)) return false;
    }
    return true;
  }

  void Record(const std::vector<int>& e) {
    LengthCensus& l = lengths_[e.size()];
    ++l.count;
    if (!e.empty()) {
      if (is_simple(std::span<const int>(e))) ++l.simple_count;
      if (is_sum_decomposable(std::span<const int>(e))) ++l.sumdec_count;
      if (is_skew_decomposable(std::span<const int>(e))) ++l.skewdec_count;
    }
    if (l.members_retained) {
      if (l.members.size() >= member_limit_) {
        l.members_retained = false;
        l.members.clear();
        l.members.shrink_to_fit();
      } else {
        l.members.emplace_back(e);
      }
    }
  }

  void Extend(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size()) + 1;
    std::vector<int> child(n);
    for (int pos = 0; pos < n; ++pos) {
      std::copy(parent.begin(), parent.begin() + pos, child.begin());
      child[pos] = n;
      std::copy(parent.begin() + pos, parent.end(), child.begin() + pos + 1);
      if (!Admissible(child, pos)) continue;
      Record(child);
      if (n < n_max_) Extend(child);
    }
  }

  int n_max_;
  std::size_t member_limit_;
  std::vector<BasisEntry> basis_;
  std::vector<LengthCensus> lengths_;
};

std::string CachePath(const ClassSpec& spec, int n_max,
                      const EnumerateOptions& options) {
  std::string key = spec.ToString();
  std::replace(key.begin(), key.end(), ',', '-');
  std::replace(key.begin(), key.end(), ' ', '_');
  return (std::filesystem::path(options.cache_dir) /
          ("census_" + key + "_n" + std::to_string(n_max) + ".json"))
      .string();
}

}  // namespace

ClassCensus enumerate(const ClassSpec& spec, int n_max,
                      const EnumerateOptions& options) {
  if (n_max < 0) throw std::invalid_argument("enumerate: negative n_max");
  if (spec.basis.empty()) throw std::invalid_argument("enumerate: empty basis");
  std::string cache_path;
  if (!options.cache_dir.empty()) {
    cache_path = CachePath(spec, n_max, options);
    std::ifstream in(cache_path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        ClassCensus cached = ClassCensus::FromJson(ss.str());
        if (cached.n_max() == n_max &&
            cached.spec().SortedBasis() == spec.SortedBasis()) {
          return cached;
        }
      } catch (const std::exception&) {
        // Stale or unreadable cache; recompute below.
      }
    }
  }
  Enumerator e(spec, n_max, options.member_limit);
  ClassCensus census(spec, e.Run());
  if (!cache_path.empty()) {
    std::filesystem::create_directories(options.cache_dir);
    std::ofstream out(cache_path);
    out << census.ToJson(options.json_member_limit);
  }
  return census;
}

std::vector<Permutation> simples_of(const ClassCensus& census, int n) {
  const LengthCensus& l = census.at(n);
  if (!l.members_retained) {
    throw std::out_of_range("members of length " + std::to_string(n) +
                            " were not retained");
  }
  std::vector<Permutation> out;
  for (const auto& p : l.members) {
    if (is_simple(p)) out.push_back(p);
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> decomposable_counts(
    const ClassCensus& census, int n) {
  const LengthCensus& l = census.at(n);
  return {l.sumdec_count, l.skewdec_count};
}

}  // namespace permgrid
