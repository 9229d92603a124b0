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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace permgrid {
namespace {

Permutation P(const char* s) { return Permutation::Parse(s); }

const char* kClasses[] = {"4213,3142", "4312,3142", "4231,3124"};

Permutation Delete(const Permutation& p, int i) {
  std::vector<int> rest;
  for (int j = 0; j < p.size(); ++j) {
    if (j != i) rest.push_back(p[j]);
  }
  return Permutation::Flatten(rest);
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ClassSpecTest, Parse) {
  const ClassSpec s = ClassSpec::Parse("4213, 3142");
  EXPECT_EQ(s.ToString(), "3142,4213");
  EXPECT_TRUE(s.IsAntichain());
  EXPECT_FALSE(ClassSpec::Parse("21,321").IsAntichain());
  EXPECT_THROW(ClassSpec::Parse(""), std::invalid_argument);
  EXPECT_THROW(ClassSpec::Parse("4213,31x2"), std::invalid_argument);
}

TEST(MembershipTest, Examples) {
  const ClassSpec s = ClassSpec::Parse("4213,3142");
  EXPECT_TRUE(membership(s, P("246135")));
  EXPECT_FALSE(membership(s, P("3142")));
  EXPECT_TRUE(membership(s, Permutation()));
}

TEST(EnumerateTest, KnownInitialTerms) {
  const std::vector<std::vector<std::uint64_t>> expected = {
      {1, 2, 6, 22, 89, 379, 1664},
      {1, 2, 6, 22, 88, 367, 1568},
      {1, 2, 6, 22, 88, 363, 1508}};
  for (int i = 0; i < 3; ++i) {
    const ClassCensus c = enumerate(ClassSpec::Parse(kClasses[i]), 7);
    const std::vector<std::uint64_t> all = c.counts();
    std::vector<std::uint64_t> got(all.begin() + 1, all.end());
    EXPECT_EQ(got, expected[i]) << kClasses[i];
  }
}

TEST(EnumerateTest, TrivialClasses) {
  const ClassCensus inc = enumerate(ClassSpec::Parse("21"), 6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(inc.at(n).count, 1u);
  // Av(123) and Av(132) are counted by Catalan numbers.
  for (const char* b : {"123", "132"}) {
    const ClassCensus c = enumerate(ClassSpec::Parse(b), 9);
    EXPECT_EQ(c.counts(),
              (std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}));
  }
}

TEST(EnumerateTest, MatchesFilteringAllPermutations) {
  for (const char* b : kClasses) {
    const ClassSpec spec = ClassSpec::Parse(b);
    const ClassCensus c = enumerate(spec, 7);
    for (int n = 0; n <= 7; ++n) {
      ASSERT_EQ(c.at(n).members, brute_force_members(spec, n)) << b << " " << n;
    }
  }
}

TEST(EnumerateTest, DownwardClosed) {
  for (const char* b : kClasses) {
    const ClassCensus c = enumerate(ClassSpec::Parse(b), 8);
    for (int n = 2; n <= 8; ++n) {
      const auto& below = c.at(n - 1).members;
      const std::set<Permutation> lower(below.begin(), below.end());
      for (const auto& p : c.at(n).members) {
        for (int i = 0; i < n; ++i) ASSERT_TRUE(lower.count(Delete(p, i)));
      }
    }
  }
}

TEST(EnumerateTest, StatisticsMatchMemberLists) {
  for (const char* b : kClasses) {
    const ClassCensus c = enumerate(ClassSpec::Parse(b), 8);
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t simple = 0, sum = 0, skew = 0;
      for (const auto& p : c.at(n).members) {
        simple += is_simple(p);
        sum += is_sum_decomposable(p);
        skew += is_skew_decomposable(p);
      }
      EXPECT_EQ(c.at(n).simple_count, simple);
      EXPECT_EQ(c.at(n).sumdec_count, sum);
      EXPECT_EQ(c.at(n).skewdec_count, skew);
    }
  }
}

TEST(EnumerateTest, MemberLimitDropsListsButKeepsCounts) {
  EnumerateOptions o;
  o.member_limit = 100;
  const ClassCensus c = enumerate(ClassSpec::Parse("4231,3124"), 7, o);
  EXPECT_TRUE(c.at(5).members_retained);
  EXPECT_FALSE(c.at(6).members_retained);
  EXPECT_TRUE(c.at(6).members.empty());
  EXPECT_EQ(c.at(7).count, 1508u);
  EXPECT_THROW(simples_of(c, 6), std::out_of_range);
}

TEST(SimplesTest, Av4213_3142) {
  const ClassCensus c = enumerate(ClassSpec::Parse("4213,3142"), 8);
  EXPECT_EQ(simples_of(c, 6), std::vector<Permutation>{P("246135")});
  EXPECT_TRUE(simples_of(c, 5).empty());
  EXPECT_TRUE(simples_of(c, 7).empty());
  EXPECT_EQ(simples_of(c, 8), std::vector<Permutation>{P("24681357")});
}

TEST(SimplesTest, Av4312_3142FollowsJacobsthal) {
  // J(n-3) for n = 4..8.
  const std::vector<std::uint64_t> jacobsthal = {1, 1, 3, 5, 11};
  const ClassCensus c = enumerate(ClassSpec::Parse("4312,3142"), 8);
  for (int n = 4; n <= 8; ++n) {
    EXPECT_EQ(simples_of(c, n).size(), jacobsthal[n - 4]) << n;
  }
}

TEST(SimplesTest, SimpleMembersContainLargeSimplePatterns) {
  for (const char* b : kClasses) {
    const ClassCensus c = enumerate(ClassSpec::Parse(b), 9);
    for (int n = 6; n <= 9; ++n) {
      for (const auto& p : simples_of(c, n)) {
        bool found = false;
        for (int i = 0; i < n && !found; ++i) {
          const Permutation q = Delete(p, i);
          if (is_simple(q)) found = true;
          for (int j = 0; j < n - 1 && !found; ++j) {
            if (is_simple(Delete(q, j))) found = true;
          }
        }
        ASSERT_TRUE(found) << b << " " << p.ToString();
        if (!is_parallel_alternation(p)) {
          bool one_less = false;
          for (int i = 0; i < n; ++i) one_less |= is_simple(Delete(p, i));
          ASSERT_TRUE(one_less) << b << " " << p.ToString();
        }
      }
    }
  }
}

TEST(DecomposableTest, Examples) {
  const ClassCensus c = enumerate(ClassSpec::Parse("4213,3142"), 4);
  EXPECT_EQ(decomposable_counts(c, 1), std::make_pair(std::uint64_t{0}, std::uint64_t{0}));
  // Length 2: 12 is sum-, 21 skew-decomposable.
  EXPECT_EQ(decomposable_counts(c, 2), std::make_pair(std::uint64_t{1}, std::uint64_t{1}));
}

TEST(CensusJsonTest, RoundTripAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "permgrid_census_test";
  std::filesystem::remove_all(dir);
  EnumerateOptions o;
  o.cache_dir = dir.string();
  const ClassSpec spec = ClassSpec::Parse("4312,3142");
  const ClassCensus cold = enumerate(spec, 7, o);
  const auto file = dir / "census_3142-4312_n7.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  const std::string first = ReadFile(file);
  const ClassCensus warm = enumerate(spec, 7, o);
  EXPECT_EQ(warm.counts(), cold.counts());
  EXPECT_EQ(warm.at(6).members, cold.at(6).members);
  EXPECT_EQ(warm.ToJson(), cold.ToJson());
  std::filesystem::remove(file);
  enumerate(spec, 7, o);
  EXPECT_EQ(ReadFile(file), first);
  const ClassCensus parsed = ClassCensus::FromJson(first);
  EXPECT_EQ(parsed.ToJson(), first);
  std::filesystem::remove_all(dir);
}

TEST(CensusJsonTest, RejectsOtherVersions) {
  EXPECT_THROW(ClassCensus::FromJson(R"({"version": 99, "basis": ["21"],
                                         "lengths": []})"),
               std::runtime_error);
}

}  // namespace
}  // namespace permgrid
