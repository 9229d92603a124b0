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

#include "permgrid/grid.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace permgrid {
namespace {

Permutation P(const char* s) { return Permutation::Parse(s); }

GridSpec Load(const std::string& name) {
  return GridSpec::Load(std::string(PERMGRID_DATA_DIR) + "/" + name);
}

const char* kSpecs[] = {"grid_4312_3142.txt", "grid_4231_3124.txt",
                        "grid_fig3.txt", "grid_4213_3142.txt"};

TEST(GridSpecTest, ParseLettersAndSigns) {
  const GridSpec g = Load("grid_4312_3142.txt");
  EXPECT_EQ(g.cols(), 3);
  EXPECT_EQ(g.rows(), 2);
  EXPECT_EQ(g.alphabet(), "abcd");
  EXPECT_EQ(g.cell_of('a'), std::make_pair(0, 0));
  EXPECT_EQ(g.cell_of('b'), std::make_pair(1, 1));
  EXPECT_EQ(g.cell_of('c'), std::make_pair(2, 0));
  EXPECT_EQ(g.cell_of('d'), std::make_pair(2, 1));
  EXPECT_EQ(g.cell(2, 0), -1);
  EXPECT_EQ(g.col_sign(0), -1);
  EXPECT_EQ(g.row_sign(0), -1);
  EXPECT_EQ(g.row_sign(1), 1);
  EXPECT_FALSE(g.letter_at(0, 1).has_value());
  EXPECT_THROW(g.cell_of('z'), GridError);
}

TEST(GridSpecTest, RoundTrip) {
  for (const char* name : kSpecs) {
    const GridSpec g = Load(name);
    EXPECT_EQ(GridSpec::Parse(g.ToString()), g) << name;
  }
}

TEST(GridSpecTest, RejectsNonPartialMultiplicationMatrices) {
  EXPECT_THROW(GridSpec::FromRowsTopDown({{1, 1}, {1, -1}}), GridError);
  EXPECT_THROW(GridSpec::Parse("cols: + +\nrows: +\n1 -1\n"), GridError);
  EXPECT_THROW(GridSpec::Parse("1 2\n"), GridError);
  EXPECT_NO_THROW(GridSpec::FromRowsTopDown({{0, 1, 1}, {1, 0, -1}}));
}

TEST(ForestTest, Examples) {
  EXPECT_TRUE(row_column_graph_is_forest(Load("grid_4312_3142.txt")));
  EXPECT_TRUE(row_column_graph_is_forest(Load("grid_4231_3124.txt")));
  EXPECT_FALSE(row_column_graph_is_forest(Load("grid_fig3.txt")));
  EXPECT_TRUE(row_column_graph_is_forest(GridSpec::FromRowsTopDown({{0, 0}, {0, 0}})));
}

TEST(DecodeTest, Examples) {
  EXPECT_EQ(decode_word(Load("grid_4312_3142.txt"), "acadcdb"), P("2473516"));
  EXPECT_TRUE(decode_word(Load("grid_4312_3142.txt"), "").empty());
  EXPECT_EQ(decode_word(Load("grid_4231_3124.txt"), "dcb"), P("312"));
  EXPECT_EQ(decode_word(Load("grid_4213_3142.txt"), "babaab").size(), 6);
  EXPECT_EQ(decode_word(Load("grid_4213_3142.txt"), "bababa"), P("246135"));
}

TEST(DecodeTest, PositionsLocateEachLetter) {
  const GridSpec g = Load("grid_4312_3142.txt");
  const std::string w = "acadcdb";
  const Permutation p = decode_word(g, w);
  const std::vector<int> pos = decode_positions(g, w);
  std::set<int> seen(pos.begin(), pos.end());
  EXPECT_EQ(seen.size(), w.size());
  // Letters in the same cell appear in reading order.
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] != w[j]) continue;
      const auto [k, l] = g.cell_of(w[i]);
      const bool right = g.col_sign(k) > 0;
      const bool up = g.row_sign(l) > 0;
      EXPECT_EQ(pos[i] < pos[j], right);
      EXPECT_EQ(p[pos[i]] < p[pos[j]], up);
    }
  }
}

TEST(DecodeTest, IndependentOfDistances) {
  std::mt19937 rng(5);
  for (const char* name : kSpecs) {
    const GridSpec g = Load(name);
    std::uniform_int_distribution<int> letter(0, g.alphabet().size() - 1);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
      std::string w;
      for (int i = len(rng); i > 0; --i) w += g.alphabet()[letter(rng)];
      std::set<std::int64_t> picks;
      std::uniform_int_distribution<std::int64_t> d(1, 999'999);
      while (picks.size() < w.size()) picks.insert(d(rng));
      std::vector<std::int64_t> dist(picks.begin(), picks.end());
      ASSERT_EQ(decode_word(g, w, dist, 1'000'000), decode_word(g, w)) << w;
    }
  }
}

TEST(DecodeTest, IndependentCellsCommute) {
  std::mt19937 rng(9);
  for (const char* name : kSpecs) {
    const GridSpec g = Load(name);
    std::uniform_int_distribution<int> letter(0, g.alphabet().size() - 1);
    std::uniform_int_distribution<int> len(2, 9);
    int swaps = 0;
    for (int trial = 0; trial < 500; ++trial) {
      std::string w;
      for (int i = len(rng); i > 0; --i) w += g.alphabet()[letter(rng)];
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const auto [k1, l1] = g.cell_of(w[i]);
        const auto [k2, l2] = g.cell_of(w[i + 1]);
        if (k1 == k2 || l1 == l2) continue;
        std::string v = w;
        std::swap(v[i], v[i + 1]);
        ASSERT_EQ(decode_word(g, v), decode_word(g, w)) << w << " " << v;
        ++swaps;
      }
    }
    if (std::string(name) != "grid_4213_3142.txt") EXPECT_GT(swaps, 0) << name;
  }
}

TEST(GriddingTest, FourCycleMatrix) {
  const GridSpec g = Load("grid_fig3.txt");
  const Permutation p = P("286435179");
  EXPECT_TRUE(is_m_gridding(p, Gridding{{1, 6, 10}, {1, 3, 10}}, g));
  EXPECT_FALSE(is_m_gridding(p, Gridding{{1, 10, 10}, {1, 3, 10}}, g));
  EXPECT_FALSE(all_griddings(p, g).empty());
  EXPECT_TRUE(is_m_gridding(Permutation(), Gridding{{1, 1, 1}, {1, 1, 1}}, g));
  EXPECT_FALSE(all_griddings(P("2413"), g).empty());
}

TEST(MembershipTest, FourCycleMatrix) {
  const GridSpec g = Load("grid_fig3.txt");
  EXPECT_TRUE(grid_member(P("2413"), g));
  EXPECT_TRUE(grid_member(P("286435179"), g));
  EXPECT_TRUE(grid_member(P("1"), g));
  EXPECT_FALSE(geom_member(P("2413"), g));
  EXPECT_TRUE(geom_member(P("17645328"), g));
  EXPECT_THROW(geom_member(P("2,8,6,4,3,5,1,7,9,10"), g), GridError);
}

TEST(MembershipTest, GeomInsideGridAndEqualForForests) {
  for (const char* name : kSpecs) {
    const GridSpec g = Load(name);
    const bool forest = row_column_graph_is_forest(g);
    for (int n = 1; n <= 6; ++n) {
      const auto geom = geom_members(g, n);
      const auto grid = grid_members(g, n);
      std::vector<Permutation> by_oracle;
      for_each_permutation(n, [&](const Permutation& p) {
        if (geom_member(p, g)) by_oracle.push_back(p);
      });
      ASSERT_EQ(geom, by_oracle) << name << " " << n;
      ASSERT_TRUE(std::includes(grid.begin(), grid.end(), geom.begin(), geom.end()))
          << name;
      if (forest) ASSERT_EQ(geom, grid) << name << " " << n;
    }
  }
  // The 4-cycle matrix separates the two classes already at length 4.
  const GridSpec fig3 = Load("grid_fig3.txt");
  EXPECT_LT(geom_members(fig3, 4).size(), grid_members(fig3, 4).size());
}

TEST(MembershipTest, DecodedWordsAreGeometricMembers) {
  std::mt19937 rng(3);
  for (const char* name : kSpecs) {
    const GridSpec g = Load(name);
    std::uniform_int_distribution<int> letter(0, g.alphabet().size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::string w;
      for (int i = 0; i < 7; ++i) w += g.alphabet()[letter(rng)];
      const Permutation p = decode_word(g, w);
      ASSERT_TRUE(geom_member(p, g)) << w;
      ASSERT_TRUE(is_m_gridding(p, canonical_gridding(p, g), g)) << w;
    }
  }
}

TEST(CanonicalTest, UniqueMaximumForFirstGridClass) {
  const GridSpec g = Load("grid_4312_3142.txt");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : grid_members(g, n)) {
      const auto all = all_griddings(p, g);
      auto key = [](const Gridding& x) {
        std::vector<int> k(x.col_divs.begin() + 1, x.col_divs.end() - 1);
        k.insert(k.end(), x.row_divs.begin() + 1, x.row_divs.end() - 1);
        return k;
      };
      std::vector<int> best;
      int ties = 0;
      for (const auto& x : all) {
        const auto k = key(x);
        if (k > best) {
          best = k;
          ties = 1;
        } else if (k == best) {
          ++ties;
        }
      }
      ASSERT_EQ(ties, 1) << p.ToString();
      ASSERT_EQ(key(canonical_gridding(p, g)), best) << p.ToString();
    }
  }
}

TEST(CanonicalTest, SingleEntry) {
  const GridSpec g = Load("grid_4312_3142.txt");
  const Gridding c = canonical_gridding(P("1"), g);
  EXPECT_EQ(c.col_divs, (std::vector<int>{1, 2, 2, 2}));
  EXPECT_EQ(c.row_divs, (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(canonical_gridding(P("321"), Load("grid_4213_3142.txt")), GridError);
}

}  // namespace
}  // namespace permgrid
