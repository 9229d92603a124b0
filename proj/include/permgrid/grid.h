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

// Monotone and geometric grid classes of 0/+-1 matrices and the encoding of
// geometric grid classes by words over a cell alphabet.

#ifndef PERMGRID_GRID_H_
#define PERMGRID_GRID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permgrid/perm.h"

namespace permgrid {

class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A t x u matrix indexed Cartesian-style: cell(k, l) is column k (left to
// right) and row l (bottom to top), both 0-based here. Letters are assigned
// to nonzero cells column by column, bottom to top, starting at 'a'.
class GridSpec {
 public:
  // cells[k][l]; signs are +1 or -1. Throws GridError unless every nonzero
  // cell equals col_signs[k] * row_signs[l].
  GridSpec(std::vector<std::vector<int>> cells, std::vector<int> col_signs,
           std::vector<int> row_signs);

  // Text format:
  //   cols: - + +
  //   rows: + -        (top row first)
  //   0 1 1            (matrix rows, top row first)
  //   1 0 -1
  // '#' starts a comment.
  static GridSpec Parse(std::string_view text);
  static GridSpec Load(const std::string& path);
  // Inverse of Parse (without comments).
  std::string ToString() const;

  // Builds a spec from matrix rows given top row first, choosing signs
  // automatically; throws GridError if no signs exist.
  static GridSpec FromRowsTopDown(const std::vector<std::vector<int>>& rows);

  int cols() const { return static_cast<int>(cells_.size()); }
  int rows() const { return cells_.empty() ? 0 : static_cast<int>(cells_[0].size()); }
  int cell(int k, int l) const { return cells_[k][l]; }
  int col_sign(int k) const { return col_signs_[k]; }
  int row_sign(int l) const { return row_signs_[l]; }

  const std::string& alphabet() const { return alphabet_; }
  // (column, row) of a letter; throws GridError for unknown letters.
  std::pair<int, int> cell_of(char letter) const;
  std::optional<char> letter_at(int k, int l) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  std::vector<std::vector<int>> cells_;
  std::vector<int> col_signs_;
  std::vector<int> row_signs_;
  std::string alphabet_;
};

// Division sequences use the 1-based convention 1 = c_1 <= ... <= c_{t+1} =
// n + 1; column k (0-based) holds indices [col_divs[k], col_divs[k+1]).
struct Gridding {
  std::vector<int> col_divs;
  std::vector<int> row_divs;

  friend bool operator==(const Gridding&, const Gridding&) = default;
};

bool row_column_graph_is_forest(const GridSpec& spec);

// phi(w), with point i (1-based) placed at distance i / (n + 1) from its
// cell's base point.
Permutation decode_word(const GridSpec& spec, std::string_view word);
// Same with explicit distances d_i / scale; requires 0 < d_1 < ... < d_n <
// scale.
Permutation decode_word(const GridSpec& spec, std::string_view word,
                        std::span<const std::int64_t> distances,
                        std::int64_t scale);

// Position (0-based) in decode_word(spec, word) of the point of each letter.
std::vector<int> decode_positions(const GridSpec& spec, std::string_view word);

bool is_m_gridding(const Permutation& p, const Gridding& g,
                   const GridSpec& spec);
// Every compatible gridding, in lexicographic order of (col_divs, row_divs).
std::vector<Gridding> all_griddings(const Permutation& p, const GridSpec& spec);
bool grid_member(const Permutation& p, const GridSpec& spec);

// Exhaustive over all words of length |p|; throws GridError if |p| > bound.
bool geom_member(const Permutation& p, const GridSpec& spec, int bound = 9);
// Distinct images of all words of length n, sorted.
std::vector<Permutation> geom_members(const GridSpec& spec, int n,
                                      int bound = 9);
// Members of Grid(spec) of length n by gridding search over all n!
// permutations, sorted.
std::vector<Permutation> grid_members(const GridSpec& spec, int n);

// The gridding maximising (c_2, ..., c_t, r_2, ..., r_u) lexicographically.
// Throws GridError if p is not in Grid(spec).
Gridding canonical_gridding(const Permutation& p, const GridSpec& spec);

}  // namespace permgrid

#endif  // PERMGRID_GRID_H_
