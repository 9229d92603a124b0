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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace permgrid {
namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int ParseSign(const std::string& tok) {
  if (tok == "+" || tok == "+1" || tok == "1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw GridError("bad sign '" + tok + "'");
}

}  // namespace

GridSpec::GridSpec(std::vector<std::vector<int>> cells,
                   std::vector<int> col_signs, std::vector<int> row_signs)
    : cells_(std::move(cells)),
      col_signs_(std::move(col_signs)),
      row_signs_(std::move(row_signs)) {
  const int t = static_cast<int>(cells_.size());
  if (t == 0) throw GridError("grid has no columns");
  const int u = static_cast<int>(cells_[0].size());
  if (u == 0) throw GridError("grid has no rows");
  if (static_cast<int>(col_signs_.size()) != t ||
      static_cast<int>(row_signs_.size()) != u) {
    throw GridError("sign count does not match matrix size");
  }
  for (int s : col_signs_) {
    if (s != 1 && s != -1) throw GridError("column sign must be +1 or -1");
  }
  for (int s : row_signs_) {
    if (s != 1 && s != -1) throw GridError("row sign must be +1 or -1");
  }
  for (int k = 0; k < t; ++k) {
    if (static_cast<int>(cells_[k].size()) != u) {
      throw GridError("ragged matrix");
    }
    for (int l = 0; l < u; ++l) {
      const int m = cells_[k][l];
      if (m != 0 && m != 1 && m != -1) throw GridError("entries must be 0, 1, -1");
      if (m != 0 && m != col_signs_[k] * row_signs_[l]) {
        throw GridError("signs violate the partial multiplication property at "
                        "column " + std::to_string(k + 1) + ", row " +
                        std::to_string(l + 1));
      }
      if (m != 0) {
        if (alphabet_.size() >= 26) throw GridError("too many nonzero cells");
        alphabet_ += static_cast<char>('a' + alphabet_.size());
      }
    }
  }
}

GridSpec GridSpec::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<std::vector<int>> cols;
  std::optional<std::vector<int>> rows;
  std::vector<std::vector<int>> matrix_rows;  // top row first
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = Tokens(raw);
    if (toks.empty()) continue;
    if (toks[0] == "cols:" || toks[0] == "rows:") {
      std::vector<int> signs;
      for (std::size_t i = 1; i < toks.size(); ++i) signs.push_back(ParseSign(toks[i]));
      (toks[0] == "cols:" ? cols : rows) = std::move(signs);
      continue;
    }
    std::vector<int> row;
    for (const auto& tok : toks) {
      if (tok == "0") {
        row.push_back(0);
      } else if (tok == "1" || tok == "+1") {
        row.push_back(1);
      } else if (tok == "-1") {
        row.push_back(-1);
      } else {
        throw GridError("bad matrix entry '" + tok + "'");
      }
    }
    matrix_rows.push_back(std::move(row));
  }
  if (matrix_rows.empty()) throw GridError("grid file has no matrix");
  const int u = static_cast<int>(matrix_rows.size());
  const int t = static_cast<int>(matrix_rows[0].size());
  std::vector<std::vector<int>> cells(t, std::vector<int>(u));
  for (int r = 0; r < u; ++r) {
    if (static_cast<int>(matrix_rows[r].size()) != t) throw GridError("ragged matrix");
    for (int k = 0; k < t; ++k) cells[k][u - 1 - r] = matrix_rows[r][k];
  }
  if (!cols || !rows) {
    if (cols || rows) throw GridError("give both cols: and rows: or neither");
    return FromRowsTopDown(matrix_rows);
  }
  std::vector<int> row_signs(rows->rbegin(), rows->rend());
  return GridSpec(std::move(cells), *cols, std::move(row_signs));
}

GridSpec GridSpec::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GridError("cannot open grid file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

std::string GridSpec::ToString() const {
  auto sign = [](int s) { return s > 0 ? "+" : "-"; };
  std::string out = "cols:";
  for (int s : col_signs_) out += std::string(" ") + sign(s);
  out += "\nrows:";
  for (int l = rows() - 1; l >= 0; --l) out += std::string(" ") + sign(row_signs_[l]);
  out += "\n";
  for (int l = rows() - 1; l >= 0; --l) {
    for (int k = 0; k < cols(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cells_[k][l]);
    }
    out += "\n";
  }
  return out;
}

GridSpec GridSpec::FromRowsTopDown(const std::vector<std::vector<int>>& rows) {
  const int u = static_cast<int>(rows.size());
  if (u == 0) throw GridError("empty matrix");
  const int t = static_cast<int>(rows[0].size());
  std::vector<std::vector<int>> cells(t, std::vector<int>(u));
  for (int r = 0; r < u; ++r) {
    if (static_cast<int>(rows[r].size()) != t) throw GridError("ragged matrix");
    for (int k = 0; k < t; ++k) cells[k][u - 1 - r] = rows[r][k];
  }
  // Propagate signs through the row-column graph; 0 marks unassigned.
  std::vector<int> f(t, 0);
  std::vector<int> g(u, 0);
  for (int k0 = 0; k0 < t; ++k0) {
    if (f[k0] != 0) continue;
    f[k0] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < t; ++k) {
        for (int l = 0; l < u; ++l) {
          if (cells[k][l] == 0) continue;
          if (f[k] != 0 && g[l] == 0) {
            g[l] = cells[k][l] * f[k];
            changed = true;
          } else if (g[l] != 0 && f[k] == 0) {
            f[k] = cells[k][l] * g[l];
            changed = true;
          }
        }
      }
    }
  }
  for (int& s : g) {
    if (s == 0) s = 1;
  }
  return GridSpec(std::move(cells), std::move(f), std::move(g));
}

std::pair<int, int> GridSpec::cell_of(char letter) const {
  auto pos = alphabet_.find(letter);
  if (pos == std::string::npos) {
    throw GridError(std::string("letter '") + letter + "' is not in the alphabet");
  }
  int index = 0;
  for (int k = 0; k < cols(); ++k) {
    for (int l = 0; l < rows(); ++l) {
      if (cells_[k][l] == 0) continue;
      if (index == static_cast<int>(pos)) return {k, l};
      ++index;
    }
  }
  throw GridError("letter lookup failed");
}

std::optional<char> GridSpec::letter_at(int k, int l) const {
  if (cells_[k][l] == 0) return std::nullopt;
  int index = 0;
  for (int kk = 0; kk < cols(); ++kk) {
    for (int ll = 0; ll < rows(); ++ll) {
      if (cells_[kk][ll] == 0) continue;
      if (kk == k && ll == l) return alphabet_[index];
      ++index;
    }
  }
  return std::nullopt;
}

bool row_column_graph_is_forest(const GridSpec& spec) {
  // Union-find over column vertices 0..t-1 and row vertices t..t+u-1.
  const int t = spec.cols();
  const int u = spec.rows();
  std::vector<int> parent(t + u);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int k = 0; k < t; ++k) {
    for (int l = 0; l < u; ++l) {
      if (spec.cell(k, l) == 0) continue;
      int a = find(k);
      int b = find(t + l);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

Permutation decode_word(const GridSpec& spec, std::string_view word,
                        std::span<const std::int64_t> distances,
                        std::int64_t scale) {
  const int n = static_cast<int>(word.size());
  if (static_cast<int>(distances.size()) != n) {
    throw GridError("decode_word: one distance per letter required");
  }
  for (int i = 0; i < n; ++i) {
    if (distances[i] <= 0 || distances[i] >= scale ||
        (i > 0 && distances[i] <= distances[i - 1])) {
      throw GridError("decode_word: distances must increase within (0, scale)");
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> points(n);
  for (int i = 0; i < n; ++i) {
    auto [k, l] = spec.cell_of(word[i]);
    const std::int64_t d = distances[i];
    const std::int64_t x = k * scale + (spec.col_sign(k) > 0 ? d : scale - d);
    const std::int64_t y = l * scale + (spec.row_sign(l) > 0 ? d : scale - d);
    points[i] = {x, y};
  }
  std::sort(points.begin(), points.end());
  std::vector<std::int64_t> wide(n);
  for (int i = 0; i < n; ++i) wide[i] = points[i].second;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return wide[a] < wide[b]; });
  std::vector<int> values(n);
  for (int r = 0; r < n; ++r) values[order[r]] = r + 1;
  return Permutation(std::move(values));
}

Permutation decode_word(const GridSpec& spec, std::string_view word) {
  const int n = static_cast<int>(word.size());
  std::vector<std::int64_t> d(n);
  std::iota(d.begin(), d.end(), 1);
  return decode_word(spec, word, d, n + 1);
}

std::vector<int> decode_positions(const GridSpec& spec, std::string_view word) {
  const int n = static_cast<int>(word.size());
  const std::int64_t scale = n + 1;
  std::vector<std::pair<std::int64_t, int>> xs(n);
  for (int i = 0; i < n; ++i) {
    const int k = spec.cell_of(word[i]).first;
    xs[i] = {k * scale + (spec.col_sign(k) > 0 ? i + 1 : scale - i - 1), i};
  }
  std::sort(xs.begin(), xs.end());
  std::vector<int> pos(n);
  for (int r = 0; r < n; ++r) pos[xs[r].second] = r;
  return pos;
}

namespace {

bool DivisionsWellFormed(const std::vector<int>& divs, int parts, int n) {
  if (static_cast<int>(divs.size()) != parts + 1) return false;
  if (divs.front() != 1 || divs.back() != n + 1) return false;
  return std::is_sorted(divs.begin(), divs.end());
}

// Calls visit(divs) for every 1 = d_1 <= ... <= d_{parts+1} = n + 1.
template <typename Visit>
void ForEachDivision(int parts, int n, Visit&& visit) {
  std::vector<int> divs(parts + 1, 1);
  divs.back() = n + 1;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == parts) {
      visit(divs);
      return;
    }
    for (int v = divs[i - 1]; v <= n + 1; ++v) {
      divs[i] = v;
      self(self, i + 1);
    }
  };
  if (parts == 1) {
    visit(divs);
  } else {
    rec(rec, 1);
  }
}

}  // namespace

bool is_m_gridding(const Permutation& p, const Gridding& g,
                   const GridSpec& spec) {
  const int n = p.size();
  if (!DivisionsWellFormed(g.col_divs, spec.cols(), n) ||
      !DivisionsWellFormed(g.row_divs, spec.rows(), n)) {
    return false;
  }
  const int t = spec.cols();
  const int u = spec.rows();
  std::vector<int> last(t * u, 0);  // last value seen in each cell
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    while (i >= g.col_divs[k + 1]) ++k;
    const int v = p[i - 1];
    int l = 0;
    while (v >= g.row_divs[l + 1]) ++l;
    const int m = spec.cell(k, l);
    if (m == 0) return false;
    int& prev = last[k * u + l];
    if (prev != 0 && ((m > 0) != (v > prev))) return false;
    prev = v;
  }
  return true;
}

std::vector<Gridding> all_griddings(const Permutation& p,
                                    const GridSpec& spec) {
  std::vector<Gridding> out;
  const int n = p.size();
  ForEachDivision(spec.cols(), n, [&](const std::vector<int>& cd) {
    ForEachDivision(spec.rows(), n, [&](const std::vector<int>& rd) {
      Gridding g{cd, rd};
      if (is_m_gridding(p, g, spec)) out.push_back(std::move(g));
    });
  });
  return out;
}

bool grid_member(const Permutation& p, const GridSpec& spec) {
  const int n = p.size();
  bool found = false;
  ForEachDivision(spec.cols(), n, [&](const std::vector<int>& cd) {
    if (found) return;
    ForEachDivision(spec.rows(), n, [&](const std::vector<int>& rd) {
      if (!found && is_m_gridding(p, Gridding{cd, rd}, spec)) found = true;
    });
  });
  return found;
}

namespace {

template <typename Visit>
void ForEachWord(const std::string& alphabet, int n, Visit&& visit) {
  std::string word(n, alphabet.empty() ? 'a' : alphabet[0]);
  std::vector<int> digit(n, 0);
  const int k = static_cast<int>(alphabet.size());
  if (k == 0) {
    if (n == 0) visit(std::string());
    return;
  }
  while (true) {
    if (!visit(word)) return;
    int i = n - 1;
    while (i >= 0 && digit[i] == k - 1) {
      digit[i] = 0;
      word[i] = alphabet[0];
      --i;
    }
    if (i < 0) return;
    ++digit[i];
    word[i] = alphabet[digit[i]];
  }
}

}  // namespace

bool geom_member(const Permutation& p, const GridSpec& spec, int bound) {
  if (p.size() > bound) {
    throw GridError("geom_member: length " + std::to_string(p.size()) +
                    " exceeds oracle bound " + std::to_string(bound));
  }
  bool found = false;
  ForEachWord(spec.alphabet(), p.size(), [&](const std::string& w) {
    if (decode_word(spec, w) == p) found = true;
    return !found;
  });
  return found;
}

std::vector<Permutation> geom_members(const GridSpec& spec, int n, int bound) {
  if (n > bound) {
    throw GridError("geom_members: length " + std::to_string(n) +
                    " exceeds oracle bound " + std::to_string(bound));
  }
  std::set<Permutation> seen;
  ForEachWord(spec.alphabet(), n, [&](const std::string& w) {
    seen.insert(decode_word(spec, w));
    return true;
  });
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> grid_members(const GridSpec& spec, int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (grid_member(p, spec)) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Gridding canonical_gridding(const Permutation& p, const GridSpec& spec) {
  auto all = all_griddings(p, spec);
  if (all.empty()) throw GridError("canonical_gridding: not a member");
  auto key = [](const Gridding& g) {
    std::vector<int> k(g.col_divs.begin() + 1, g.col_divs.end() - 1);
    k.insert(k.end(), g.row_divs.begin() + 1, g.row_divs.end() - 1);
    return k;
  };
  return *std::max_element(all.begin(), all.end(),
                           [&](const Gridding& a, const Gridding& b) {
                             return key(a) < key(b);
                           });
}

}  // namespace permgrid
