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

#include "permgrid/automata.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace permgrid {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

int RuleSet::letter_index(char c) const {
  auto pos = alphabet.find(c);
  if (pos == std::string::npos) {
    throw RuleError(std::string("letter '") + c + "' is not in the alphabet");
  }
  return static_cast<int>(pos);
}

std::uint32_t RuleSet::ParseLetterSet(std::string_view list) const {
  std::uint32_t mask = 0;
  for (char c : list) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    mask |= 1u << letter_index(c);
  }
  if (mask == 0) throw RuleError("empty letter set");
  return mask;
}

namespace {

std::vector<PatternElement> ParsePattern(const RuleSet& rs,
                                         std::string_view text) {
  std::vector<PatternElement> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    PatternElement el;
    if (c == '{') {
      auto close = text.find('}', i);
      if (close == std::string_view::npos) throw RuleError("unclosed '{'");
      el.letters = rs.ParseLetterSet(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      el.letters = 1u << rs.letter_index(c);
      ++i;
    } else {
      throw RuleError(std::string("unexpected '") + c + "' in pattern");
    }
    if (i < text.size() && (text[i] == '*' || text[i] == '+')) {
      el.repeat = text[i] == '*' ? PatternElement::Repeat::kStar
                                 : PatternElement::Repeat::kPlus;
      ++i;
    }
    out.push_back(el);
  }
  return out;
}

}  // namespace

RuleSet RuleSet::Parse(std::string_view text) {
  RuleSet rs;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_alphabet = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw RuleError("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    std::string key(Trim(line.substr(0, colon)));
    std::string_view value = Trim(line.substr(colon + 1));
    try {
      if (key == "alphabet") {
        for (char c : value) {
          if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
          if (!std::isalnum(static_cast<unsigned char>(c)) ||
              rs.alphabet.find(c) != std::string::npos) {
            throw RuleError("bad alphabet letter");
          }
          rs.alphabet += c;
        }
        if (rs.alphabet.empty() || rs.alphabet.size() > 32) {
          throw RuleError("alphabet must have 1..32 letters");
        }
        have_alphabet = true;
        continue;
      }
      if (!have_alphabet) throw RuleError("alphabet must come first");
      if (key == "minlen") {
        rs.min_length = std::stoi(std::string(value));
        if (rs.min_length < 0) throw RuleError("negative minlen");
      } else if (key == "startset") {
        rs.start_letters = rs.ParseLetterSet(value);
      } else {
        Rule r;
        if (key == "factor") {
          r.anchor = Rule::Anchor::kFactor;
        } else if (key == "prefix") {
          r.anchor = Rule::Anchor::kPrefix;
        } else if (key == "suffix") {
          r.anchor = Rule::Anchor::kSuffix;
        } else if (key == "word") {
          r.anchor = Rule::Anchor::kWord;
        } else {
          throw RuleError("unknown rule kind '" + key + "'");
        }
        r.pattern = ParsePattern(rs, value);
        if (r.pattern.empty()) throw RuleError("empty pattern");
        r.text = std::string(value);
        rs.forbidden.push_back(std::move(r));
      }
    } catch (const RuleError& e) {
      throw RuleError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::logic_error& e) {
      throw RuleError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_alphabet) throw RuleError("missing alphabet");
  return rs;
}

RuleSet RuleSet::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuleError("cannot open rule file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

Dfa::Dfa(std::string alphabet, int start, std::vector<std::vector<int>> next,
         std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      start_(start),
      next_(std::move(next)),
      accepting_(std::move(accepting)) {}

bool Dfa::Accepts(std::string_view word) const {
  int s = start_;
  for (char c : word) {
    auto pos = alphabet_.find(c);
    if (pos == std::string::npos) return false;
    s = next_[s][pos];
  }
  return accepting_[s];
}

namespace {

// Epsilon-NFA used only during compilation.
struct Nfa {
  struct Edge {
    int to;
    std::uint32_t letters;  // 0 marks an epsilon edge
  };
  std::vector<std::vector<Edge>> edges;
  std::vector<int> starts;
  std::vector<bool> final;

  int AddState() {
    edges.emplace_back();
    final.push_back(false);
    return static_cast<int>(edges.size()) - 1;
  }

  // Appends the pattern matcher; `full` is the all-letters mask.
  void AddRule(const Rule& rule, std::uint32_t full) {
    int cur = AddState();
    starts.push_back(cur);
    const bool loop_front = rule.anchor == Rule::Anchor::kFactor ||
                            rule.anchor == Rule::Anchor::kSuffix;
    const bool loop_back = rule.anchor == Rule::Anchor::kFactor ||
                           rule.anchor == Rule::Anchor::kPrefix;
    if (loop_front) edges[cur].push_back({cur, full});
    for (const auto& el : rule.pattern) {
      int nxt = AddState();
      switch (el.repeat) {
        case PatternElement::Repeat::kOnce:
          edges[cur].push_back({nxt, el.letters});
          break;
        case PatternElement::Repeat::kStar: {
          // A fresh loop state keeps earlier loops from absorbing this one.
          int loop = AddState();
          edges[cur].push_back({loop, 0});
          edges[loop].push_back({loop, el.letters});
          edges[loop].push_back({nxt, 0});
          break;
        }
        case PatternElement::Repeat::kPlus: {
          int loop = AddState();
          edges[cur].push_back({loop, el.letters});
          edges[loop].push_back({loop, el.letters});
          edges[loop].push_back({nxt, 0});
          break;
        }
      }
      cur = nxt;
    }
    final[cur] = true;
    if (loop_back) edges[cur].push_back({cur, full});
  }

  void Close(std::vector<int>& set) const {
    std::vector<bool> in(edges.size(), false);
    for (int s : set) in[s] = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (const auto& e : edges[set[i]]) {
        if (e.letters == 0 && !in[e.to]) {
          in[e.to] = true;
          set.push_back(e.to);
        }
      }
    }
    std::sort(set.begin(), set.end());
  }
};

// Subset construction; a subset accepts when it holds no final state, so the
// result recognises the complement of the union of the rules.
Dfa DeterminizeComplement(const Nfa& nfa, const std::string& alphabet) {
  const int k = static_cast<int>(alphabet.size());
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> next;
  std::vector<bool> accepting;
  auto intern = [&](std::vector<int> set) {
    nfa.Close(set);
    auto [it, inserted] = ids.try_emplace(set, static_cast<int>(subsets.size()));
    if (inserted) {
      bool acc = std::none_of(set.begin(), set.end(),
                              [&](int s) { return nfa.final[s]; });
      subsets.push_back(set);
      next.emplace_back(k, -1);
      accepting.push_back(acc);
    }
    return it->second;
  };
  intern(nfa.starts);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      std::vector<int> target;
      std::vector<bool> seen(nfa.edges.size(), false);
      for (int s : subsets[i]) {
        for (const auto& e : nfa.edges[s]) {
          if ((e.letters >> a) & 1u) {
            if (!seen[e.to]) {
              seen[e.to] = true;
              target.push_back(e.to);
            }
          }
        }
      }
      int id = intern(std::move(target));
      next[i][a] = id;
    }
  }
  return Dfa(alphabet, 0, std::move(next), std::move(accepting));
}

Dfa MinLengthDfa(const std::string& alphabet, int min_length) {
  const int k = static_cast<int>(alphabet.size());
  std::vector<std::vector<int>> next(min_length + 1, std::vector<int>(k));
  std::vector<bool> acc(min_length + 1, false);
  for (int s = 0; s <= min_length; ++s) {
    for (int a = 0; a < k; ++a) next[s][a] = std::min(s + 1, min_length);
  }
  acc[min_length] = true;
  return Dfa(alphabet, 0, std::move(next), std::move(acc));
}

Dfa StartSetDfa(const std::string& alphabet, std::uint32_t letters) {
  const int k = static_cast<int>(alphabet.size());
  // 0: start, 1: began well, 2: dead.
  std::vector<std::vector<int>> next(3, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    next[0][a] = ((letters >> a) & 1u) ? 1 : 2;
    next[1][a] = 1;
    next[2][a] = 2;
  }
  return Dfa(alphabet, 0, std::move(next), {false, true, false});
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) {
    throw std::invalid_argument("intersect: alphabets differ");
  }
  const int k = a.alphabet_size();
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> next;
  std::vector<bool> acc;
  auto intern = [&](int x, int y) {
    auto [it, inserted] = ids.try_emplace({x, y}, static_cast<int>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(x, y);
      next.emplace_back(k, -1);
      acc.push_back(a.accepting(x) && b.accepting(y));
    }
    return it->second;
  };
  intern(a.start(), b.start());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (int l = 0; l < k; ++l) {
      auto [x, y] = pairs[i];
      int id = intern(a.next(x, l), b.next(y, l));
      next[i][l] = id;
    }
  }
  return Dfa(a.alphabet(), 0, std::move(next), std::move(acc));
}

Dfa minimize(const Dfa& d) {
  const int k = d.alphabet_size();
  // Reachable states only.
  std::vector<int> order;
  std::vector<int> seen(d.size(), 0);
  order.push_back(d.start());
  seen[d.start()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      int t = d.next(order[i], a);
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  // Moore refinement.
  std::vector<int> block(d.size(), -1);
  for (int s : order) block[s] = d.accepting(s) ? 1 : 0;
  int num_blocks = 0;
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_block(d.size(), -1);
    for (int s : order) {
      std::vector<int> sig{block[s]};
      for (int a = 0; a < k; ++a) sig.push_back(block[d.next(s, a)]);
      auto [it, inserted] =
          sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      next_block[s] = it->second;
    }
    const int count = static_cast<int>(sig_ids.size());
    block = std::move(next_block);
    if (count == num_blocks) break;
    num_blocks = count;
  }
  // Renumber blocks breadth-first from the start block.
  std::vector<int> rep(num_blocks, -1);
  for (int s : order) {
    if (rep[block[s]] < 0) rep[block[s]] = s;
  }
  std::vector<int> new_id(num_blocks, -1);
  std::vector<int> queue{block[d.start()]};
  new_id[block[d.start()]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      int b = block[d.next(rep[queue[i]], a)];
      if (new_id[b] < 0) {
        new_id[b] = static_cast<int>(queue.size());
        queue.push_back(b);
      }
    }
  }
  std::vector<std::vector<int>> next(queue.size(), std::vector<int>(k));
  std::vector<bool> acc(queue.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int s = rep[queue[i]];
    acc[i] = d.accepting(s);
    for (int a = 0; a < k; ++a) next[i][a] = new_id[block[d.next(s, a)]];
  }
  return Dfa(d.alphabet(), 0, std::move(next), std::move(acc));
}

Dfa compile(const RuleSet& rules) {
  const std::uint32_t full =
      rules.alphabet.size() == 32 ? ~0u : ((1u << rules.alphabet.size()) - 1);
  Nfa nfa;
  for (const auto& r : rules.forbidden) nfa.AddRule(r, full);
  Dfa d = minimize(DeterminizeComplement(nfa, rules.alphabet));
  if (rules.min_length > 0) {
    d = minimize(intersect(d, MinLengthDfa(rules.alphabet, rules.min_length)));
  }
  if (rules.start_letters) {
    d = minimize(intersect(d, StartSetDfa(rules.alphabet, *rules.start_letters)));
  }
  return d;
}

std::vector<Integer> count_sequence(const Dfa& d, int n_max) {
  std::vector<Integer> out;
  std::vector<Integer> ways(d.size(), 0);
  ways[d.start()] = 1;
  for (int n = 0; n <= n_max; ++n) {
    Integer total = 0;
    for (int s = 0; s < d.size(); ++s) {
      if (d.accepting(s)) total += ways[s];
    }
    out.push_back(total);
    if (n == n_max) break;
    std::vector<Integer> next(d.size(), 0);
    for (int s = 0; s < d.size(); ++s) {
      if (ways[s] == 0) continue;
      for (int a = 0; a < d.alphabet_size(); ++a) next[d.next(s, a)] += ways[s];
    }
    ways = std::move(next);
  }
  return out;
}

Integer count_words(const Dfa& d, int n) { return count_sequence(d, n).back(); }

std::vector<std::string> enumerate_words(const Dfa& d, int n,
                                         std::size_t bound) {
  if (count_words(d, n) > bound) {
    throw std::length_error("enumerate_words: more than " +
                            std::to_string(bound) + " words");
  }
  // live[r][s]: some accepted word of length r starts from s.
  std::vector<std::vector<bool>> live(n + 1, std::vector<bool>(d.size()));
  for (int s = 0; s < d.size(); ++s) live[0][s] = d.accepting(s);
  for (int r = 1; r <= n; ++r) {
    for (int s = 0; s < d.size(); ++s) {
      for (int a = 0; a < d.alphabet_size() && !live[r][s]; ++a) {
        live[r][s] = live[r - 1][d.next(s, a)];
      }
    }
  }
  std::vector<std::string> out;
  std::string word;
  auto dfs = [&](auto&& self, int s) -> void {
    const int remaining = n - static_cast<int>(word.size());
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (int a = 0; a < d.alphabet_size(); ++a) {
      int t = d.next(s, a);
      if (!live[remaining - 1][t]) continue;
      word.push_back(d.alphabet()[a]);
      self(self, t);
      word.pop_back();
    }
  };
  if (live[n][d.start()]) dfs(dfs, d.start());
  return out;
}

namespace {

// Solves F_q = [q accepting] + sum_a weight(a) F_{next(q,a)} for F_start.
RationalFunction TransferMatrixGf(const Dfa& d,
                                  const std::vector<MPoly>& letter_weight,
                                  std::vector<std::string> names) {
  const int nv = static_cast<int>(names.size());
  const int k = d.alphabet_size();
  // Co-reachable states (can reach acceptance).
  std::vector<bool> coreach(d.size(), false);
  for (int s = 0; s < d.size(); ++s) coreach[s] = d.accepting(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < d.size(); ++s) {
      if (coreach[s]) continue;
      for (int a = 0; a < k; ++a) {
        if (coreach[d.next(s, a)]) {
          coreach[s] = changed = true;
          break;
        }
      }
    }
  }
  if (!coreach[d.start()]) {
    return RationalFunction(MPoly(nv), MPoly::Constant(nv, 1), std::move(names));
  }
  std::vector<int> index(d.size(), -1);
  std::vector<int> states;
  std::vector<int> queue{d.start()};
  index[d.start()] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    states.push_back(queue[i]);
    for (int a = 0; a < k; ++a) {
      int t = d.next(queue[i], a);
      if (coreach[t] && index[t] < 0) {
        index[t] = static_cast<int>(queue.size());
        queue.push_back(t);
      }
    }
  }
  const int m = static_cast<int>(states.size());
  std::vector<std::vector<MPoly>> sys(m, std::vector<MPoly>(m, MPoly(nv)));
  std::vector<MPoly> rhs(m, MPoly(nv));
  for (int i = 0; i < m; ++i) {
    sys[i][i] = MPoly::Constant(nv, 1);
    if (d.accepting(states[i])) rhs[i] = MPoly::Constant(nv, 1);
    for (int a = 0; a < k; ++a) {
      int t = d.next(states[i], a);
      if (index[t] >= 0) sys[i][index[t]] -= letter_weight[a];
    }
  }
  MPoly den = determinant(sys);
  for (int i = 0; i < m; ++i) sys[i][0] = rhs[i];
  MPoly num = determinant(std::move(sys));
  return RationalFunction(std::move(num), std::move(den), std::move(names));
}

}  // namespace

RationalFunction gf_univariate(const Dfa& d) {
  std::vector<MPoly> w(d.alphabet_size(), MPoly::Variable(1, 0));
  return TransferMatrixGf(d, w, {"x"});
}

RationalFunction gf_multivariate(const Dfa& d) {
  const int k = d.alphabet_size();
  if (k > MPoly::kMaxVars) {
    throw std::invalid_argument("gf_multivariate: alphabet too large");
  }
  std::vector<MPoly> w;
  std::vector<std::string> names;
  for (int a = 0; a < k; ++a) {
    w.push_back(MPoly::Variable(k, a));
    names.push_back(std::string("x_") + d.alphabet()[a]);
  }
  return TransferMatrixGf(d, w, std::move(names));
}

}  // namespace permgrid
