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

// Word languages over a cell alphabet described by forbidden factors,
// prefixes, suffixes and whole words, compiled to minimal DFAs and counted by
// the transfer-matrix method.

#ifndef PERMGRID_AUTOMATA_H_
#define PERMGRID_AUTOMATA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/poly.h"

namespace permgrid {

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One position of a pattern: a set of letters, matched once, zero or more
// times (*), or one or more times (+).
struct PatternElement {
  enum class Repeat { kOnce, kStar, kPlus };
  std::uint32_t letters = 0;  // bitmask over the alphabet
  Repeat repeat = Repeat::kOnce;
};

struct Rule {
  enum class Anchor { kFactor, kPrefix, kSuffix, kWord };
  Anchor anchor = Anchor::kFactor;
  std::vector<PatternElement> pattern;
  std::string text;  // the pattern as written
};

// Letters are single characters. The accepted language is every word that
// matches none of the forbidden rules, has length >= min_length and, if
// start_letters is set, begins with one of them.
struct RuleSet {
  std::string alphabet;
  std::vector<Rule> forbidden;
  int min_length = 0;
  std::optional<std::uint32_t> start_letters;

  // Line format: "alphabet: a,b,c,d", "factor: {b,d}+ a", "prefix: a* d",
  // "suffix: a {c,d}*", "word: d c b", "minlen: 4", "startset: a,c".
  // '#' starts a comment. Throws RuleError on malformed input.
  static RuleSet Parse(std::string_view text);
  static RuleSet Load(const std::string& path);

  int letter_index(char c) const;
  std::uint32_t ParseLetterSet(std::string_view list) const;
};

class Dfa {
 public:
  Dfa(std::string alphabet, int start, std::vector<std::vector<int>> next,
      std::vector<bool> accepting);

  const std::string& alphabet() const { return alphabet_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  int size() const { return static_cast<int>(next_.size()); }
  int start() const { return start_; }
  int next(int state, int letter) const { return next_[state][letter]; }
  bool accepting(int state) const { return accepting_[state]; }

  bool Accepts(std::string_view word) const;

 private:
  std::string alphabet_;
  int start_;
  std::vector<std::vector<int>> next_;
  std::vector<bool> accepting_;
};

// Complete minimal DFA with states numbered in breadth-first order from the
// start state (letters in alphabet order).
Dfa minimize(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);

Dfa compile(const RuleSet& rules);

Integer count_words(const Dfa& d, int n);
// count_words for n = 0..n_max.
std::vector<Integer> count_sequence(const Dfa& d, int n_max);

// All accepted words of length n in lexicographic (alphabet) order. Throws
// std::length_error if there are more than `bound`.
std::vector<std::string> enumerate_words(const Dfa& d, int n,
                                         std::size_t bound = 5'000'000);

// Generating function by length, in the variable "x".
RationalFunction gf_univariate(const Dfa& d);
// One variable "x_<letter>" per letter.
RationalFunction gf_multivariate(const Dfa& d);

}  // namespace permgrid

#endif  // PERMGRID_AUTOMATA_H_
