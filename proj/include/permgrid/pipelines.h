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

// Generating-function assemblies for Av(4213,3142), Av(4312,3142) and
// Av(4231,3124), and verification suites that compare them with the
// brute-force oracles.

#ifndef PERMGRID_PIPELINES_H_
#define PERMGRID_PIPELINES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/automata.h"
#include "permgrid/class_enum.h"
#include "permgrid/grid.h"
#include "permgrid/perm.h"
#include "permgrid/series.h"

namespace permgrid {

struct Check {
  std::string name;
  int n = 0;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct PipelineReport {
  std::string suite;
  std::vector<std::string> anchors;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool ok() const;
  // First failing check, if any.
  const Check* first_failure() const;
  void Add(Check c) { checks.push_back(std::move(c)); }
  // Adds a check comparing two coefficient lists from index `from`; on
  // mismatch `n` is the first diverging index.
  void AddSeriesCheck(std::string name, const std::vector<std::string>& expected,
                      const std::vector<std::string>& got, int from = 1);
  void Merge(const PipelineReport& other);
  std::string ToJson() const;
};

// Known coefficients of x^1..x^14.
extern const std::vector<std::int64_t> kTerms4213_3142;
extern const std::vector<std::int64_t> kTerms4312_3142;
extern const std::vector<std::int64_t> kTerms4231_3124;

// Annihilating polynomials P(x, f) of the first two classes.
PolyInF annihilator_4213_3142();
PolyInF annihilator_4312_3142();

// Least positive root of the cubic factor in the Av(4231,3124) denominator.
ZPoly cubic_4231_3124();

// f = x + f^2/(1+f) + cf/(1+c) + xcf^2/(1-x-xf), by fixed-point iteration.
PowerSeries assemble_4213_3142(int order);

// Inflations of the simple permutations with a given multivariate s, in the
// form ((f - m)/f + c/f + c) s(f, m, m, c).
PowerSeries inflation_term_4312_3142(const RationalFunction& s,
                                     const PowerSeries& f, int order);
// The closed form cm^2(c - m + f + cf)/(1 - 2cm - cm^2 - mf - cmf).
PowerSeries inflation_closed_4312_3142(const PowerSeries& f, int order);
// Fixed point of f = x + f_sum + f_skew + inflation term. When s is given
// the inflation term is built from it, otherwise from the closed form.
PowerSeries assemble_4312_3142(int order,
                               const std::optional<RationalFunction>& s = {});

// Skew-indecomposable members of Av(231,3124): (x - 2x^2 + x^3)/(1-3x+x^2).
PowerSeries skew_indecomposable_231_3124(int order);
// Av(231,3124): (x - x^2)/(1 - 3x + x^2).
PowerSeries series_231_3124(int order);
// Solution of the linear equation f = x + (xc + x) f + skew c +
// s(c,m,c,m)/m (x - x^2)/(1 - 3x + x^2).
PowerSeries assemble_4231_3124(int order, const RationalFunction& s);
// Expansion of the closed form with sqrt(1 - 4x).
PowerSeries closed_form_4231_3124(int order);

struct SuiteOptions {
  std::string data_dir;
  EnumerateOptions enumerate;
  int geom_bound = 9;
};

// Brute-force census with member lists, shared across suites in-process.
const ClassCensus& census_for(const ClassSpec& spec, int n_max,
                              const SuiteOptions& options);

// Simple members of Av(class) versus simple members of Geom(grid) for
// 4 <= n <= n_max.
PipelineReport verify_proposition(const ClassSpec& spec, const GridSpec& grid,
                                  int n_max, const SuiteOptions& options);

// Rule table for inflating simple skeletons, one rule per line:
//   class: 4312,3142
//   grid: grid_4312_3142.txt
//   language: lang_simple_4312_3142.rules
//   rule: <selector> [| <condition>, ...] -> <block class>
// Selectors: "x", "first x", "last x", "later x" (after the first),
// "earlier x" (before the last). Conditions: "starts x",
// "first x in <class>", "first x notin <class>". Block classes: "any" (the
// class itself), "increasing", "decreasing", "av <basis>". Paths are
// relative to the table file. Every entry must match at least one rule; its
// block must lie in every matching rule's class.
struct InflationTable {
  struct BlockClass {
    enum class Kind { kAny, kIncreasing, kDecreasing, kAvoid };
    Kind kind = Kind::kAny;
    ClassSpec avoid;
    std::string text;
  };
  struct Condition {
    enum class Kind { kStarts, kFirstIn, kFirstNotIn };
    Kind kind = Kind::kStarts;
    char letter = 0;
    BlockClass block;
  };
  struct Rule {
    enum class Selector { kAll, kFirst, kLast, kLater, kEarlier };
    Selector selector = Selector::kAll;
    char letter = 0;
    std::vector<Condition> conditions;
    BlockClass block;
    std::string text;
  };

  ClassSpec spec;
  std::string grid_path;
  std::string language_path;
  std::vector<Rule> rules;

  static InflationTable Parse(std::string_view text, const std::string& base_dir);
  static InflationTable Load(const std::string& path);
};

// True iff blocks (one per letter of `word`) respect the table.
bool inflation_allowed(const InflationTable& table, std::string_view word,
                       const std::vector<Permutation>& blocks);

PipelineReport verify_inflation_rules(const InflationTable& table, int n_max,
                                      const SuiteOptions& options);

// Grid(spec) against Av(basis) for every length up to n_max, and the
// minimal permutations outside Grid(spec) up to n_max.
PipelineReport verify_basis_conjecture(const GridSpec& grid,
                                       const ClassSpec& basis, int n_max);
// Members of Grid(spec) of lengths 0..n_max, grown by inserting maxima.
std::vector<std::vector<Permutation>> grid_members_upto(const GridSpec& grid,
                                                        int n_max);
// Minimal permutations of length <= n_max outside Grid(spec).
std::vector<Permutation> grid_basis_upto(const GridSpec& grid, int n_max);

// Named suites: thm-4213-3142, thm-4312-3142, thm-4231-3124, prop1, prop2,
// grid-footnotes, inflation-rules, all. `n_max` is the brute-force horizon.
std::vector<std::string> suite_names();
PipelineReport run_suite(const std::string& name, int n_max,
                         const SuiteOptions& options);

}  // namespace permgrid

#endif  // PERMGRID_PIPELINES_H_
