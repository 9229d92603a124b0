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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "permgrid/automata.h"
#include "permgrid/class_enum.h"
#include "permgrid/grid.h"
#include "permgrid/perm.h"
#include "permgrid/pipelines.h"
#include "permgrid/poly.h"
#include "permgrid/series.h"

namespace permgrid {
namespace {

const std::vector<std::string> kLetters = {"x_a", "x_b", "x_c", "x_d"};
const char* kClasses[] = {"4213,3142", "4312,3142", "4231,3124"};

std::string Data(const std::string& name) {
  return std::string(PERMGRID_DATA_DIR) + "/" + name;
}

SuiteOptions Options() {
  SuiteOptions o;
  o.data_dir = PERMGRID_DATA_DIR;
  return o;
}

const std::vector<std::int64_t>& Known(int i) {
  static const std::vector<std::int64_t>* kAll[] = {&kTerms4213_3142, &kTerms4312_3142,
                                                    &kTerms4231_3124};
  return *kAll[i];
}

const ClassCensus& Census(int i, int n) {
  return census_for(ClassSpec::Parse(kClasses[i]), n, Options());
}

PowerSeries CountSeries(const ClassCensus& c, int n) {
  std::vector<Integer> v{0};
  for (int k = 1; k <= n; ++k) v.emplace_back(static_cast<unsigned long>(c.at(k).count));
  return PowerSeries::FromIntegers(v, n);
}

PowerSeries FromTerms(const std::vector<std::int64_t>& terms, int order) {
  std::vector<Integer> c{0};
  for (int i = 0; i < order; ++i) c.emplace_back(std::to_string(terms[i]));
  return PowerSeries::FromIntegers(c, order);
}

// Each criterion returns an empty string on success, else a reason.
using Criterion = std::function<std::string()>;

std::string SequenceReproduction() {
  for (int i = 0; i < 3; ++i) {
    const ClassCensus& c = Census(i, 12);
    for (int n = 1; n <= 12; ++n) {
      if (static_cast<std::int64_t>(c.at(n).count) != Known(i)[n - 1]) {
        return std::string(kClasses[i]) + " differs at n=" + std::to_string(n);
      }
    }
  }
  return "";
}

std::string AnnihilatorVerification() {
  const PolyInF p[] = {annihilator_4213_3142(), annihilator_4312_3142()};
  for (int i = 0; i < 2; ++i) {
    if (!verify_annihilator(p[i], CountSeries(Census(i, 12), 12), 12)) {
      return std::string("annihilator fails on brute force for ") + kClasses[i];
    }
  }
  if (assemble_4213_3142(14) != FromTerms(kTerms4213_3142, 14)) {
    return "4213,3142 assembly differs from the known terms";
  }
  if (assemble_4312_3142(14) != FromTerms(kTerms4312_3142, 14)) {
    return "4312,3142 assembly differs from the known terms";
  }
  const RationalFunction s =
      gf_multivariate(compile(RuleSet::Load(Data("lang_simple_4231_3124.rules"))));
  if (assemble_4231_3124(20, s) != closed_form_4231_3124(20)) {
    return "4231,3124 closed form differs from the linear solution";
  }
  if (closed_form_4231_3124(12) != CountSeries(Census(2, 12), 12)) {
    return "4231,3124 closed form differs from brute force";
  }
  if (closed_form_4231_3124(14) != FromTerms(kTerms4231_3124, 14)) {
    return "4231,3124 closed form differs from the known terms";
  }
  return "";
}

std::string SimpleSetVerification() {
  const PipelineReport a =
      verify_proposition(ClassSpec::Parse("4312,3142"),
                         GridSpec::FromRowsTopDown({{0, 1, 1}, {1, 0, -1}}), 8, Options());
  if (!a.ok()) return "prop1: " + a.first_failure()->name;
  const PipelineReport b =
      verify_proposition(ClassSpec::Parse("4231,3124"),
                         GridSpec::FromRowsTopDown({{0, 1, -1}, {1, -1, 0}}), 8, Options());
  if (!b.ok()) return "prop2: " + b.first_failure()->name;
  return "";
}

std::string GridClassChecks() {
  const auto parse = [](const char* s) { return RationalFunction::Parse(s, {"x"}); };
  if (gf_univariate(compile(RuleSet::Load(Data("lang_grid_4312_3142.rules")))) !=
      parse("(1 - 6*x + 11*x^2 - 5*x^3) / ((1 - x)*(1 - 3*x)*(1 - 3*x + x^2))")) {
    return "first grid-class GF differs";
  }
  if (gf_univariate(compile(RuleSet::Load(Data("lang_grid_4231_3124.rules")))) !=
      parse("(1 - 5*x + 7*x^2 - x^3) / ((1 - x)*(1 - 2*x)*(1 - 3*x))")) {
    return "second grid-class GF differs";
  }
  if (!verify_basis_conjecture(GridSpec::Load(Data("grid_4312_3142.txt")),
                               ClassSpec::Parse("2143,3142,4132,4312"), 7)
           .ok()) {
    return "first grid-class basis fails";
  }
  if (!verify_basis_conjecture(GridSpec::Load(Data("grid_4231_3124.txt")),
                               ClassSpec::Parse("4312,4231,4123,3124,32541,21534,21435"), 7)
           .ok()) {
    return "second grid-class basis fails";
  }
  return "";
}

std::string MultivariateAnchors() {
  RuleSet r = RuleSet::Load(Data("lang_simple_4312_3142.rules"));
  r.start_letters = r.ParseLetterSet("a");
  if (gf_multivariate(compile(r)) !=
      RationalFunction::Parse("x_a*x_b*x_c*x_d / (1 - x_a*x_c - x_b*x_d - x_c*x_d"
                              " - x_a*x_c*x_d - x_b*x_c*x_d)",
                              kLetters)) {
    return "4312,3142 s differs";
  }
  if (gf_multivariate(compile(RuleSet::Load(Data("lang_simple_4231_3124.rules")))) !=
      RationalFunction::Parse(
          "x_b*x_c*x_d*(x_a + x_c + x_a*x_b + x_a*x_c + x_b*x_c + x_c*x_d"
          " + x_a*x_b*x_c + x_b*x_c*x_d)"
          " / (1 - x_a*x_b - x_b*x_c - x_c*x_d - x_a*x_b*x_c - x_b*x_c*x_d)",
          kLetters)) {
    return "4231,3124 s differs";
  }
  return "";
}

std::string EncodingFidelity() {
  if (decode_word(GridSpec::Load(Data("grid_4312_3142.txt")), "acadcdb") !=
      Permutation::Parse("2473516")) {
    return "decode of acadcdb";
  }
  const GridSpec fig3 = GridSpec::Load(Data("grid_fig3.txt"));
  const Permutation p = Permutation::Parse("2413");
  if (geom_member(p, fig3) || !grid_member(p, fig3)) return "2413 membership";
  const std::pair<const char*, const char*> kPairs[] = {
      {"grid_4312_3142.txt", "lang_grid_4312_3142.rules"},
      {"grid_4231_3124.txt", "lang_grid_4231_3124.rules"}};
  for (const auto& [grid, rules] : kPairs) {
    const GridSpec g = GridSpec::Load(Data(grid));
    const Dfa d = compile(RuleSet::Load(Data(rules)));
    for (int n = 0; n <= 7; ++n) {
      std::set<Permutation> images;
      const auto words = enumerate_words(d, n);
      for (const auto& w : words) images.insert(decode_word(g, w));
      if (images.size() != words.size() ||
          std::vector<Permutation>(images.begin(), images.end()) != geom_members(g, n)) {
        return std::string("bijection fails for ") + grid + " at n=" + std::to_string(n);
      }
    }
  }
  return "";
}

std::string RadiusChecks() {
  const Rational tol(1, 1'000'000'000);
  const RootInterval rho = smallest_positive_root(discriminant_in_f(annihilator_4213_3142()), tol);
  if (std::abs(rho.midpoint() - 0.1895) > 5e-4) return "4213,3142 radius";
  const RootInterval fifth =
      smallest_positive_root(discriminant_in_f(annihilator_4312_3142()), tol);
  if (std::abs(fifth.midpoint() - 0.2) > 1e-9) return "4312,3142 radius";
  if (fifth.exact && *fifth.exact != Rational(1, 5)) return "4312,3142 exact root";
  const RootInterval cubic = smallest_positive_root(cubic_4231_3124(), tol);
  if (std::abs(cubic.midpoint() - 0.2451) > 5e-4) return "cubic root";
  return "";
}

std::string PropertySuites() {
  // Decomposition round trip.
  for (int n = 1; n <= 9; ++n) {
    std::string bad;
    for_each_permutation(n, [&](const Permutation& p) {
      if (!bad.empty()) return;
      const auto d = substitution_decompose(p);
      if (inflate(d.skeleton, d.blocks) != p) bad = p.ToString();
    });
    if (!bad.empty()) return "decomposition round trip fails for " + bad;
  }
  // Commutation of letters in independent cells.
  std::mt19937 rng(2026);
  for (const char* name : {"grid_4312_3142.txt", "grid_4231_3124.txt", "grid_fig3.txt",
                           "grid_4213_3142.txt"}) {
    const GridSpec g = GridSpec::Load(Data(name));
    std::uniform_int_distribution<int> letter(0, g.alphabet().size() - 1);
    std::uniform_int_distribution<int> len(2, 10);
    for (int trial = 0; trial < 500; ++trial) {
      std::string w;
      for (int i = len(rng); i > 0; --i) w += g.alphabet()[letter(rng)];
      const Permutation base = decode_word(g, w);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const auto [k1, l1] = g.cell_of(w[i]);
        const auto [k2, l2] = g.cell_of(w[i + 1]);
        if (k1 == k2 || l1 == l2) continue;
        std::string v = w;
        std::swap(v[i], v[i + 1]);
        if (decode_word(g, v) != base) return std::string("commutation fails for ") + w;
      }
    }
  }
  // Word counts against enumeration.
  for (const char* f : {"lang_grid_4312_3142.rules", "lang_grid_4231_3124.rules",
                        "lang_simple_4312_3142.rules", "lang_simple_4231_3124.rules",
                        "lang_simple_4213_3142.rules"}) {
    const Dfa d = compile(RuleSet::Load(Data(f)));
    for (int n = 0; n <= 10; ++n) {
      if (count_words(d, n) != static_cast<unsigned long>(enumerate_words(d, n).size())) {
        return std::string("word count fails for ") + f;
      }
    }
  }
  // Sum and skew decomposable counts.
  const int n = 10;
  const PowerSeries one = PowerSeries::Constant(1, n);
  const PowerSeries x = PowerSeries::X(n);
  const PowerSeries c = catalan_series(n);
  const PowerSeries m = monotone_series(n);
  PowerSeries f[3], sum[3], skew[3];
  for (int i = 0; i < 3; ++i) {
    const ClassCensus& census = Census(i, 12);
    std::vector<Integer> a{0}, b{0}, s{0};
    for (int k = 1; k <= n; ++k) {
      a.emplace_back(static_cast<unsigned long>(census.at(k).count));
      b.emplace_back(static_cast<unsigned long>(census.at(k).sumdec_count));
      s.emplace_back(static_cast<unsigned long>(census.at(k).skewdec_count));
    }
    f[i] = PowerSeries::FromIntegers(a, n);
    sum[i] = PowerSeries::FromIntegers(b, n);
    skew[i] = PowerSeries::FromIntegers(s, n);
  }
  if (sum[0] != f[0] * f[0] / (one + f[0]) || skew[0] != c * f[0] / (one + c)) {
    return "4213,3142 decomposable counts";
  }
  if (sum[1] != f[1] * f[1] / (one + f[1]) ||
      skew[1] != m * c + (f[1] - skew[1]) * m - m * m) {
    return "4312,3142 decomposable counts";
  }
  if (sum[2] != (x * c + x) * f[2] || skew[2] != skew_indecomposable_231_3124(n) * c) {
    return "4231,3124 decomposable counts";
  }
  // Inflation rules.
  for (const char* t : {"inflation_4213_3142.table", "inflation_4312_3142.table",
                        "inflation_4231_3124.table"}) {
    const PipelineReport r = verify_inflation_rules(InflationTable::Load(Data(t)), 9, Options());
    if (!r.ok()) return std::string(t) + ": " + r.first_failure()->name;
  }
  return "";
}

}  // namespace
}  // namespace permgrid

int main() {
  using permgrid::Criterion;
  const std::pair<const char*, Criterion> kCriteria[] = {
      {"sequence reproduction, n = 1..12", permgrid::SequenceReproduction},
      {"annihilators mod x^13, assemblies to 14 terms, closed form to order 20",
       permgrid::AnnihilatorVerification},
      {"simple permutations coincide with the geometric grid classes, 4 <= n <= 8",
       permgrid::SimpleSetVerification},
      {"grid-class generating functions and bases, n <= 7", permgrid::GridClassChecks},
      {"multivariate generating functions s", permgrid::MultivariateAnchors},
      {"encoding and membership, bijection for n <= 7", permgrid::EncodingFidelity},
      {"radius of convergence (0.1895 +- 5e-4, 1/5 +- 1e-9, 0.2451 +- 5e-4)",
       permgrid::RadiusChecks},
      {"property suites", permgrid::PropertySuites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [label, run] : kCriteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty()) {
      std::printf("[PASS] %d %s (%.1fs)\n", index, label, secs);
    } else {
      ++failures;
      std::printf("[FAIL] %d %s: %s (%.1fs)\n", index, label, reason.c_str(), secs);
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
