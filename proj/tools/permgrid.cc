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

// permgrid: command-line front end for enumeration, grid encodings, regular
// languages, series and the verification suites.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permgrid/automata.h"
#include "permgrid/class_enum.h"
#include "permgrid/grid.h"
#include "permgrid/perm.h"
#include "permgrid/pipelines.h"
#include "permgrid/series.h"

namespace {

using json = nlohmann::ordered_json;
using namespace permgrid;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for bad input detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string data_dir = PERMGRID_DATA_DIR;
  std::string cache_dir;
  int geom_bound = 9;
  std::size_t member_limit = 2'000'000;
};

// key=value lines; '#' comments.
void LoadConfig(const std::string& path, Config& c) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "data_dir") {
        c.data_dir = value;
      } else if (key == "cache_dir") {
        c.cache_dir = value;
      } else if (key == "geom_bound") {
        c.geom_bound = std::stoi(value);
      } else if (key == "member_limit") {
        c.member_limit = std::stoull(value);
      } else {
        throw UsageError("unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": bad value for " + key);
    }
  }
}

// Bare file names fall back to the data directory.
std::string Resolve(const Config& c, const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  auto alt = std::filesystem::path(c.data_dir) / path;
  if (std::filesystem::exists(alt)) return alt.string();
  throw UsageError("no such file: " + path);
}

ClassSpec ParseBasis(const std::string& text) {
  try {
    return ClassSpec::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad basis: ") + e.what());
  }
}

Permutation ParsePerm(const std::string& text) {
  try {
    return Permutation::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad permutation: ") + e.what());
  }
}

void Emit(const json& j) { std::cout << j.dump(2) << "\n"; }

SuiteOptions MakeSuiteOptions(const Config& c) {
  SuiteOptions o;
  o.data_dir = c.data_dir;
  o.geom_bound = c.geom_bound;
  o.enumerate.cache_dir = c.cache_dir;
  o.enumerate.member_limit = c.member_limit;
  return o;
}

// ------------------------------------------------------------------ count

struct CountArgs {
  std::string basis;
  int to = 10;
  std::string method = "brute";
  std::string format = "json";
};

PowerSeries SeriesFor(const ClassSpec& spec, int order, const Config& c) {
  const std::string key = spec.ToString();
  if (key == "3142,4213") return assemble_4213_3142(order);
  if (key == "3142,4312") return assemble_4312_3142(order);
  if (key == "3124,4231") {
    RuleSet rs = RuleSet::Load(Resolve(c, "lang_simple_4231_3124.rules"));
    return assemble_4231_3124(order, gf_multivariate(compile(rs)));
  }
  throw UsageError("series method supports Av(4213,3142), Av(4312,3142) and "
                   "Av(4231,3124) only");
}

int RunCount(const CountArgs& a, const Config& c) {
  const ClassSpec spec = ParseBasis(a.basis);
  if (a.to < 1) throw UsageError("--to must be at least 1");
  if (a.method == "series") {
    const PowerSeries f = SeriesFor(spec, a.to, c);
    if (a.format == "csv") {
      std::cout << "n,count\n";
      for (int n = 1; n <= a.to; ++n) std::cout << n << "," << f[n].get_str() << "\n";
      return kExitOk;
    }
    json j;
    j["basis"] = spec.ToString();
    j["method"] = "series";
    j["counts"] = json::array();
    for (int n = 1; n <= a.to; ++n) j["counts"].push_back(f[n].get_str());
    Emit(j);
    return kExitOk;
  }
  EnumerateOptions opts;
  opts.cache_dir = c.cache_dir;
  opts.member_limit = 0;
  const ClassCensus census = enumerate(spec, a.to, opts);
  if (a.format == "csv") {
    std::cout << "n,count,simple_count,sumdec_count,skewdec_count\n";
    for (int n = 1; n <= a.to; ++n) {
      const auto& l = census.at(n);
      std::cout << n << "," << l.count << "," << l.simple_count << ","
                << l.sumdec_count << "," << l.skewdec_count << "\n";
    }
    return kExitOk;
  }
  json j;
  j["basis"] = spec.ToString();
  j["method"] = "brute";
  j["counts"] = json::array();
  j["simple_counts"] = json::array();
  for (int n = 1; n <= a.to; ++n) {
    j["counts"].push_back(census.at(n).count);
    j["simple_counts"].push_back(census.at(n).simple_count);
  }
  Emit(j);
  return kExitOk;
}

// ---------------------------------------------------------------- simples

int RunSimples(const std::string& basis, int n, const Config& c) {
  const ClassSpec spec = ParseBasis(basis);
  if (n < 0) throw UsageError("--n must be nonnegative");
  EnumerateOptions opts;
  opts.cache_dir = c.cache_dir;
  opts.member_limit = c.member_limit;
  const ClassCensus census = enumerate(spec, n, opts);
  json j;
  j["basis"] = spec.ToString();
  j["n"] = n;
  j["simples"] = json::array();
  for (const auto& p : simples_of(census, n)) j["simples"].push_back(p.ToString());
  Emit(j);
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int RunVerify(const std::string& suite, int to, const std::string& out_path,
              int jobs, const Config& c) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (to < 1) throw UsageError("--to must be at least 1");
  const SuiteOptions o = MakeSuiteOptions(c);
  PipelineReport report;
  if (suite == "all" && jobs > 1) {
    report.suite = "all";
    std::vector<std::future<PipelineReport>> parts;
    for (const auto& s : names) {
      if (s == "all") continue;
      parts.push_back(std::async(std::launch::async,
                                 [&, s] { return run_suite(s, to, o); }));
    }
    for (auto& p : parts) report.Merge(p.get());
  } else {
    report = run_suite(suite, to, o);
  }
  const std::string text = report.ToJson();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  if (const Check* bad = report.first_failure()) {
    std::cerr << "FAILED: " << bad->name << " (n = " << bad->n
              << "): expected " << bad->expected << ", got " << bad->got << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- grid

struct GridArgs {
  std::string action;
  std::string spec;
  std::string word;
  std::string perm;
  bool geometric = false;
};

int RunGrid(const GridArgs& a, const Config& c) {
  const GridSpec spec = GridSpec::Load(Resolve(c, a.spec));
  json j;
  if (a.action == "decode") {
    if (a.word.empty()) throw UsageError("decode needs --word");
    for (char ch : a.word) {
      if (spec.alphabet().find(ch) == std::string::npos) {
        throw UsageError(std::string("letter '") + ch + "' is not in the cell alphabet");
      }
    }
    j["word"] = a.word;
    j["perm"] = decode_word(spec, a.word).ToString();
  } else if (a.action == "member") {
    if (a.perm.empty()) throw UsageError("member needs --perm");
    const Permutation p = ParsePerm(a.perm);
    if (a.geometric && p.size() > c.geom_bound) {
      throw UsageError("permutation longer than the geometric oracle bound " +
                       std::to_string(c.geom_bound));
    }
    j["perm"] = p.ToString();
    j["oracle"] = a.geometric ? "geometric" : "monotone";
    j["member"] = a.geometric ? geom_member(p, spec, c.geom_bound)
                              : grid_member(p, spec);
  } else if (a.action == "canonical") {
    if (a.perm.empty()) throw UsageError("canonical needs --perm");
    const Permutation p = ParsePerm(a.perm);
    const Gridding g = canonical_gridding(p, spec);
    j["perm"] = p.ToString();
    j["col_divs"] = g.col_divs;
    j["row_divs"] = g.row_divs;
  }
  Emit(j);
  return kExitOk;
}

// ------------------------------------------------------------------- lang

struct LangArgs {
  std::string action;
  std::string rules;
  int n = -1;
  std::string start;
};

int RunLang(const LangArgs& a, const Config& c) {
  RuleSet rs = RuleSet::Load(Resolve(c, a.rules));
  if (!a.start.empty()) rs.start_letters = rs.ParseLetterSet(a.start);
  if ((a.action == "count" || a.action == "words") && a.n < 0) {
    throw UsageError(a.action + " needs --n");
  }
  const Dfa dfa = compile(rs);
  json j;
  j["rules"] = a.rules;
  if (a.action == "count") {
    j["n"] = a.n;
    j["count"] = count_words(dfa, a.n).get_str();
  } else if (a.action == "words") {
    j["n"] = a.n;
    j["words"] = enumerate_words(dfa, a.n);
  } else if (a.action == "gf") {
    j["gf"] = gf_univariate(dfa).ToString();
  } else {
    j["gf"] = gf_multivariate(dfa).ToString();
  }
  Emit(j);
  return kExitOk;
}

// ----------------------------------------------------------------- series

struct SeriesArgs {
  std::string action;
  std::string poly;
  std::string cls;
  std::string seed = "0,1";
  std::string terms;
  int order = 14;
  bool discriminant = false;
};

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

PolyInF PolyFor(const SeriesArgs& a) {
  if (!a.cls.empty()) {
    const std::string key = ParseBasis(a.cls).ToString();
    if (key == "3142,4213") return annihilator_4213_3142();
    if (key == "3142,4312") return annihilator_4312_3142();
    if (key == "3124,4231") return PolyInF({cubic_4231_3124()});
    throw UsageError("no built-in polynomial for Av(" + a.cls + ")");
  }
  if (a.poly.empty()) throw UsageError("series needs --poly or --class");
  try {
    return PolyInF::Parse(a.poly);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad polynomial: ") + e.what());
  }
}

int RunSeries(const SeriesArgs& a) {
  const PolyInF p = PolyFor(a);
  json j;
  j["poly"] = p.ToString();
  if (a.action == "solve") {
    std::vector<Rational> seed;
    for (const auto& s : SplitCommas(a.seed)) {
      try {
        seed.emplace_back(s);
      } catch (const std::invalid_argument&) {
        throw UsageError("bad seed coefficient '" + s + "'");
      }
    }
    const PowerSeries f = solve_algebraic(p, seed, a.order);
    j["coefficients"] = f.ToStrings();
  } else if (a.action == "verify") {
    std::vector<Integer> terms{0};
    for (const auto& s : SplitCommas(a.terms)) {
      try {
        terms.emplace_back(s);
      } catch (const std::invalid_argument&) {
        throw UsageError("bad term '" + s + "'");
      }
    }
    if (terms.size() < 2) throw UsageError("verify needs --terms");
    const int order = static_cast<int>(terms.size()) - 1;
    const bool ok =
        verify_annihilator(p, PowerSeries::FromIntegers(terms, order), order);
    j["order"] = order;
    j["pass"] = ok;
    Emit(j);
    return ok ? kExitOk : kExitCheckFailed;
  } else {
    ZPoly target;
    if (a.discriminant) {
      target = discriminant_in_f(p);
    } else if (p.coeffs().size() == 1) {
      target = p.coeffs()[0];
    } else {
      throw UsageError("roots needs a polynomial in x alone, or --discriminant");
    }
    const RootInterval r = smallest_positive_root(target, Rational(1, 1'000'000'000));
    j["polynomial"] = target.ToString();
    j["lo"] = r.lo.get_str();
    j["hi"] = r.hi.get_str();
    j["approx"] = r.midpoint();
    if (r.exact) j["exact"] = r.exact->get_str();
  }
  Emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration of permutation classes via simple permutations and "
               "geometric grid classes"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "per-length counts of Av(basis)");
  count_cmd->add_option("--basis", count.basis, "comma-separated basis")->required();
  count_cmd->add_option("--to", count.to, "largest length");
  count_cmd->add_option("--method", count.method)
      ->check(CLI::IsMember({"brute", "series"}));
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember({"json", "csv"}));

  std::string simples_basis;
  int simples_n = 0;
  auto* simples_cmd = app.add_subcommand("simples", "simple members of one length");
  simples_cmd->add_option("--basis", simples_basis)->required();
  simples_cmd->add_option("--n", simples_n)->required();

  std::string suite, out_path;
  int verify_to = 10, jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite)->required();
  verify_cmd->add_option("--to", verify_to, "brute-force horizon");
  verify_cmd->add_option("--out", out_path, "write the JSON report here");
  verify_cmd->add_option("--jobs", jobs, "suites run concurrently for 'all'")
      ->check(CLI::PositiveNumber);

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "grid-class encodings");
  grid_cmd->add_option("action", grid.action)
      ->required()
      ->check(CLI::IsMember({"decode", "member", "canonical"}));
  grid_cmd->add_option("--spec", grid.spec)->required();
  grid_cmd->add_option("--word", grid.word);
  grid_cmd->add_option("--perm", grid.perm);
  grid_cmd->add_flag("--geometric", grid.geometric, "use the Geom oracle");

  LangArgs lang;
  auto* lang_cmd = app.add_subcommand("lang", "regular languages from rule files");
  lang_cmd->add_option("action", lang.action)
      ->required()
      ->check(CLI::IsMember({"count", "gf", "gf-multi", "words"}));
  lang_cmd->add_option("--rules", lang.rules)->required();
  lang_cmd->add_option("--n", lang.n);
  lang_cmd->add_option("--start", lang.start, "allowed first letters, e.g. a,c");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "algebraic series tools");
  series_cmd->add_option("action", series.action)
      ->required()
      ->check(CLI::IsMember({"solve", "verify", "roots"}));
  series_cmd->add_option("--poly", series.poly, "P(x, f)");
  series_cmd->add_option("--class", series.cls, "use a built-in polynomial");
  series_cmd->add_option("--seed", series.seed, "leading coefficients");
  series_cmd->add_option("--terms", series.terms, "coefficients of x^1, x^2, ...");
  series_cmd->add_option("--order", series.order);
  series_cmd->add_flag("--discriminant", series.discriminant);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config config;
    if (const char* env = std::getenv("PERMGRID_CACHE")) config.cache_dir = env;
    if (!config_path.empty()) LoadConfig(config_path, config);
    if (*count_cmd) return RunCount(count, config);
    if (*simples_cmd) return RunSimples(simples_basis, simples_n, config);
    if (*verify_cmd) return RunVerify(suite, verify_to, out_path, jobs, config);
    if (*grid_cmd) return RunGrid(grid, config);
    if (*lang_cmd) return RunLang(lang, config);
    if (*series_cmd) return RunSeries(series);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
