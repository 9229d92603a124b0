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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

Result Cli(const std::string& args) {
  const std::string cmd = std::string(PERMGRID_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Data(const std::string& name) {
  return std::string(PERMGRID_DATA_DIR) + "/" + name;
}

TEST(CliTest, CountBrute) {
  const Result r = Cli("count --basis 4213,3142 --to 7");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["counts"], json::parse("[1,2,6,22,89,379,1664]"));
  EXPECT_EQ(j["basis"], "3142,4213");
}

TEST(CliTest, CountCsv) {
  const Result r = Cli("count --basis 21 --to 3 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "n,count,simple_count,sumdec_count,skewdec_count\n"
            "1,1,1,0,0\n2,1,1,1,0\n3,1,0,1,0\n");
}

TEST(CliTest, CountSeries) {
  const Result r = Cli("count --basis 4231,3124 --to 6 --method series");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["counts"],
            json::parse(R"(["1","2","6","22","88","363"])"));
}

TEST(CliTest, Simples) {
  const Result r = Cli("simples --basis 4213,3142 --n 6");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["simples"], json::parse(R"(["246135"])"));
}

TEST(CliTest, GridCommands) {
  Result r = Cli("grid decode --spec " + Data("grid_4312_3142.txt") + " --word acadcdb");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["perm"], "2473516");
  r = Cli("grid member --spec " + Data("grid_fig3.txt") + " --perm 2413 --geometric");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["member"], false);
  r = Cli("grid member --spec " + Data("grid_fig3.txt") + " --perm 2413");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["member"], true);
  r = Cli("grid canonical --spec " + Data("grid_4312_3142.txt") + " --perm 2473516");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["col_divs"].size(), 4u);
}

TEST(CliTest, LangCommands) {
  Result r = Cli("lang count --rules " + Data("all.rules") + " --n 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["count"], "16");
  r = Cli("lang gf --rules " + Data("lang_grid_4231_3124.rules"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["gf"], "(1 - 5*x + 7*x^2 - x^3) / (1 - 6*x + 11*x^2 - 6*x^3)");
  r = Cli("lang words --rules " + Data("all.rules") + " --n 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["words"], json::parse(R"(["a","b","c","d"])"));
}

TEST(CliTest, SeriesCommands) {
  Result r = Cli("series roots --class 4312,3142 --discriminant");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["exact"], "1/5");
  r = Cli("series verify --class 4213,3142 --terms 1,2,6,22,89");
  EXPECT_EQ(r.status, 0);
  r = Cli("series verify --class 4213,3142 --terms 1,2,6,23,89");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["pass"], false);
}

TEST(CliTest, VerifyWritesReport) {
  const auto out = std::filesystem::temp_directory_path() / "permgrid_cli_report.json";
  std::filesystem::remove(out);
  const Result r = Cli("verify --suite prop1 --to 5 --out " + out.string());
  ASSERT_EQ(r.status, 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  EXPECT_EQ(j["suite"], "prop1");
  EXPECT_EQ(j["pass"], true);
  std::filesystem::remove(out);
}

TEST(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Cli("").status, 2);
  EXPECT_EQ(Cli("count --basis 4x --to 3").status, 2);
  EXPECT_EQ(Cli("lang count --rules nothere.rules --n 2").status, 2);
  EXPECT_EQ(Cli("verify --suite nonsense --to 4").status, 2);
  EXPECT_EQ(Cli("count --basis 21 --to 3 --format xml").status, 2);
}

TEST(CliTest, Deterministic) {
  for (const char* args : {"count --basis 4312,3142 --to 7", "verify --suite prop2 --to 6"}) {
    Result a = Cli(args), b = Cli(args);
    ASSERT_EQ(a.status, 0) << args;
    // Timings differ between runs.
    json ja = json::parse(a.out), jb = json::parse(b.out);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    EXPECT_EQ(ja, jb) << args;
  }
}

}  // namespace
