// Copyright 2026 The tddslicer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the installed binary end to end: exit codes, machine output against
// goldens, human output and error routing.

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

const fs::path kCorpus = TDDSLICER_CORPUS_DIR;
const fs::path kGolden = TDDSLICER_GOLDEN_DIR;

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs `tddslicer <args>` from the corpus directory with color disabled
// unless `env` says otherwise.
Result cli(const std::string& args, const std::string& env = "TDDSLICER_COLOR=0") {
  const fs::path err_file =
      fs::temp_directory_path() / ("tddslicer_cli_" + std::to_string(::getpid()) + ".err");
  const std::string cmd = "cd '" + kCorpus.string() + "' && " + env + " '" TDDSLICER_CLI "' " +
                          args + " 2>'" + err_file.string() + "'";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  fs::remove(err_file);
  return r;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

const std::string kMaxThen = "--pre 'a > b' --post 'a > b && max == a'";
const std::string kMaxElse = "--pre 'a <= b' --post 'a <= b && max == b'";

struct GoldenCase {
  const char* golden;
  std::string args;
  int exit_code;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.golden; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MachineOutputMatches) {
  const GoldenCase& c = GetParam();
  const Result r = cli("--format machine " + c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << r.err;
  EXPECT_TRUE(r.err.empty()) << r.err;
  const ordered_json actual = ordered_json::parse(r.out);
  const ordered_json expected = ordered_json::parse(slurp(kGolden / c.golden));
  EXPECT_EQ(actual, expected) << actual.dump(2);
  EXPECT_EQ(actual.begin().key(), "format_version");
  EXPECT_EQ(std::next(actual.begin()).key(), "command");
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        GoldenCase{"check_verified.json", "check max/max2.prog " + kMaxThen, 0},
        GoldenCase{"check_counterexample.json",
                   "check max/max2.prog --pre 'a > b' --post 'max == b'", 1},
        GoldenCase{"slice_max_then.json", "slice max/max2.prog " + kMaxThen, 0},
        GoldenCase{"slice_max_else.json", "slice max/max2.prog " + kMaxElse, 0},
        GoldenCase{"union_max.json",
                   "union " + kMaxThen + " " + kMaxElse + " --domain 'a in -8..8, b in -8..8'", 0},
        GoldenCase{"trace_div.json", "trace div/oracle.prog --inputs 'x=4, y=2' --vars q", 0},
        GoldenCase{"replay_max.json", "replay max/max.session", 0},
        GoldenCase{"replay_div.json", "replay div/div.session", 0}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.golden;
      return name.substr(0, name.find('.'));
    });

TEST(Check, HumanOutput) {
  const Result ok = cli("check max/max2.prog " + kMaxThen);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(contains(ok.out, "Verified"));
  EXPECT_TRUE(contains(ok.out, "136"));
  const Result bad = cli("check max/max2.prog --pre 'a > b' --post 'max == b'");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(contains(bad.out, "Counterexample"));
  EXPECT_TRUE(contains(bad.out, "a=-7, b=-8"));
}

TEST(Check, VerdictExitCodes) {
  EXPECT_EQ(cli("check max/max2.prog --pre FALSE --post TRUE").exit_code, 1);
  EXPECT_EQ(cli("--budget 3 check div/oracle.prog --pre TRUE --post TRUE "
                "--domain 'x in 0..4, y in 1..2'").exit_code,
            1);
  const Result fault = cli("--format machine check div/oracle.prog --pre TRUE --post "
                           "'x / q >= 0' --domain 'x in 0..2, y in 1..1'");
  EXPECT_EQ(fault.exit_code, 1);
  EXPECT_EQ(ordered_json::parse(fault.out)["verdict"], "Fault");
}

TEST(Check, LocalsNeedTheWaiver) {
  const std::string args = "check div/oracle.prog --pre 'y > 0' --post 't == r' "
                           "--domain 'x in 0..4, y in 1..2'";
  EXPECT_EQ(cli(args).exit_code, 2);
  EXPECT_EQ(cli(args + " --allow-locals").exit_code, 0);
}

TEST(Check, DefaultDomain) {
  const Result r = cli("--format machine check max/max2.prog --pre TRUE --post TRUE");
  EXPECT_EQ(ordered_json::parse(r.out)["domain"], "a in -8..8, b in -8..8");
  EXPECT_EQ(ordered_json::parse(r.out)["checked_points"], 289);
}

TEST(Slice, HumanOutputPrintsTheProgram) {
  const Result r = cli("slice max/max2.prog " + kMaxThen);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "if (a > b) {\n    max := a;\n  }\n}"));
  EXPECT_TRUE(contains(r.out, "else#1"));
}

TEST(Slice, Strategies) {
  const Result g = cli("--format machine slice max/max2.prog --strategy greedy " + kMaxThen);
  EXPECT_EQ(g.exit_code, 0);
  const ordered_json j = ordered_json::parse(g.out);
  EXPECT_EQ(j["strategy"], "greedy");
  EXPECT_EQ(j["minimal"], false);
  EXPECT_EQ(cli("slice max/max2.prog --strategy random " + kMaxThen).exit_code, 2);
}

TEST(Slice, RefusalsAndFailures) {
  EXPECT_EQ(cli("slice max/max2.prog --pre 'a > b' --post 'max == b'").exit_code, 1);
  EXPECT_EQ(cli("slice max/max2.prog --pre FALSE --post TRUE").exit_code, 1);

  const fs::path big = fs::temp_directory_path() / "tddslicer_cli_big.prog";
  {
    std::ofstream out(big);
    out << "proc f(in x, out y) {";
    for (int i = 0; i < 17; ++i) out << " skip;";
    out << " y := x; }\n";
  }
  const std::string args = "slice '" + big.string() + "' --pre TRUE --post 'y == x' "
                           "--domain 'x in 0..1'";
  const Result refused = cli("--format machine " + args);
  EXPECT_EQ(refused.exit_code, 2);
  EXPECT_EQ(ordered_json::parse(refused.out)["error"]["kind"], "refused");
  EXPECT_EQ(cli(args + " --strategy greedy").exit_code, 0);
  fs::remove(big);
}

TEST(Union, TautologyDecidesTheExitCode) {
  const Result ok = cli("union " + kMaxThen + " " + kMaxElse);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(contains(ok.out, "a > b || a <= b"));
  const Result gap = cli("--format machine union --pre 'a > b' --post 'max == a' "
                         "--pre 'a < b' --post 'max == b'");
  EXPECT_EQ(gap.exit_code, 1);
  const ordered_json j = ordered_json::parse(gap.out);
  EXPECT_EQ(j["pre_tautology"]["holds"], false);
  EXPECT_EQ(j["pre_tautology"]["witness"], (ordered_json{{"a", -8}, {"b", -8}}));
}

TEST(Union, EquivalentOperand) {
  const Result r = cli("--format machine union --pre 'a > b' --post 'max == a' "
                       "--pre 'a > b && a > b' --post 'max == a' --domain 'a in -2..2, b in -2..2'");
  EXPECT_EQ(ordered_json::parse(r.out)["equivalent_to"], 1);
}

TEST(Union, NeedsTwoOperands) {
  EXPECT_EQ(cli("union --pre 'a > b' --post TRUE").exit_code, 2);
}

TEST(Trace, HumanOutputAndBudget) {
  const Result r = cli("trace div/oracle.prog --inputs 'x=7, y=2'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "stmt 6: r = 1"));
  const Result over = cli("--budget 5 trace div/oracle.prog --inputs 'x=4, y=2'");
  EXPECT_EQ(over.exit_code, 1);
  EXPECT_TRUE(contains(over.out, "budget-exceeded"));
  const Result fault = cli("--format machine trace div/oracle.prog --inputs 'x=1, y=0' "
                           "--budget 50");
  EXPECT_EQ(fault.exit_code, 1);
  EXPECT_EQ(cli("trace div/oracle.prog --inputs 'x=1'").exit_code, 2);
  EXPECT_EQ(cli("trace div/oracle.prog --inputs 'x=1, y=1' --vars z").exit_code, 2);
}

TEST(Replay, DeterministicAcrossRuns) {
  const Result a = cli("--format machine replay div/div.session");
  const Result b = cli("--format machine replay div/div.session");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit_code, 0);
}

TEST(Replay, VerbatimSnapshotsFail) {
  const Result r = cli("replay div_verbatim/div_verbatim.session");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.out, "result: FAIL"));
  const Result m = cli("--format machine replay div_verbatim/div_verbatim.session");
  EXPECT_EQ(ordered_json::parse(m.out)["ok"], false);
}

TEST(Errors, RoutingAndKinds) {
  const Result human = cli("check nope.prog --pre TRUE --post TRUE");
  EXPECT_EQ(human.exit_code, 2);
  EXPECT_TRUE(human.out.empty());
  EXPECT_TRUE(contains(human.err, "nope.prog"));

  const Result machine = cli("--format machine check nope.prog --pre TRUE --post TRUE");
  EXPECT_EQ(machine.exit_code, 2);
  EXPECT_TRUE(machine.err.empty());
  const ordered_json j = ordered_json::parse(machine.out);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["error"]["kind"], "file");

  const Result parse = cli("--format machine check max/max2.prog --pre 'a >' --post TRUE");
  EXPECT_EQ(parse.exit_code, 2);
  EXPECT_EQ(ordered_json::parse(parse.out)["error"]["kind"], "parse");

  const Result session = cli("--format machine replay nope.session");
  EXPECT_EQ(session.exit_code, 2);
  EXPECT_EQ(ordered_json::parse(session.out)["error"]["kind"], "file");
}

TEST(Errors, UsageExitCodes) {
  EXPECT_EQ(cli("").exit_code, 2);
  EXPECT_EQ(cli("frobnicate").exit_code, 2);
  EXPECT_EQ(cli("--budget 0 check max/max2.prog --pre TRUE --post TRUE").exit_code, 2);
  EXPECT_EQ(cli("--format xml check max/max2.prog --pre TRUE --post TRUE").exit_code, 2);
  EXPECT_EQ(cli("check max/max2.prog --pre TRUE").exit_code, 2);
  EXPECT_EQ(cli("check max/max2.prog --pre TRUE --post TRUE --domain 'a in 0..1'").exit_code, 2);
  EXPECT_EQ(cli("check max/max2.prog --pre TRUE --post TRUE --domain 'a in 0..1, b in 0..1, "
                "c in 0..1'").exit_code,
            2);
  EXPECT_EQ(cli("check max/max2.prog --pre TRUE --post TRUE --domain 'a in 1..0, b in 0..1'")
                .exit_code,
            2);
  EXPECT_EQ(cli("--help").exit_code, 0);
}

TEST(Color, EnvironmentOverride) {
  const std::string args = "check max/max2.prog " + kMaxThen;
  EXPECT_FALSE(contains(cli(args, "TDDSLICER_COLOR=0").out, "\x1b["));
  EXPECT_TRUE(contains(cli(args, "TDDSLICER_COLOR=1").out, "\x1b["));
  // Not a terminal, so no color by default.
  EXPECT_FALSE(contains(cli(args, "env -u TDDSLICER_COLOR").out, "\x1b["));
  EXPECT_FALSE(contains(cli("--format machine " + args, "TDDSLICER_COLOR=1").out, "\x1b["));
}

}  // namespace
