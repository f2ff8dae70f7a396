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

#ifndef TDDSLICER_SESSION_HPP_
#define TDDSLICER_SESSION_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/contract.hpp"
#include "tddslicer/domain.hpp"
#include "tddslicer/error.hpp"
#include "tddslicer/interpreter.hpp"
#include "tddslicer/predicate.hpp"
#include "tddslicer/verifier.hpp"

namespace tddslicer {

// A TDD session: one (test, contract, code snapshot) triple per cycle plus
// the final program. Session files look like
//
//   [session]
//   name = div
//   final = div_final.prog
//   domain = x in 0..16, y in 1..9
//   outrange = q in -32..32
//
//   [cycle 1]
//   test.name = divide_2_by_2
//   test.inputs = x=2, y=2
//   test.expect = q=1, r=0
//   test.kind = new
//   contract.pre = x == 2 && y == 2
//   contract.post = x == y*q + r
//   snapshot = div_1.prog
//   note = free text
//
// outrange, test.kind and note are optional; `#` starts a comment line.
// A cycle without test.* keys repeats the previous cycle's test (refactoring).

class SessionError : public Error {
 public:
  SessionError(std::optional<int> line, std::string message,
               std::optional<std::string> file = std::nullopt)
      : Error(format(file, line, message)),
        line_(line),
        file_(std::move(file)),
        message_(std::move(message)) {}

  const std::optional<int>& line() const { return line_; }
  const std::optional<std::string>& file() const { return file_; }
  /// The message without file and line.
  const std::string& message() const { return message_; }

 private:
  static std::string format(const std::optional<std::string>& file,
                            std::optional<int> line, const std::string& message) {
    std::string out = file ? *file + ": " : "";
    if (line) out += "line " + std::to_string(*line) + ": ";
    return out + message;
  }

  std::optional<int> line_;
  std::optional<std::string> file_;
  std::string message_;
};

struct Cycle {
  int index = 0;
  TestCase test;
  /// True when the test was carried over from the previous cycle.
  bool inherited_test = false;
  Contract contract{Predicate::truth(), Predicate::truth(), std::nullopt};
  Program snapshot;
  std::string snapshot_path;
  std::optional<std::string> note;
};

struct Session {
  std::string name;
  std::vector<Cycle> cycles;
  Program final;
  std::string final_path;
  Domain dom;
  /// Per-variable overrides for out-param ranges.
  Domain out_ranges;
  /// The cycle tests in order.
  std::vector<TestCase> acceptance_suite;
};

/// `base_dir` resolves the relative `.prog` paths.
Session parse_session(std::string_view text, const std::filesystem::path& base_dir);
Session load_session(const std::filesystem::path& path);

enum class TestOutcome { kPass, kFail, kFault, kBudgetExceeded };

const char* to_string(TestOutcome o);

struct TestExecution {
  TestOutcome outcome = TestOutcome::kPass;
  /// Out-param values reached (final or partial).
  State actual;
  std::string detail;

  bool passed() const { return outcome == TestOutcome::kPass; }
};

/// Runs `p` on the test inputs and compares every expected out-param.
TestExecution run_test(const Program& p, const TestCase& t,
                       Int step_budget = kDefaultStepBudget);

struct QltyScore {
  std::size_t passed = 0;
  std::size_t total = 0;

  double percentage() const { return total == 0 ? 0.0 : 100.0 * passed / total; }
};

/// One assertion per expected out-param of every test. Throws
/// std::invalid_argument for an empty suite.
QltyScore qlty_score(const Program& p, std::span<const TestCase> suite,
                     Int step_budget = kDefaultStepBudget);
double qlty(const Program& p, std::span<const TestCase> suite,
            Int step_budget = kDefaultStepBudget);

struct RedCheck {
  bool applicable = false;
  /// Failure is expected only for tests classified new.
  bool expect_failure = false;
  std::optional<TestExecution> execution;
  bool as_expected = true;
};

struct RegressionCheck {
  int cycle = 0;
  std::string test_name;
  TestExecution execution;
};

struct ClassificationRecord {
  TestKind kind = TestKind::kNew;
  std::optional<TestKind> declared;
  bool mismatch = false;
  /// Cycle index of the first earlier contract the test is an instance of.
  std::optional<int> matched_cycle;
};

struct CycleRecord {
  int index = 0;
  std::string test_name;
  std::optional<std::string> note;
  RedCheck red;
  std::optional<TestExecution> green;
  std::vector<RegressionCheck> regressions;
  ClassificationRecord classification;
  std::optional<PointVerdict> contract_point_check;
  std::optional<VerificationResult> snapshot_contract;
  std::optional<VerificationResult> oracle_contract;
  /// Snapshot and final program both satisfy this cycle's contract.
  bool implication_witnessed = false;
  std::optional<SubsumptionResult> chain;
  /// Exceptions raised by sub-operations.
  std::vector<std::string> errors;

  bool passed() const;
};

struct Report {
  std::string session_name;
  std::vector<CycleRecord> cycles;
  Contract union_contract{Predicate::falsity(), Predicate::falsity(), std::nullopt};
  QueryResult union_pre_tautology;
  QltyScore qlty;
  bool final_matches_last_snapshot = false;
  /// Every test passes on the last snapshot, checked directly.
  bool monotone_accumulation = false;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;

  /// Failed checks in cycle order; empty means the session replays cleanly.
  std::vector<std::string> failures() const;
  bool ok() const { return failures().empty(); }
};

/// The implication {P}S{Q} => {P}C{Q} only runs one way: a snapshot
/// satisfying a contract says nothing about the final program, so replay
/// reports both verdicts instead of deriving one from the other.
inline constexpr std::string_view kImplicationNote =
    "snapshot and final-program verdicts are reported separately; the "
    "implication from snapshot to final program is not symmetric";

Report replay(const Session& s, Int step_budget = kDefaultStepBudget);

}  // namespace tddslicer

#endif  // TDDSLICER_SESSION_HPP_
