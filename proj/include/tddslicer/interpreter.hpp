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

#ifndef TDDSLICER_INTERPRETER_HPP_
#define TDDSLICER_INTERPRETER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/eval.hpp"

namespace tddslicer {

inline constexpr Int kDefaultStepBudget = 10000;

/// One executed assignment.
struct TrajectoryEntry {
  StmtId stmt_id;
  std::string var;
  Int value;

  bool operator==(const TrajectoryEntry&) const = default;
};

using Trajectory = std::vector<TrajectoryEntry>;

enum class RunStatus { kOk, kFault, kBudgetExceeded };

struct RunFault {
  StmtId stmt_id;
  std::string message;
};

struct RunResult {
  RunStatus status = RunStatus::kOk;
  /// Final state on success; the state reached so far otherwise.
  State final_state;
  Trajectory trajectory;
  std::optional<RunFault> fault;
  Int steps = 0;

  bool ok() const { return status == RunStatus::kOk; }
};

/// Executes `program` from `inputs`, which must bind exactly the
/// in-parameters (std::invalid_argument otherwise). Out-params and locals
/// start at 0.
///
/// Every executed statement costs one step, and a while loop costs one step
/// per guard evaluation. The run stops with kBudgetExceeded as soon as the
/// step count exceeds `step_budget`.
RunResult run(const Program& program, const State& inputs,
              Int step_budget = kDefaultStepBudget);

/// Entries of `traj` whose variable is in `vars` and, when `stmt_ids` is
/// given, whose statement is in it. Order is preserved.
Trajectory project(const Trajectory& traj, const std::set<std::string>& vars,
                   const std::optional<std::set<StmtId>>& stmt_ids = std::nullopt);

/// Initial state the interpreter starts from.
State initial_state(const Program& program, const State& inputs);

}  // namespace tddslicer

#endif  // TDDSLICER_INTERPRETER_HPP_
