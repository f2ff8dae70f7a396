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

#include "tddslicer/interpreter.hpp"

#include <stdexcept>

namespace tddslicer {

namespace {

struct BudgetExhausted {};

struct StmtFault {
  StmtId stmt_id;
  std::string message;
};

class Machine {
 public:
  Machine(State state, Int budget) : state_(std::move(state)), budget_(budget) {}

  void exec(const Block& block) {
    for (const Stmt& s : block) exec(s);
  }

  State& state() { return state_; }
  Trajectory& trajectory() { return traj_; }
  Int steps() const { return steps_; }

 private:
  void tick() {
    if (++steps_ > budget_) throw BudgetExhausted{};
  }

  bool condition(const Stmt& s, const Expr& cond) {
    try {
      return eval_bool(cond, Env(state_));
    } catch (const EvalError& err) {
      throw StmtFault{s.id, err.what()};
    }
  }

  void exec(const Stmt& s) {
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      tick();
      Int value = 0;
      try {
        value = eval_int(*a->value, Env(state_));
      } catch (const EvalError& err) {
        throw StmtFault{s.id, err.what()};
      }
      state_[a->target] = value;
      traj_.push_back({s.id, a->target, value});
    } else if (const auto* i = std::get_if<If>(&s.node)) {
      tick();
      exec(condition(s, *i->cond) ? i->then_block : i->else_block);
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      for (;;) {
        tick();
        if (!condition(s, *w->cond)) break;
        exec(w->body);
      }
    } else {
      tick();
    }
  }

  State state_;
  Int budget_;
  Int steps_ = 0;
  Trajectory traj_;
};

}  // namespace

State initial_state(const Program& program, const State& inputs) {
  const auto ins = program.in_params();
  if (inputs.size() != ins.size()) {
    throw std::invalid_argument("inputs must bind exactly the in-parameters of '" +
                                program.name + "'");
  }
  State state;
  for (const auto& name : ins) {
    auto it = inputs.find(name);
    if (it == inputs.end()) {
      throw std::invalid_argument("missing input for in-parameter '" + name + "'");
    }
    state[name] = it->second;
  }
  for (const auto& name : program.out_params()) state[name] = 0;
  for (const auto& name : program.locals) state[name] = 0;
  return state;
}

RunResult run(const Program& program, const State& inputs, Int step_budget) {
  if (step_budget <= 0) throw std::invalid_argument("step budget must be positive");
  Machine machine(initial_state(program, inputs), step_budget);
  RunResult result;
  try {
    machine.exec(program.body);
  } catch (const BudgetExhausted&) {
    result.status = RunStatus::kBudgetExceeded;
  } catch (const StmtFault& fault) {
    result.status = RunStatus::kFault;
    result.fault = RunFault{fault.stmt_id, fault.message};
  }
  result.final_state = std::move(machine.state());
  result.trajectory = std::move(machine.trajectory());
  result.steps = machine.steps();
  return result;
}

Trajectory project(const Trajectory& traj, const std::set<std::string>& vars,
                   const std::optional<std::set<StmtId>>& stmt_ids) {
  Trajectory out;
  for (const auto& entry : traj) {
    if (!vars.count(entry.var)) continue;
    if (stmt_ids && !stmt_ids->count(entry.stmt_id)) continue;
    out.push_back(entry);
  }
  return out;
}

}  // namespace tddslicer
