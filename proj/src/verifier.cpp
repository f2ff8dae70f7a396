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

#include "tddslicer/verifier.hpp"

#include <stdexcept>

namespace tddslicer {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "Verified";
    case Verdict::kCounterexample: return "Counterexample";
    case Verdict::kVacuous: return "Vacuous";
    case Verdict::kFault: return "Fault";
    case Verdict::kBudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

const char* to_string(PointVerdictKind k) {
  switch (k) {
    case PointVerdictKind::kPass: return "pass";
    case PointVerdictKind::kPreViolation: return "pre-violation";
    case PointVerdictKind::kPostViolation: return "post-violation";
    case PointVerdictKind::kFault: return "fault";
    case PointVerdictKind::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

std::string fault_detail(const RunResult& r) {
  return "runtime fault at statement " + std::to_string(r.fault->stmt_id) + ": " +
         r.fault->message;
}

std::string budget_detail(Int budget) {
  return "step budget of " + std::to_string(budget) + " exceeded";
}

}  // namespace

VerificationResult check(const Program& p, const Contract& c, const Domain& dom,
                         Int step_budget) {
  const auto ins = p.in_params();
  if (dom.dimension() != ins.size()) {
    throw std::invalid_argument("domain " + dom.to_string() +
                                " must cover exactly the in-parameters of '" +
                                p.name + "'");
  }
  for (const auto& name : ins) {
    if (!dom.has(name)) {
      throw std::invalid_argument("domain does not bound in-parameter '" + name + "'");
    }
  }

  VerificationResult result;
  result.domain_used = dom;
  // After the first failure the remaining points are still counted, so
  // checked_points is always the number of points satisfying the pre.
  bool failed = false;
  dom.for_each_point([&](const State& inputs) {
    if (failed) {
      try {
        if (eval_predicate(c.pre, inputs)) ++result.checked_points;
      } catch (const EvalError&) {
      }
      return true;
    }
    bool pre = false;
    try {
      pre = eval_predicate(c.pre, inputs);
    } catch (const EvalError& err) {
      result.verdict = Verdict::kFault;
      result.witness = Witness{inputs, inputs};
      result.detail = std::string("precondition undefined: ") + err.what();
      failed = true;
      return true;
    }
    if (!pre) return true;
    ++result.checked_points;

    RunResult run_result = run(p, inputs, step_budget);
    if (run_result.status == RunStatus::kFault) {
      result.verdict = Verdict::kFault;
      result.detail = fault_detail(run_result);
      result.witness = Witness{inputs, std::move(run_result.final_state)};
      failed = true;
      return true;
    }
    if (run_result.status == RunStatus::kBudgetExceeded) {
      result.verdict = Verdict::kBudgetExceeded;
      result.detail = budget_detail(step_budget);
      result.witness = Witness{inputs, std::move(run_result.final_state)};
      failed = true;
      return true;
    }
    try {
      if (!eval_predicate(c.post, run_result.final_state)) {
        result.verdict = Verdict::kCounterexample;
        result.detail = "postcondition " + c.post.to_string() + " is false";
        result.witness = Witness{inputs, std::move(run_result.final_state)};
        failed = true;
        return true;
      }
    } catch (const EvalError& err) {
      result.verdict = Verdict::kFault;
      result.detail = std::string("postcondition undefined: ") + err.what();
      result.witness = Witness{inputs, std::move(run_result.final_state)};
      failed = true;
      return true;
    }
    return true;
  });

  if (result.verdict == Verdict::kVerified && result.checked_points == 0) {
    result.verdict = Verdict::kVacuous;
    result.detail = "no point of the domain satisfies the precondition";
  }
  return result;
}

PointVerdict check_point(const Program& p, const Contract& c, const State& inputs,
                         Int step_budget) {
  PointVerdict out;
  try {
    if (!eval_predicate(c.pre, inputs)) {
      out.kind = PointVerdictKind::kPreViolation;
      out.final_state = inputs;
      out.detail = "inputs " + bindings_to_string(inputs) + " violate " + c.pre.to_string();
      return out;
    }
  } catch (const EvalError& err) {
    out.kind = PointVerdictKind::kFault;
    out.final_state = inputs;
    out.detail = std::string("precondition undefined: ") + err.what();
    return out;
  }
  RunResult r = run(p, inputs, step_budget);
  out.final_state = r.final_state;
  if (r.status == RunStatus::kFault) {
    out.kind = PointVerdictKind::kFault;
    out.detail = fault_detail(r);
    return out;
  }
  if (r.status == RunStatus::kBudgetExceeded) {
    out.kind = PointVerdictKind::kBudgetExceeded;
    out.detail = budget_detail(step_budget);
    return out;
  }
  try {
    if (!eval_predicate(c.post, r.final_state)) {
      out.kind = PointVerdictKind::kPostViolation;
      out.detail = "final state " + bindings_to_string(r.final_state) + " violates " +
                   c.post.to_string();
    }
  } catch (const EvalError& err) {
    out.kind = PointVerdictKind::kFault;
    out.detail = std::string("postcondition undefined: ") + err.what();
  }
  return out;
}

}  // namespace tddslicer
