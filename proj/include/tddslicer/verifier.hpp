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

#ifndef TDDSLICER_VERIFIER_HPP_
#define TDDSLICER_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "tddslicer/ast.hpp"
#include "tddslicer/contract.hpp"
#include "tddslicer/domain.hpp"
#include "tddslicer/interpreter.hpp"

namespace tddslicer {

enum class Verdict { kVerified, kCounterexample, kVacuous, kFault, kBudgetExceeded };

const char* to_string(Verdict v);

struct Witness {
  State inputs;
  State final_state;
};

struct VerificationResult {
  Verdict verdict = Verdict::kVerified;
  /// Present for kCounterexample, kFault and kBudgetExceeded.
  std::optional<Witness> witness;
  /// Domain points that satisfied the precondition (and were executed).
  std::uint64_t checked_points = 0;
  Domain domain_used;
  std::string detail;

  bool verified() const { return verdict == Verdict::kVerified; }
};

/// Bounded total-correctness check of {c.pre} p {c.post}: every point of
/// `dom` satisfying the precondition is executed and the postcondition is
/// evaluated on the final state. The first failing point in enumeration
/// order becomes the witness; zero satisfying points is kVacuous.
///
/// `dom` must cover exactly the in-params of `p` (std::invalid_argument).
VerificationResult check(const Program& p, const Contract& c, const Domain& dom,
                         Int step_budget = kDefaultStepBudget);

enum class PointVerdictKind {
  kPass,
  kPreViolation,
  kPostViolation,
  kFault,
  kBudgetExceeded,
};

const char* to_string(PointVerdictKind k);

struct PointVerdict {
  PointVerdictKind kind = PointVerdictKind::kPass;
  State final_state;
  std::string detail;

  bool passed() const { return kind == PointVerdictKind::kPass; }
};

/// Single-input version of check().
PointVerdict check_point(const Program& p, const Contract& c, const State& inputs,
                         Int step_budget = kDefaultStepBudget);

}  // namespace tddslicer

#endif  // TDDSLICER_VERIFIER_HPP_
