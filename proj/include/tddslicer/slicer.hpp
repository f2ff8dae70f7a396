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

#ifndef TDDSLICER_SLICER_HPP_
#define TDDSLICER_SLICER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/contract.hpp"
#include "tddslicer/error.hpp"
#include "tddslicer/interpreter.hpp"
#include "tddslicer/verifier.hpp"

namespace tddslicer {

// Specification-based slicing: a slice of S for {P}{Q} is any program
// obtained by deleting statements from S that still satisfies {P}{Q} over
// the Domain. Slices are found by deleting and re-verifying.

enum class UnitKind { kStatement, kElseClause };

/// Something that can be deleted: a statement (with its whole subtree) or
/// the else block of the If statement `anchor`.
struct DeletionUnit {
  StmtId anchor;
  UnitKind kind;

  auto operator<=>(const DeletionUnit&) const = default;
};

std::string to_string(const DeletionUnit& u);

/// One unit per statement plus one per If with a nonempty else, in textual
/// pre-order (an else clause sits between its then and else statements).
std::vector<DeletionUnit> deletable_units(const Program& p);

/// Removes the given units. Retained statements keep their ids. Units
/// nested in an already deleted unit are no-ops. Throws
/// std::invalid_argument for a unit that does not exist in `p`.
Program apply_deletion(const Program& p, const std::set<DeletionUnit>& deleted);

struct SliceRelation {
  bool holds = false;
  /// Units of the original whose deletion yields the candidate.
  std::set<DeletionUnit> deleted;
  /// Candidate statement id -> original statement id.
  std::map<StmtId, StmtId> id_map;
};

/// Whether `candidate` can be obtained from `original` by deletion alone.
/// Matching is structural, so a candidate re-parsed with renumbered ids is
/// still recognised.
SliceRelation is_slice_of(const Program& candidate, const Program& original,
                          bool require_same_signature = true);

enum class Strategy { kExhaustive, kGreedy };

const char* to_string(Strategy s);

inline constexpr std::size_t kDefaultExhaustiveCap = 16;

struct SliceOptions {
  Strategy strategy = Strategy::kExhaustive;
  Int step_budget = kDefaultStepBudget;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
};

struct SliceResult {
  std::vector<DeletionUnit> retained;  // deletable_units order
  std::vector<DeletionUnit> deleted;   // the complement, same order
  Program program;
  bool minimal = false;
  Strategy strategy = Strategy::kExhaustive;
  VerificationResult verification;
  std::uint64_t candidates_checked = 0;
};

class SliceError : public Error {
 public:
  enum class Reason { kOriginalNotVerified, kVacuous, kTooManyUnits };

  SliceError(Reason reason, std::string message,
             std::optional<VerificationResult> original = std::nullopt)
      : Error(std::move(message)), reason_(reason), original_(std::move(original)) {}

  Reason reason() const { return reason_; }
  const std::optional<VerificationResult>& original() const { return original_; }

 private:
  Reason reason_;
  std::optional<VerificationResult> original_;
};

/// Smallest (exhaustive) or a locally minimal (greedy) deletion-derived
/// program that is still Verified against `c` over `dom`.
///
/// Exhaustive tries retained sets by increasing size; among equal sizes the
/// lexicographically smallest sequence of (stmt_id, statement < else) keys
/// wins. Greedy makes one pass in reverse pre-order, keeping each deletion
/// that still verifies.
SliceResult slice(const Program& p, const Contract& c, const Domain& dom,
                  const SliceOptions& options = {});

struct ProjectionCheck {
  bool equal = false;
  Trajectory original;
  Trajectory sliced;  // ids mapped to the original's
  RunStatus original_status = RunStatus::kOk;
  RunStatus sliced_status = RunStatus::kOk;
};

/// Runs both programs on `inputs` and compares their trajectories projected
/// onto `vars`. A diagnostic only: specification-based slices need only agree
/// on final states within the contract, not on trajectories. Throws
/// std::invalid_argument unless `sliced` is a slice of `original`.
ProjectionCheck check_projection(const Program& original, const Program& sliced,
                                 const State& inputs,
                                 const std::set<std::string>& vars,
                                 Int step_budget = kDefaultStepBudget);

}  // namespace tddslicer

#endif  // TDDSLICER_SLICER_HPP_
