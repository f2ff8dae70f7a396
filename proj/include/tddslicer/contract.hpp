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

#ifndef TDDSLICER_CONTRACT_HPP_
#define TDDSLICER_CONTRACT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/domain.hpp"
#include "tddslicer/predicate.hpp"

namespace tddslicer {

/// A simplified contract {pre}{post}: no invariants, no rescue clauses.
struct Contract {
  Predicate pre;
  Predicate post;
  std::optional<std::string> label;

  std::string to_string() const;
};

enum class TestKind { kNew, kRegression, kTriangulation };

const char* to_string(TestKind kind);
/// Throws std::invalid_argument on an unknown name.
TestKind parse_test_kind(std::string_view name);

struct TestCase {
  std::string name;
  State inputs;    // over the in-params
  State expected;  // over the out-params
  std::optional<TestKind> declared_kind;
};

enum class ScopeWaiver {
  kNone,
  /// Postcondition may also read locals; slice-level contracts only.
  kAllowLocals,
};

/// Pre may read in-params only; post may read in- and out-params (and
/// locals under the waiver). Throws ScopeError naming the offending
/// variable.
void validate_contract_scope(const Contract& c, const Program& program,
                             ScopeWaiver waiver = ScopeWaiver::kNone);

/// Throws ScopeError unless the test binds exactly the in- and out-params.
void validate_test_scope(const TestCase& t, const Program& program);

struct InstanceCheck {
  bool holds = false;
  bool pre_holds = false;
  bool post_holds = false;
  std::string explanation;
};

/// A test is an instance of a contract when its inputs satisfy the pre and
/// inputs together with the expected outputs satisfy the post. Throws
/// EvalError on unbound variables.
InstanceCheck is_instance(const TestCase& t, const Contract& c);

/// {c1.pre || c2.pre}{c1.post || c2.post}, built syntactically.
Contract union_of(const Contract& c1, const Contract& c2);

/// Left fold of union_of; `contracts` must be nonempty.
Contract union_of(std::span<const Contract> contracts);

/// Ranges for out-params during post-condition enumeration: every out-param
/// not listed in `overrides` gets the widest range of `inputs`.
Domain out_param_domain(const Domain& inputs, const std::vector<std::string>& outs,
                        const Domain& overrides = {});

struct SubsumptionResult {
  bool holds = false;
  QueryResult pre;
  QueryResult post;
};

/// c1 is subsumed by c2 when c1.pre implies c2.pre over `dom` and c1.post
/// implies c2.post over `dom` extended with `out_ranges`.
SubsumptionResult subsumed_by(const Contract& c1, const Contract& c2,
                              const Domain& dom, const Domain& out_ranges);

struct Classification {
  TestKind kind = TestKind::kNew;
  /// First contract in the history the test is an instance of, if any.
  std::optional<std::size_t> matched_index;
};

/// `regression` iff `t` is an instance of the union of `history`.
/// This is a point check at the test's own values, so no Domain is needed.
Classification classify_test(const TestCase& t, std::span<const Contract> history);

/// Declared triangulation tests are compatible with a regression result.
bool kind_matches(TestKind declared, TestKind classified);

}  // namespace tddslicer

#endif  // TDDSLICER_CONTRACT_HPP_
