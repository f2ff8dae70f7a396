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

#ifndef TDDSLICER_PREDICATE_HPP_
#define TDDSLICER_PREDICATE_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tddslicer/ast.hpp"
#include "tddslicer/domain.hpp"
#include "tddslicer/eval.hpp"

namespace tddslicer {

/// A boolean contract formula. Immutable; copies share the tree.
class Predicate {
 public:
  /// Throws std::invalid_argument unless `expr` is boolean.
  explicit Predicate(ExprPtr expr);

  static Predicate truth();
  static Predicate falsity();

  const Expr& expr() const { return *expr_; }
  const ExprPtr& expr_ptr() const { return expr_; }
  std::string to_string() const;

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return same_expr(a.expr_, b.expr_);
  }

 private:
  ExprPtr expr_;
};

/// Throws SyntaxError; existentials need an explicit literal range.
Predicate parse_predicate(std::string_view text);

/// Short-circuit semantics; existentials enumerate their range in ascending
/// order. Throws EvalError on unbound variables and arithmetic faults.
bool eval_predicate(const Predicate& pred, const State& s);

std::set<std::string> free_vars(const Predicate& pred);

Predicate disjoin(const Predicate& a, const Predicate& b);
Predicate conjoin(const Predicate& a, const Predicate& b);
Predicate negate(const Predicate& a);

enum class QueryStatus {
  kHolds,
  kRefuted,
  /// Some point made a predicate undefined (arithmetic fault).
  kUndefined,
};

struct QueryResult {
  QueryStatus status = QueryStatus::kHolds;
  /// First refuting or faulting point in enumeration order.
  std::optional<State> witness;
  std::string fault;
  std::uint64_t points = 0;

  bool holds() const { return status == QueryStatus::kHolds; }
};

/// Decides `p1 => p2` at every point of `dom`, enumerated in Domain order.
/// Throws std::invalid_argument when a free variable is not in `dom`.
QueryResult implies(const Predicate& p1, const Predicate& p2, const Domain& dom);

/// implies(TRUE, p, dom).
QueryResult is_tautology(const Predicate& p, const Domain& dom);

}  // namespace tddslicer

#endif  // TDDSLICER_PREDICATE_HPP_
