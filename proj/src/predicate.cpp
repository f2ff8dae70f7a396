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

#include "tddslicer/predicate.hpp"

#include <stdexcept>

#include "tddslicer/parser.hpp"
#include "tddslicer/printer.hpp"

namespace tddslicer {

Predicate::Predicate(ExprPtr expr) : expr_(std::move(expr)) {
  if (!expr_ || !is_boolean(*expr_)) {
    throw std::invalid_argument("a predicate must be a boolean expression");
  }
}

Predicate Predicate::truth() { return Predicate(make_bool(true)); }

Predicate Predicate::falsity() { return Predicate(make_bool(false)); }

std::string Predicate::to_string() const { return tddslicer::to_string(*expr_); }

Predicate parse_predicate(std::string_view text) {
  return Predicate(parse_condition(text, /*contract_syntax=*/true));
}

bool eval_predicate(const Predicate& pred, const State& s) {
  return eval_bool(pred.expr(), Env(s));
}

std::set<std::string> free_vars(const Predicate& pred) {
  return free_variables(pred.expr());
}

Predicate disjoin(const Predicate& a, const Predicate& b) {
  return Predicate(make_binary(BinaryOp::kOr, a.expr_ptr(), b.expr_ptr()));
}

Predicate conjoin(const Predicate& a, const Predicate& b) {
  return Predicate(make_binary(BinaryOp::kAnd, a.expr_ptr(), b.expr_ptr()));
}

Predicate negate(const Predicate& a) {
  return Predicate(make_unary(UnaryOp::kNot, a.expr_ptr()));
}

QueryResult implies(const Predicate& p1, const Predicate& p2, const Domain& dom) {
  for (const auto* p : {&p1, &p2}) {
    for (const auto& v : free_vars(*p)) {
      if (!dom.has(v)) {
        throw std::invalid_argument("variable '" + v + "' of '" + p->to_string() +
                                    "' is not bounded by the domain " +
                                    dom.to_string());
      }
    }
  }
  QueryResult result;
  dom.for_each_point([&](const State& point) {
    ++result.points;
    try {
      if (eval_predicate(p1, point) && !eval_predicate(p2, point)) {
        result.status = QueryStatus::kRefuted;
        result.witness = point;
        return false;
      }
    } catch (const EvalError& err) {
      result.status = QueryStatus::kUndefined;
      result.witness = point;
      result.fault = err.what();
      return false;
    }
    return true;
  });
  return result;
}

QueryResult is_tautology(const Predicate& p, const Domain& dom) {
  return implies(Predicate::truth(), p, dom);
}

}  // namespace tddslicer
