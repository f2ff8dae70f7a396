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

#include "tddslicer/eval.hpp"

#include <limits>

namespace tddslicer {

namespace {

[[noreturn]] void overflow(BinaryOp op) {
  throw EvalError(EvalError::Kind::kOverflow,
                  std::string("integer overflow in '") + op_symbol(op) + "'");
}

Int checked_pow(Int base, Int exponent) {
  if (exponent < 0) {
    throw EvalError(EvalError::Kind::kNegativeExponent,
                    "negative exponent " + std::to_string(exponent));
  }
  Int result = 1;
  while (exponent > 0) {
    if (exponent & 1) {
      if (__builtin_mul_overflow(result, base, &result)) overflow(BinaryOp::kPow);
    }
    exponent >>= 1;
    if (exponent > 0 && __builtin_mul_overflow(base, base, &base)) {
      overflow(BinaryOp::kPow);
    }
  }
  return result;
}

}  // namespace

std::optional<Int> Env::lookup(const std::string& name) const {
  for (const Env* e = this; e != nullptr; e = e->outer_) {
    if (e->name_ != nullptr && *e->name_ == name) return e->value_;
  }
  auto it = base_->find(name);
  if (it == base_->end()) return std::nullopt;
  return it->second;
}

Int checked_negate(Int v) {
  if (v == std::numeric_limits<Int>::min()) {
    throw EvalError(EvalError::Kind::kOverflow, "integer overflow in unary '-'");
  }
  return -v;
}

Int apply_arithmetic(BinaryOp op, Int lhs, Int rhs) {
  Int out = 0;
  switch (op) {
    case BinaryOp::kAdd:
      if (__builtin_add_overflow(lhs, rhs, &out)) overflow(op);
      return out;
    case BinaryOp::kSub:
      if (__builtin_sub_overflow(lhs, rhs, &out)) overflow(op);
      return out;
    case BinaryOp::kMul:
      if (__builtin_mul_overflow(lhs, rhs, &out)) overflow(op);
      return out;
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      if (rhs == 0) {
        throw EvalError(EvalError::Kind::kDivisionByZero,
                        op == BinaryOp::kDiv ? "division by zero" : "modulo by zero");
      }
      if (lhs == std::numeric_limits<Int>::min() && rhs == -1) {
        if (op == BinaryOp::kMod) return 0;
        overflow(op);
      }
      // C++ integer division truncates toward zero, and a == (a/b)*b + a%b.
      return op == BinaryOp::kDiv ? lhs / rhs : lhs % rhs;
    case BinaryOp::kPow:
      return checked_pow(lhs, rhs);
    default:
      break;
  }
  throw EvalError(EvalError::Kind::kOverflow,
                  std::string("'") + op_symbol(op) + "' is not arithmetic");
}

Int eval_int(const Expr& e, const Env& env) {
  if (const auto* lit = std::get_if<IntLit>(&e.node)) return lit->value;
  if (const auto* v = std::get_if<VarRef>(&e.node)) {
    if (auto value = env.lookup(v->name)) return *value;
    throw EvalError(EvalError::Kind::kUnbound, "unbound variable '" + v->name + "'");
  }
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    if (u->op == UnaryOp::kNeg) return checked_negate(eval_int(*u->operand, env));
  }
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    if (is_arithmetic(b->op)) {
      const Int lhs = eval_int(*b->lhs, env);
      const Int rhs = eval_int(*b->rhs, env);
      return apply_arithmetic(b->op, lhs, rhs);
    }
  }
  throw EvalError(EvalError::Kind::kUnbound, "boolean expression used as integer");
}

bool eval_bool(const Expr& e, const Env& env) {
  if (const auto* lit = std::get_if<BoolLit>(&e.node)) return lit->value;
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    if (u->op == UnaryOp::kNot) return !eval_bool(*u->operand, env);
  }
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::kAnd:
        return eval_bool(*b->lhs, env) && eval_bool(*b->rhs, env);
      case BinaryOp::kOr:
        return eval_bool(*b->lhs, env) || eval_bool(*b->rhs, env);
      default:
        break;
    }
    if (is_comparison(b->op)) {
      const Int lhs = eval_int(*b->lhs, env);
      const Int rhs = eval_int(*b->rhs, env);
      switch (b->op) {
        case BinaryOp::kEq: return lhs == rhs;
        case BinaryOp::kNe: return lhs != rhs;
        case BinaryOp::kLt: return lhs < rhs;
        case BinaryOp::kLe: return lhs <= rhs;
        case BinaryOp::kGt: return lhs > rhs;
        default: return lhs >= rhs;
      }
    }
  }
  if (const auto* q = std::get_if<Exists>(&e.node)) {
    for (Int n = q->lo;; ++n) {
      if (eval_bool(*q->body, Env(env, q->var, n))) return true;
      if (n == q->hi) break;
    }
    return false;
  }
  throw EvalError(EvalError::Kind::kUnbound, "integer expression used as condition");
}

}  // namespace tddslicer
