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

#include "tddslicer/ast.hpp"

#include <algorithm>

namespace tddslicer {

ExprPtr make_int(Int value) {
  return std::make_shared<const Expr>(Expr{IntLit{value}});
}

ExprPtr make_bool(bool value) {
  return std::make_shared<const Expr>(Expr{BoolLit{value}});
}

ExprPtr make_var(std::string name) {
  return std::make_shared<const Expr>(Expr{VarRef{std::move(name)}});
}

ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Unary{op, std::move(operand)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_exists(std::string var, Int lo, Int hi, ExprPtr body) {
  return std::make_shared<const Expr>(
      Expr{Exists{std::move(var), lo, hi, std::move(body)}});
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return true;
    default:
      return false;
  }
}

bool is_logical(BinaryOp op) {
  return op == BinaryOp::kAnd || op == BinaryOp::kOr;
}

bool is_arithmetic(BinaryOp op) { return !is_comparison(op) && !is_logical(op); }

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kPow: return "^";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

bool is_boolean(const Expr& e) {
  struct Visitor {
    bool operator()(const IntLit&) const { return false; }
    bool operator()(const BoolLit&) const { return true; }
    bool operator()(const VarRef&) const { return false; }
    bool operator()(const Unary& u) const { return u.op == UnaryOp::kNot; }
    bool operator()(const Binary& b) const { return !is_arithmetic(b.op); }
    bool operator()(const Exists&) const { return true; }
  };
  return std::visit(Visitor{}, e.node);
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, BoolLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return lhs.op == rhs.op && same_expr(lhs.operand, rhs.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && same_expr(lhs.lhs, rhs.lhs) &&
                 same_expr(lhs.rhs, rhs.rhs);
        } else {
          return lhs.var == rhs.var && lhs.lo == rhs.lo && lhs.hi == rhs.hi &&
                 same_expr(lhs.body, rhs.body);
        }
      },
      a.node);
}

namespace {

void collect_free(const Expr& e, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  if (const auto* v = std::get_if<VarRef>(&e.node)) {
    if (std::find(bound.begin(), bound.end(), v->name) == bound.end()) {
      out.insert(v->name);
    }
  } else if (const auto* u = std::get_if<Unary>(&e.node)) {
    collect_free(*u->operand, bound, out);
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    collect_free(*b->lhs, bound, out);
    collect_free(*b->rhs, bound, out);
  } else if (const auto* q = std::get_if<Exists>(&e.node)) {
    bound.push_back(q->var);
    collect_free(*q->body, bound, out);
    bound.pop_back();
  }
}

bool blocks_equal(const Block& a, const Block& b, bool with_ids);

bool stmts_equal(const Stmt& a, const Stmt& b, bool with_ids) {
  if (with_ids && a.id != b.id) return false;
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<Assign>(&a.node)) {
    const auto& y = std::get<Assign>(b.node);
    return x->target == y.target && same_expr(x->value, y.value);
  }
  if (const auto* x = std::get_if<If>(&a.node)) {
    const auto& y = std::get<If>(b.node);
    return same_expr(x->cond, y.cond) &&
           blocks_equal(x->then_block, y.then_block, with_ids) &&
           blocks_equal(x->else_block, y.else_block, with_ids);
  }
  if (const auto* x = std::get_if<While>(&a.node)) {
    const auto& y = std::get<While>(b.node);
    return same_expr(x->cond, y.cond) && blocks_equal(x->body, y.body, with_ids);
  }
  return true;  // Skip
}

bool blocks_equal(const Block& a, const Block& b, bool with_ids) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!stmts_equal(a[i], b[i], with_ids)) return false;
  }
  return true;
}

}  // namespace

std::set<std::string> free_variables(const Expr& e) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(e, bound, out);
  return out;
}

bool operator==(const Stmt& a, const Stmt& b) { return stmts_equal(a, b, true); }

bool same_shape(const Stmt& a, const Stmt& b) { return stmts_equal(a, b, false); }

bool same_shape(const Block& a, const Block& b) {
  return blocks_equal(a, b, false);
}

std::vector<std::string> Program::in_params() const {
  std::vector<std::string> out;
  for (const auto& p : params) {
    if (p.mode == ParamMode::kIn) out.push_back(p.name);
  }
  return out;
}

std::vector<std::string> Program::out_params() const {
  std::vector<std::string> out;
  for (const auto& p : params) {
    if (p.mode == ParamMode::kOut) out.push_back(p.name);
  }
  return out;
}

bool Program::is_in_param(const std::string& n) const {
  return std::any_of(params.begin(), params.end(), [&](const Param& p) {
    return p.name == n && p.mode == ParamMode::kIn;
  });
}

bool Program::is_out_param(const std::string& n) const {
  return std::any_of(params.begin(), params.end(), [&](const Param& p) {
    return p.name == n && p.mode == ParamMode::kOut;
  });
}

bool Program::has_variable(const std::string& n) const {
  return locals.count(n) > 0 ||
         std::any_of(params.begin(), params.end(),
                     [&](const Param& p) { return p.name == n; });
}

bool Program::same_signature(const Program& other) const {
  return name == other.name && params == other.params;
}

bool Program::operator==(const Program& other) const {
  return same_signature(other) && locals == other.locals &&
         blocks_equal(body, other.body, true);
}

std::size_t count_statements(const Block& block) {
  std::size_t n = 0;
  for_each_stmt(block, [&n](const Stmt&) { ++n; });
  return n;
}

}  // namespace tddslicer
