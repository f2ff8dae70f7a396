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

#ifndef TDDSLICER_AST_HPP_
#define TDDSLICER_AST_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tddslicer {

using Int = std::int64_t;
using StmtId = std::uint32_t;

// ---------------------------------------------------------------------------
// Expressions
//
// One expression tree covers integer arithmetic, boolean conditions and the
// contract extensions (TRUE/FALSE literals, bounded existentials). Nodes are
// immutable once built and shared through ExprPtr.
// ---------------------------------------------------------------------------

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kPow,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAnd,
  kOr,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  Int value;
};

struct BoolLit {
  bool value;
};

struct VarRef {
  std::string name;
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

/// `exists var in lo .. hi : body`, with literal bounds and lo <= hi.
struct Exists {
  std::string var;
  Int lo;
  Int hi;
  ExprPtr body;
};

struct Expr {
  std::variant<IntLit, BoolLit, VarRef, Unary, Binary, Exists> node;
};

ExprPtr make_int(Int value);
ExprPtr make_bool(bool value);
ExprPtr make_var(std::string name);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_exists(std::string var, Int lo, Int hi, ExprPtr body);

/// True when the node denotes a truth value rather than an integer.
bool is_boolean(const Expr& e);

bool is_comparison(BinaryOp op);
bool is_arithmetic(BinaryOp op);
bool is_logical(BinaryOp op);
const char* op_symbol(BinaryOp op);

/// Deep structural equality.
bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

/// Variables occurring free in `e` (bound existential variables excluded).
std::set<std::string> free_variables(const Expr& e);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using Block = std::vector<Stmt>;

struct Assign {
  std::string target;
  ExprPtr value;
};

struct Skip {};

struct If {
  ExprPtr cond;
  Block then_block;
  Block else_block;  // empty when the source has no else
};

struct While {
  ExprPtr cond;
  Block body;
};

struct Stmt {
  StmtId id = 0;
  std::variant<Assign, Skip, If, While> node;
};

/// Equality including statement ids.
bool operator==(const Stmt& a, const Stmt& b);

/// Equality of shape and expressions only, ignoring statement ids.
bool same_shape(const Stmt& a, const Stmt& b);
bool same_shape(const Block& a, const Block& b);

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

enum class ParamMode { kIn, kOut };

struct Param {
  std::string name;
  ParamMode mode;

  bool operator==(const Param&) const = default;
};

struct Program {
  std::string name;
  std::vector<Param> params;
  std::set<std::string> locals;
  Block body;

  std::vector<std::string> in_params() const;
  std::vector<std::string> out_params() const;
  bool is_in_param(const std::string& name) const;
  bool is_out_param(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  /// Same name and the same ordered parameter list.
  bool same_signature(const Program& other) const;

  bool operator==(const Program& other) const;
};

/// Calls `visit` on every statement in pre-order.
template <typename Fn>
void for_each_stmt(const Block& block, Fn&& visit) {
  for (const Stmt& s : block) {
    visit(s);
    if (const auto* branch = std::get_if<If>(&s.node)) {
      for_each_stmt(branch->then_block, visit);
      for_each_stmt(branch->else_block, visit);
    } else if (const auto* loop = std::get_if<While>(&s.node)) {
      for_each_stmt(loop->body, visit);
    }
  }
}

std::size_t count_statements(const Block& block);

}  // namespace tddslicer

#endif  // TDDSLICER_AST_HPP_
