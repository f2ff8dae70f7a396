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

#include "tddslicer/parser.hpp"

#include <map>

#include "lexer.hpp"

namespace tddslicer {

namespace {

using detail::Token;
using detail::TokenKind;
using detail::TokenStream;

struct Use {
  std::string name;
  SourcePos pos;
};

// Recursive descent, one function per precedence level:
//
//   or     := and ('||' and)*
//   and    := not ('&&' not)*
//   not    := '!' not | 'exists' IDENT 'in' INT '..' INT ':' or | cmp
//   cmp    := sum (relop sum)?
//   sum    := term (('+' | '-') term)*
//   term   := factor (('*' | '/' | '%') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' factor)?
//
// Operand types are checked as nodes are built.
class Parser {
 public:
  Parser(std::string_view text, bool contract_syntax)
      : ts_(detail::tokenize(text)), contract_syntax_(contract_syntax) {}

  ExprPtr condition() {
    const SourcePos at = ts_.peek().pos;
    ExprPtr e = parse_or();
    require_bool(e, at);
    return e;
  }

  Program program() {
    Program p;
    ts_.expect_keyword("proc");
    p.name = ts_.expect_ident();
    ts_.expect_symbol("(");
    do {
      Param param;
      if (ts_.accept_keyword("in")) {
        param.mode = ParamMode::kIn;
      } else if (ts_.accept_keyword("out")) {
        param.mode = ParamMode::kOut;
      } else {
        ts_.fail("'in' or 'out'");
      }
      const SourcePos at = ts_.peek().pos;
      param.name = ts_.expect_ident();
      declare(param.name, at);
      p.params.push_back(std::move(param));
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(")");
    p.body = block(p);
    ts_.expect_end();

    if (p.out_params().empty()) {
      throw ScopeError("procedure '" + p.name + "' has no out-parameter");
    }
    for (const Use& use : uses_) {
      if (!declared_.count(use.name)) {
        throw ScopeError("line " + std::to_string(use.pos.line) + ", column " +
                         std::to_string(use.pos.column) +
                         ": use of undeclared variable '" + use.name + "'");
      }
    }
    return p;
  }

  void expect_end() { ts_.expect_end(); }

 private:
  void declare(const std::string& name, SourcePos at) {
    auto [it, inserted] = declared_.emplace(name, at);
    if (!inserted) {
      throw ScopeError("line " + std::to_string(at.line) + ", column " +
                       std::to_string(at.column) + ": duplicate identifier '" +
                       name + "'");
    }
  }

  Block block(Program& p) {
    ts_.expect_symbol("{");
    Block out;
    while (!ts_.is_symbol("}")) {
      if (ts_.at_end()) ts_.fail("'}'");
      if (ts_.accept_keyword("var")) {
        do {
          const SourcePos at = ts_.peek().pos;
          std::string name = ts_.expect_ident();
          declare(name, at);
          p.locals.insert(std::move(name));
        } while (ts_.accept_symbol(","));
        ts_.expect_symbol(";");
        continue;
      }
      out.push_back(statement(p));
    }
    ts_.expect_symbol("}");
    return out;
  }

  Stmt statement(Program& p) {
    Stmt s;
    s.id = ++next_id_;
    if (ts_.accept_keyword("skip")) {
      ts_.expect_symbol(";");
      s.node = Skip{};
    } else if (ts_.accept_keyword("if")) {
      If node;
      node.cond = paren_condition();
      node.then_block = block(p);
      if (ts_.accept_keyword("else")) node.else_block = block(p);
      s.node = std::move(node);
    } else if (ts_.accept_keyword("while")) {
      While node;
      node.cond = paren_condition();
      node.body = block(p);
      s.node = std::move(node);
    } else if (ts_.peek().kind == TokenKind::kIdent) {
      const SourcePos at = ts_.peek().pos;
      Assign node;
      node.target = ts_.expect_ident();
      uses_.push_back({node.target, at});
      ts_.expect_symbol(":=");
      const SourcePos expr_at = ts_.peek().pos;
      node.value = parse_or();
      require_int(node.value, expr_at);
      ts_.expect_symbol(";");
      s.node = std::move(node);
    } else {
      ts_.fail("statement");
    }
    return s;
  }

  ExprPtr paren_condition() {
    ts_.expect_symbol("(");
    ExprPtr c = condition();
    ts_.expect_symbol(")");
    return c;
  }

  static void require_bool(const ExprPtr& e, SourcePos at) {
    if (!is_boolean(*e)) throw SyntaxError(at, "boolean expression", "integer expression");
  }

  static void require_int(const ExprPtr& e, SourcePos at) {
    if (is_boolean(*e)) throw SyntaxError(at, "integer expression", "boolean expression");
  }

  ExprPtr parse_or() {
    SourcePos at = ts_.peek().pos;
    ExprPtr lhs = parse_and();
    while (ts_.is_symbol("||")) {
      require_bool(lhs, at);
      ts_.next();
      at = ts_.peek().pos;
      ExprPtr rhs = parse_and();
      require_bool(rhs, at);
      lhs = make_binary(BinaryOp::kOr, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_and() {
    SourcePos at = ts_.peek().pos;
    ExprPtr lhs = parse_not();
    while (ts_.is_symbol("&&")) {
      require_bool(lhs, at);
      ts_.next();
      at = ts_.peek().pos;
      ExprPtr rhs = parse_not();
      require_bool(rhs, at);
      lhs = make_binary(BinaryOp::kAnd, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (ts_.accept_symbol("!")) {
      const SourcePos at = ts_.peek().pos;
      ExprPtr operand = parse_not();
      require_bool(operand, at);
      return make_unary(UnaryOp::kNot, std::move(operand));
    }
    if (ts_.is_keyword("exists")) {
      if (!contract_syntax_) ts_.fail("program condition (quantifiers are contract-only)");
      ts_.next();
      std::string var = ts_.expect_ident();
      if (!ts_.accept_keyword("in")) {
        ts_.fail("'in' and an explicit literal range after the bound variable");
      }
      const SourcePos range_at = ts_.peek().pos;
      const Int lo = ts_.expect_signed_int();
      ts_.expect_symbol("..");
      const Int hi = ts_.expect_signed_int();
      if (lo > hi) {
        throw SyntaxError(range_at, "range with lo <= hi",
                          std::to_string(lo) + ".." + std::to_string(hi));
      }
      ts_.expect_symbol(":");
      const SourcePos body_at = ts_.peek().pos;
      ExprPtr body = parse_or();
      require_bool(body, body_at);
      return make_exists(std::move(var), lo, hi, std::move(body));
    }
    return parse_cmp();
  }

  ExprPtr parse_cmp() {
    const SourcePos at = ts_.peek().pos;
    ExprPtr lhs = parse_sum();
    static const std::map<std::string, BinaryOp, std::less<>> kRelops = {
        {"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}, {"<", BinaryOp::kLt},
        {"<=", BinaryOp::kLe}, {">", BinaryOp::kGt},  {">=", BinaryOp::kGe}};
    const Token& tok = ts_.peek();
    if (tok.kind != TokenKind::kSymbol) return lhs;
    auto it = kRelops.find(tok.text);
    if (it == kRelops.end()) return lhs;
    require_int(lhs, at);
    ts_.next();
    const SourcePos rhs_at = ts_.peek().pos;
    ExprPtr rhs = parse_sum();
    require_int(rhs, rhs_at);
    return make_binary(it->second, std::move(lhs), std::move(rhs));
  }

  ExprPtr parse_sum() {
    SourcePos at = ts_.peek().pos;
    ExprPtr lhs = parse_term();
    while (ts_.is_symbol("+") || ts_.is_symbol("-")) {
      const BinaryOp op = ts_.next().text == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      require_int(lhs, at);
      at = ts_.peek().pos;
      ExprPtr rhs = parse_term();
      require_int(rhs, at);
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    SourcePos at = ts_.peek().pos;
    ExprPtr lhs = parse_factor();
    while (ts_.is_symbol("*") || ts_.is_symbol("/") || ts_.is_symbol("%")) {
      const std::string sym = ts_.next().text;
      const BinaryOp op = sym == "*"   ? BinaryOp::kMul
                          : sym == "/" ? BinaryOp::kDiv
                                       : BinaryOp::kMod;
      require_int(lhs, at);
      at = ts_.peek().pos;
      ExprPtr rhs = parse_factor();
      require_int(rhs, at);
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    if (ts_.is_symbol("-")) {
      // A minus directly on a literal folds into a negative literal, unless
      // the literal is the base of a power: -2^2 is -(2^2).
      if (ts_.peek(1).kind == TokenKind::kInt && !ts_.is_symbol("^", 2)) {
        ts_.next();
        const Token& lit = ts_.next();
        if (lit.exceeds_int64) {
          throw SyntaxError(lit.pos, "integer literal within 64-bit range", lit.text);
        }
        return make_int(-lit.value);
      }
      ts_.next();
      const SourcePos at = ts_.peek().pos;
      ExprPtr operand = parse_factor();
      require_int(operand, at);
      return make_unary(UnaryOp::kNeg, std::move(operand));
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    const SourcePos at = ts_.peek().pos;
    ExprPtr base = parse_primary();
    if (!ts_.accept_symbol("^")) return base;
    require_int(base, at);
    const SourcePos exp_at = ts_.peek().pos;
    ExprPtr exponent = parse_factor();
    require_int(exponent, exp_at);
    return make_binary(BinaryOp::kPow, std::move(base), std::move(exponent));
  }

  ExprPtr parse_primary() {
    const Token& tok = ts_.peek();
    switch (tok.kind) {
      case TokenKind::kInt: {
        if (tok.exceeds_int64) {
          throw SyntaxError(tok.pos, "integer literal within 64-bit range", tok.text);
        }
        const Int v = tok.value;
        ts_.next();
        return make_int(v);
      }
      case TokenKind::kIdent: {
        uses_.push_back({tok.text, tok.pos});
        return make_var(ts_.next().text);
      }
      case TokenKind::kKeyword:
        if (contract_syntax_ && (tok.text == "TRUE" || tok.text == "FALSE")) {
          const bool v = tok.text == "TRUE";
          ts_.next();
          return make_bool(v);
        }
        break;
      case TokenKind::kSymbol:
        if (tok.text == "(") {
          ts_.next();
          ExprPtr inner = parse_or();
          ts_.expect_symbol(")");
          return inner;
        }
        break;
      case TokenKind::kEnd:
        break;
    }
    ts_.fail("expression");
  }

  TokenStream ts_;
  bool contract_syntax_;
  StmtId next_id_ = 0;
  std::map<std::string, SourcePos> declared_;
  std::vector<Use> uses_;
};

}  // namespace

Program parse_program(std::string_view text) {
  Parser parser(text, /*contract_syntax=*/false);
  return parser.program();
}

ExprPtr parse_condition(std::string_view text, bool contract_syntax) {
  Parser parser(text, contract_syntax);
  ExprPtr e = parser.condition();
  parser.expect_end();
  return e;
}

std::vector<LintWarning> lint_program(const Program& program) {
  std::vector<LintWarning> out;
  for_each_stmt(program.body, [&](const Stmt& s) {
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      if (program.is_in_param(a->target)) {
        out.push_back({s.id, "assignment to in-parameter '" + a->target + "'"});
      }
    }
  });
  return out;
}

}  // namespace tddslicer
