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

#include "tddslicer/printer.hpp"

#include <sstream>

namespace tddslicer {

namespace {

// Precedence levels, loosest first. They mirror the parser's functions.
enum Prec : int {
  kTop = 0,
  kOr = 1,
  kAnd = 2,
  kNot = 3,
  kCmp = 4,
  kSum = 5,
  kTerm = 6,
  kFactor = 7,
  kPower = 8,
  kPrimary = 9,
};

int binary_prec(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return kOr;
    case BinaryOp::kAnd: return kAnd;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return kSum;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return kTerm;
    case BinaryOp::kPow: return kPower;
    default: return kCmp;
  }
}

int node_prec(const Expr& e) {
  if (const auto* lit = std::get_if<IntLit>(&e.node)) {
    return lit->value < 0 ? kFactor : kPrimary;
  }
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    return u->op == UnaryOp::kNeg ? kFactor : kNot;
  }
  if (const auto* b = std::get_if<Binary>(&e.node)) return binary_prec(b->op);
  if (std::holds_alternative<Exists>(e.node)) return kNot;
  return kPrimary;
}

void emit(const Expr& e, std::ostream& os);

void emit_child(const Expr& e, int needed, std::ostream& os) {
  // An existential body runs to the end of the text, so it only goes bare
  // at the very top.
  const bool quantifier = std::holds_alternative<Exists>(e.node);
  if (node_prec(e) < needed || (quantifier && needed > kTop)) {
    os << '(';
    emit(e, os);
    os << ')';
  } else {
    emit(e, os);
  }
}

void emit(const Expr& e, std::ostream& os) {
  std::visit(
      [&os](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          os << n.value;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          os << (n.value ? "TRUE" : "FALSE");
        } else if constexpr (std::is_same_v<T, VarRef>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          if (n.op == UnaryOp::kNeg) {
            os << '-';
            const bool nested_minus = node_prec(*n.operand) == kFactor;
            emit_child(*n.operand, nested_minus ? kPower : kFactor, os);
          } else {
            os << '!';
            emit_child(*n.operand, std::holds_alternative<Binary>(n.operand->node)
                                       ? kPrimary
                                       : kNot,
                       os);
          }
        } else if constexpr (std::is_same_v<T, Binary>) {
          int lhs_needed = kPrimary;
          int rhs_needed = kPrimary;
          switch (binary_prec(n.op)) {
            case kOr:
              lhs_needed = kOr;
              rhs_needed = kAnd;
              break;
            case kAnd:
              lhs_needed = kAnd;
              rhs_needed = kNot;
              break;
            case kCmp:
              lhs_needed = rhs_needed = kSum;
              break;
            case kSum:
              lhs_needed = kSum;
              rhs_needed = kTerm;
              break;
            case kTerm:
              lhs_needed = kTerm;
              rhs_needed = kFactor;
              break;
            case kPower:
              lhs_needed = kPrimary;
              rhs_needed = kFactor;
              break;
          }
          auto side = [&](const Expr& child, int needed) {
            const bool readability_parens =
                n.op == BinaryOp::kOr && std::holds_alternative<Binary>(child.node) &&
                std::get<Binary>(child.node).op == BinaryOp::kAnd;
            emit_child(child, readability_parens ? kNot : needed, os);
          };
          side(*n.lhs, lhs_needed);
          if (n.op == BinaryOp::kPow) {
            os << '^';
          } else {
            os << ' ' << op_symbol(n.op) << ' ';
          }
          side(*n.rhs, rhs_needed);
        } else {
          os << "exists " << n.var << " in " << n.lo << ".." << n.hi << " : ";
          emit(*n.body, os);
        }
      },
      e.node);
}

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void emit_block(const Block& block, int depth, std::ostream& os);

void emit_stmt(const Stmt& s, int depth, std::ostream& os) {
  indent(os, depth);
  if (const auto* a = std::get_if<Assign>(&s.node)) {
    os << a->target << " := " << to_string(*a->value) << ";\n";
  } else if (std::holds_alternative<Skip>(s.node)) {
    os << "skip;\n";
  } else if (const auto* i = std::get_if<If>(&s.node)) {
    os << "if (" << to_string(*i->cond) << ") ";
    emit_block(i->then_block, depth, os);
    if (!i->else_block.empty()) {
      os << " else ";
      emit_block(i->else_block, depth, os);
    }
    os << '\n';
  } else if (const auto* w = std::get_if<While>(&s.node)) {
    os << "while (" << to_string(*w->cond) << ") ";
    emit_block(w->body, depth, os);
    os << '\n';
  }
}

// Emits `{ ... }` without a trailing newline; the opening brace continues
// the current line.
void emit_block(const Block& block, int depth, std::ostream& os) {
  if (block.empty()) {
    os << "{ }";
    return;
  }
  os << "{\n";
  for (const Stmt& s : block) emit_stmt(s, depth + 1, os);
  indent(os, depth);
  os << '}';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  emit(e, os);
  return os.str();
}

std::string pretty_print(const Program& program) {
  std::ostringstream os;
  os << "proc " << program.name << '(';
  for (std::size_t i = 0; i < program.params.size(); ++i) {
    if (i) os << ", ";
    const Param& p = program.params[i];
    os << (p.mode == ParamMode::kIn ? "in " : "out ") << p.name;
  }
  os << ") ";
  if (program.body.empty() && program.locals.empty()) {
    os << "{ }\n";
    return os.str();
  }
  os << "{\n";
  if (!program.locals.empty()) {
    os << "  var ";
    bool first = true;
    for (const auto& local : program.locals) {
      if (!first) os << ", ";
      os << local;
      first = false;
    }
    os << ";\n";
  }
  for (const Stmt& s : program.body) emit_stmt(s, 1, os);
  os << "}\n";
  return os.str();
}

}  // namespace tddslicer
