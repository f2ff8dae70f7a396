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

#ifndef TDDSLICER_SRC_LEXER_HPP_
#define TDDSLICER_SRC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/error.hpp"

namespace tddslicer::detail {

enum class TokenKind { kIdent, kKeyword, kInt, kSymbol, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  Int value = 0;  // kInt only; the magnitude, always non-negative
  bool exceeds_int64 = false;
};

bool is_keyword(std::string_view word);

/// Splits `text` into tokens, skipping whitespace and `//` comments.
/// The result always ends with a kEnd token.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector shared by the program, predicate, domain and
/// binding parsers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::kEnd; }

  bool is_symbol(std::string_view sym, std::size_t ahead = 0) const;
  bool is_keyword(std::string_view kw, std::size_t ahead = 0) const;
  bool accept_symbol(std::string_view sym);
  bool accept_keyword(std::string_view kw);

  void expect_symbol(std::string_view sym);
  void expect_keyword(std::string_view kw);
  void expect_end();
  std::string expect_ident();
  /// Optionally signed integer literal.
  Int expect_signed_int();

  [[noreturn]] void fail(std::string expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

std::string describe(const Token& tok);

}  // namespace tddslicer::detail

#endif  // TDDSLICER_SRC_LEXER_HPP_
