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

#include "lexer.hpp"

#include <array>
#include <cctype>
#include <limits>

namespace tddslicer {

namespace {

std::string format_pos(SourcePos pos) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column);
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string expected, std::string found)
    : Error(format_pos(pos) + ": expected " + expected + " but found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace detail {

namespace {

constexpr std::array<std::string_view, 11> kKeywords = {
    "proc", "in", "out", "var", "skip", "if", "else", "while", "exists",
    "TRUE", "FALSE"};

constexpr std::array<std::string_view, 8> kTwoCharSymbols = {
    ":=", "==", "!=", "<=", ">=", "&&", "||", ".."};

constexpr std::string_view kOneCharSymbols = "(){},;:+-*/%^<>!=";

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }

    Token tok{TokenKind::kSymbol, "", pos};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tok.text = std::string(text.substr(i, j - i));
      tok.kind = is_keyword(tok.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      Int value = 0;
      bool overflow = false;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        const Int digit = text[j] - '0';
        if (value > (std::numeric_limits<Int>::max() - digit) / 10) overflow = true;
        if (!overflow) value = value * 10 + digit;
        ++j;
      }
      tok.kind = TokenKind::kInt;
      tok.text = std::string(text.substr(i, j - i));
      tok.value = value;
      tok.exceeds_int64 = overflow;
      advance(j - i);
    } else {
      bool matched = false;
      for (auto sym : kTwoCharSymbols) {
        if (text.substr(i, 2) == sym) {
          tok.text = std::string(sym);
          matched = true;
          break;
        }
      }
      if (!matched && kOneCharSymbols.find(c) != std::string_view::npos) {
        tok.text = std::string(1, c);
        matched = true;
      }
      if (!matched) {
        throw SyntaxError(pos, "a token", "character '" + std::string(1, c) + "'");
      }
      advance(tok.text.size());
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::kEnd, "", pos});
  return out;
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kIdent:
      return "identifier '" + tok.text + "'";
    case TokenKind::kInt:
      return "integer " + tok.text;
    default:
      return "'" + tok.text + "'";
  }
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const std::size_t at = index_ + ahead;
  return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& tok = peek();
  if (index_ < tokens_.size() - 1) ++index_;
  return tok;
}

bool TokenStream::is_symbol(std::string_view sym, std::size_t ahead) const {
  const Token& tok = peek(ahead);
  return tok.kind == TokenKind::kSymbol && tok.text == sym;
}

bool TokenStream::is_keyword(std::string_view kw, std::size_t ahead) const {
  const Token& tok = peek(ahead);
  return tok.kind == TokenKind::kKeyword && tok.text == kw;
}

bool TokenStream::accept_symbol(std::string_view sym) {
  if (!is_symbol(sym)) return false;
  next();
  return true;
}

bool TokenStream::accept_keyword(std::string_view kw) {
  if (!is_keyword(kw)) return false;
  next();
  return true;
}

void TokenStream::expect_symbol(std::string_view sym) {
  if (!accept_symbol(sym)) fail("'" + std::string(sym) + "'");
}

void TokenStream::expect_keyword(std::string_view kw) {
  if (!accept_keyword(kw)) fail("'" + std::string(kw) + "'");
}

void TokenStream::expect_end() {
  if (!at_end()) fail("end of input");
}

std::string TokenStream::expect_ident() {
  if (peek().kind != TokenKind::kIdent) fail("identifier");
  return next().text;
}

Int TokenStream::expect_signed_int() {
  const bool negative = accept_symbol("-");
  const Token& tok = peek();
  if (tok.kind != TokenKind::kInt) fail("integer literal");
  if (tok.exceeds_int64) fail("integer literal within 64-bit range");
  next();
  return negative ? -tok.value : tok.value;
}

void TokenStream::fail(std::string expected) const {
  throw SyntaxError(peek().pos, std::move(expected), describe(peek()));
}

}  // namespace detail
}  // namespace tddslicer
