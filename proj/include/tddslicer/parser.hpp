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

#ifndef TDDSLICER_PARSER_HPP_
#define TDDSLICER_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/error.hpp"

namespace tddslicer {

/// Parses a `.prog` procedure. Statement ids are assigned in pre-order
/// starting at 1. Throws SyntaxError or ScopeError.
Program parse_program(std::string_view text);

/// Parses a boolean condition spanning the whole of `text`.
///
/// With `contract_syntax` the condition may also use TRUE, FALSE and
/// bounded existentials; program conditions may not. No scope checking is
/// done here; callers decide which free variables are legal.
ExprPtr parse_condition(std::string_view text, bool contract_syntax);

struct LintWarning {
  StmtId stmt_id;
  std::string message;
};

/// Assignments to in-parameters. Legal, but contracts that read in-params
/// in a postcondition assume they are unmodified.
std::vector<LintWarning> lint_program(const Program& program);

}  // namespace tddslicer

#endif  // TDDSLICER_PARSER_HPP_
