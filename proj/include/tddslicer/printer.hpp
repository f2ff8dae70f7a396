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

#ifndef TDDSLICER_PRINTER_HPP_
#define TDDSLICER_PRINTER_HPP_

#include <string>

#include "tddslicer/ast.hpp"

namespace tddslicer {

/// Canonical text of an expression with the fewest parentheses that
/// re-parse to the same tree. Conjunctions under a disjunction and
/// non-atomic negation operands are parenthesized anyway, for readability.
std::string to_string(const Expr& e);

/// Canonical program text: two-space indentation, one statement per line,
/// all locals declared in a single `var` line at the top of the body, and
/// `{ }` for empty blocks. An empty else block is omitted.
std::string pretty_print(const Program& program);

}  // namespace tddslicer

#endif  // TDDSLICER_PRINTER_HPP_
