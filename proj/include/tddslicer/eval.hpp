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

#ifndef TDDSLICER_EVAL_HPP_
#define TDDSLICER_EVAL_HPP_

#include <map>
#include <optional>
#include <string>

#include "tddslicer/ast.hpp"
#include "tddslicer/error.hpp"

namespace tddslicer {

using State = std::map<std::string, Int>;

/// Variable lookup: a base State plus a chain of existential bindings that
/// shadow it.
class Env {
 public:
  explicit Env(const State& base) : base_(&base) {}
  Env(const Env& outer, const std::string& name, Int value)
      : base_(outer.base_), outer_(&outer), name_(&name), value_(value) {}

  std::optional<Int> lookup(const std::string& name) const;

 private:
  const State* base_;
  const Env* outer_ = nullptr;
  const std::string* name_ = nullptr;
  Int value_ = 0;
};

/// Checked arithmetic; every fault throws EvalError.
Int apply_arithmetic(BinaryOp op, Int lhs, Int rhs);
Int checked_negate(Int v);

Int eval_int(const Expr& e, const Env& env);
bool eval_bool(const Expr& e, const Env& env);

}  // namespace tddslicer

#endif  // TDDSLICER_EVAL_HPP_
