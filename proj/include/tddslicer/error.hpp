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

#ifndef TDDSLICER_ERROR_HPP_
#define TDDSLICER_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tddslicer {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourcePos {
  int line = 1;
  int column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, std::string expected, std::string found);

  SourcePos pos() const { return pos_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::string expected_;
  std::string found_;
};

/// Duplicate identifiers, undeclared variables, contract scope violations.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Raised while evaluating an expression.
class EvalError : public Error {
 public:
  enum class Kind { kUnbound, kDivisionByZero, kNegativeExponent, kOverflow };

  EvalError(Kind kind, std::string message)
      : Error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace tddslicer

#endif  // TDDSLICER_ERROR_HPP_
