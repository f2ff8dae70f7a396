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

// A second, deliberately naive implementation of the language semantics used
// as a test oracle. It shares no code with the library: programs are built
// here, printed as source text and fed to the library parser.

#ifndef TDDSLICER_TESTS_SUPPORT_ORACLE_HPP_
#define TDDSLICER_TESTS_SUPPORT_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Vars = std::map<std::string, long long>;

struct E {
  enum Kind {
    kLit, kVar, kTrue, kFalse,
    kNeg, kNot,
    kAdd, kSub, kMul, kDiv, kMod, kPow,
    kLt, kLe, kGt, kGe, kEq, kNe,
    kAnd, kOr,
  };
  Kind kind = kLit;
  long long value = 0;
  std::string name;
  std::vector<E> kids;
};

E lit(long long v);
E var(const std::string& n);
E truth();
E falsity();
E un(E::Kind k, E a);
E bin(E::Kind k, E a, E b);

struct S {
  enum Kind { kAssign, kSkip, kIf, kWhile };
  Kind kind = kSkip;
  std::string target;
  E expr;
  std::vector<S> first;   // then block or loop body
  std::vector<S> second;  // else block
};

S assign(const std::string& target, E e);
S skip();
S if_(E cond, std::vector<S> then_block, std::vector<S> else_block = {});
S while_(E cond, std::vector<S> body);

struct Prog {
  std::string name = "f";
  std::vector<std::string> ins;
  std::vector<std::string> outs;
  std::vector<std::string> locals;
  std::vector<S> body;
};

/// Fully parenthesised source text in the library's concrete syntax.
std::string source(const E& e);
std::string source(const Prog& p);

/// Thrown for division by zero, negative exponents and overflow.
struct Fault {};

long long eval(const E& e, const Vars& v);
bool holds(const E& e, const Vars& v);

struct Run {
  enum Status { kOk, kFault, kBudget } status = kOk;
  Vars state;
};

Run run(const Prog& p, const Vars& inputs, long long budget);

/// Inclusive ranges; points are visited with variables in name order and the
/// last variable varying fastest.
using Box = std::map<std::string, std::pair<long long, long long>>;

std::vector<Vars> points(const Box& box);

struct Check {
  std::string verdict;  // Verified, Counterexample, Vacuous, Fault, BudgetExceeded
  std::optional<Vars> witness_inputs;
  std::uint64_t pre_points = 0;
};

Check check(const Prog& p, const E& pre, const E& post, const Box& box, long long budget);

/// Deletable units in pre-order: each statement and each nonempty else.
struct Unit {
  int parent = -1;
};

std::vector<Unit> units(const Prog& p);

/// Program with the units flagged in `deleted` removed.
Prog remove(const Prog& p, const std::vector<bool>& deleted);

/// Smallest number of surviving units over all 2^n deletion sets whose
/// result is Verified.
std::size_t optimal_slice_size(const Prog& p, const E& pre, const E& post, const Box& box,
                               long long budget);

// Random generation.

struct GenOptions {
  int max_statements = 3;
  bool loops = false;
  bool division = false;
  int max_depth = 2;
  long long literal_bound = 3;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);

  /// Integer expression over `vars`.
  E int_expr(const std::vector<std::string>& vars, int depth, const GenOptions& o);
  /// Linear comparison: c1*v1 + c2*v2 + c0 OP k, or a conjunction/disjunction of two.
  E linear_pred(const std::vector<std::string>& vars, long long bound = 3);
  E bool_expr(const std::vector<std::string>& vars, int depth, const GenOptions& o);
  std::vector<S> block(const Prog& p, int budget_statements, int depth, const GenOptions& o);
  /// Two in-params a, b; out-params u, v; local t.
  Prog program(const GenOptions& o);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Statement count plus nonempty else blocks.
std::size_t unit_count(const Prog& p);

}  // namespace oracle

#endif  // TDDSLICER_TESTS_SUPPORT_ORACLE_HPP_
