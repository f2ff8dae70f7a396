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

#include "tddslicer/contract.hpp"

#include <stdexcept>

#include "tddslicer/error.hpp"

namespace tddslicer {

std::string Contract::to_string() const {
  return "{" + pre.to_string() + "} {" + post.to_string() + "}";
}

const char* to_string(TestKind kind) {
  switch (kind) {
    case TestKind::kNew: return "new";
    case TestKind::kRegression: return "regression";
    case TestKind::kTriangulation: return "triangulation";
  }
  return "?";
}

TestKind parse_test_kind(std::string_view name) {
  if (name == "new") return TestKind::kNew;
  if (name == "regression") return TestKind::kRegression;
  if (name == "triangulation") return TestKind::kTriangulation;
  throw std::invalid_argument("unknown test kind '" + std::string(name) +
                              "' (expected new, regression or triangulation)");
}

void validate_contract_scope(const Contract& c, const Program& program,
                             ScopeWaiver waiver) {
  for (const auto& v : free_vars(c.pre)) {
    if (!program.is_in_param(v)) {
      throw ScopeError("precondition '" + c.pre.to_string() + "' reads '" + v +
                       "', which is not an in-parameter of '" + program.name + "'");
    }
  }
  for (const auto& v : free_vars(c.post)) {
    const bool param = program.is_in_param(v) || program.is_out_param(v);
    const bool local = program.locals.count(v) > 0;
    if (param || (local && waiver == ScopeWaiver::kAllowLocals)) continue;
    throw ScopeError("postcondition '" + c.post.to_string() + "' reads '" + v +
                     (local ? "', a local (locals need a slice-level waiver)"
                            : "', which is not a parameter of '" + program.name + "'"));
  }
}

void validate_test_scope(const TestCase& t, const Program& program) {
  auto check = [&](const State& binding, const std::vector<std::string>& names,
                   const char* what) {
    if (binding.size() != names.size()) {
      throw ScopeError("test '" + t.name + "' must bind exactly the " + what +
                       " of '" + program.name + "'");
    }
    for (const auto& n : names) {
      if (!binding.count(n)) {
        throw ScopeError("test '" + t.name + "' does not bind " + what + " '" + n + "'");
      }
    }
  };
  check(t.inputs, program.in_params(), "in-parameters");
  check(t.expected, program.out_params(), "out-parameters");
}

InstanceCheck is_instance(const TestCase& t, const Contract& c) {
  InstanceCheck out;
  out.pre_holds = eval_predicate(c.pre, t.inputs);
  if (!out.pre_holds) {
    out.explanation = "inputs " + bindings_to_string(t.inputs) +
                      " violate the precondition " + c.pre.to_string();
    return out;
  }
  State joint = t.inputs;
  joint.insert(t.expected.begin(), t.expected.end());
  out.post_holds = eval_predicate(c.post, joint);
  out.holds = out.post_holds;
  out.explanation =
      out.holds ? "inputs satisfy the precondition and expected outputs " +
                      bindings_to_string(t.expected) + " satisfy the postcondition"
                : "expected outputs " + bindings_to_string(t.expected) +
                      " violate the postcondition " + c.post.to_string();
  return out;
}

Contract union_of(const Contract& c1, const Contract& c2) {
  return Contract{disjoin(c1.pre, c2.pre), disjoin(c1.post, c2.post), std::nullopt};
}

Contract union_of(std::span<const Contract> contracts) {
  if (contracts.empty()) throw std::invalid_argument("union of no contracts");
  Contract acc = contracts.front();
  for (std::size_t i = 1; i < contracts.size(); ++i) acc = union_of(acc, contracts[i]);
  acc.label = std::nullopt;
  return acc;
}

Domain out_param_domain(const Domain& inputs, const std::vector<std::string>& outs,
                        const Domain& overrides) {
  std::optional<Range> widest;
  for (const auto& [name, range] : inputs.ranges()) {
    if (!widest || range.size() > widest->size()) widest = range;
  }
  Domain out;
  for (const auto& name : outs) {
    if (overrides.has(name)) {
      out.set(name, overrides.at(name));
    } else if (widest) {
      out.set(name, *widest);
    } else {
      throw std::invalid_argument("no range available for out-parameter '" + name + "'");
    }
  }
  return out;
}

SubsumptionResult subsumed_by(const Contract& c1, const Contract& c2,
                              const Domain& dom, const Domain& out_ranges) {
  SubsumptionResult out;
  out.pre = implies(c1.pre, c2.pre, dom);
  out.post = implies(c1.post, c2.post, dom.merged(out_ranges));
  out.holds = out.pre.holds() && out.post.holds();
  return out;
}

Classification classify_test(const TestCase& t, std::span<const Contract> history) {
  Classification out;
  if (history.empty()) return out;
  auto instance = [&t](const Contract& c) {
    try {
      return is_instance(t, c).holds;
    } catch (const EvalError&) {
      return false;
    }
  };
  if (instance(union_of(history))) out.kind = TestKind::kRegression;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (instance(history[i])) {
      out.matched_index = i;
      break;
    }
  }
  return out;
}

bool kind_matches(TestKind declared, TestKind classified) {
  if (declared == TestKind::kTriangulation) return classified == TestKind::kRegression;
  return declared == classified;
}

}  // namespace tddslicer
