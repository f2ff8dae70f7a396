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


// Randomized properties, each checked against the independent oracle in
// tests/support or against an invariant of the library itself.

#include <gtest/gtest.h>

#include "bridge.hpp"
#include "oracle.hpp"
#include "tddslicer/contract.hpp"
#include "tddslicer/interpreter.hpp"
#include "tddslicer/printer.hpp"
#include "tddslicer/slicer.hpp"
#include "tddslicer/verifier.hpp"

namespace tddslicer {
namespace {

constexpr int kTrials = 300;
constexpr Int kBudget = 400;

RunStatus expected_status(oracle::Run::Status s) {
  switch (s) {
    case oracle::Run::kOk: return RunStatus::kOk;
    case oracle::Run::kFault: return RunStatus::kFault;
    case oracle::Run::kBudget: return RunStatus::kBudgetExceeded;
  }
  return RunStatus::kOk;
}

oracle::GenOptions rich() {
  oracle::GenOptions o;
  o.max_statements = 5;
  o.loops = true;
  o.division = true;
  return o;
}

State random_inputs(oracle::Gen& g) {
  return {{"a", g.uniform(-4, 4)}, {"b", g.uniform(-4, 4)}};
}

TEST(Property, InterpreterAgreesWithTheOracle) {
  oracle::Gen g(0x70726f70);
  for (int trial = 0; trial < kTrials; ++trial) {
    const oracle::Prog op = g.program(rich());
    const Program p = bridge::compile(op);
    for (int k = 0; k < 4; ++k) {
      const State in = random_inputs(g);
      SCOPED_TRACE(oracle::source(op) + " on " + bindings_to_string(in));
      const RunResult r = run(p, in, kBudget);
      const oracle::Run o = oracle::run(op, bridge::from_state(in), kBudget);
      ASSERT_EQ(r.status, expected_status(o.status));
      if (r.ok()) EXPECT_EQ(bridge::from_state(r.final_state), o.state);
    }
  }
}

TEST(Property, PrettyPrintRoundTrips) {
  oracle::Gen g(0x726f756e);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Program p = bridge::compile(g.program(rich()));
    const std::string text = pretty_print(p);
    SCOPED_TRACE(text);
    const Program again = parse_program(text);
    ASSERT_TRUE(again == p);
    EXPECT_EQ(pretty_print(again), text);
  }
}

TEST(Property, IdsArePreOrderFromOne) {
  oracle::Gen g(0x69647320);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Program p = bridge::compile(g.program(rich()));
    StmtId next = 1;
    for_each_stmt(p.body, [&](const Stmt& s) { EXPECT_EQ(s.id, next++); });
    EXPECT_EQ(next - 1, count_statements(p.body));
  }
}

TEST(Property, TrajectoryFoldsToTheFinalState) {
  oracle::Gen g(0x666f6c64);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Program p = bridge::compile(g.program(rich()));
    const State in = random_inputs(g);
    const RunResult r = run(p, in, kBudget);
    State folded = initial_state(p, in);
    for (const TrajectoryEntry& e : r.trajectory) folded[e.var] = e.value;
    EXPECT_EQ(folded, r.final_state) << pretty_print(p);
  }
}

TEST(Property, RunsAreDeterministicAndBudgetMonotone) {
  oracle::Gen g(0x62756467);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Program p = bridge::compile(g.program(rich()));
    const State in = random_inputs(g);
    const RunResult r = run(p, in, kBudget);
    const RunResult again = run(p, in, kBudget);
    EXPECT_EQ(again.trajectory, r.trajectory);
    EXPECT_EQ(again.steps, r.steps);
    if (r.status == RunStatus::kBudgetExceeded) {
      EXPECT_EQ(r.steps, kBudget + 1);
      continue;
    }
    EXPECT_LE(r.steps, kBudget);
    // Any budget at least the step count reproduces the run; one less does not.
    if (r.steps == 0) continue;
    const RunResult exact = run(p, in, r.steps);
    EXPECT_EQ(exact.status, r.status);
    EXPECT_EQ(exact.final_state, r.final_state);
    if (r.steps > 1) EXPECT_EQ(run(p, in, r.steps - 1).status, RunStatus::kBudgetExceeded);
  }
}

TEST(Property, DomainEnumerationMatchesTheOracle) {
  oracle::Gen g(0x646f6d73);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Box box;
    for (const char* v : {"c", "a", "b"}) {
      if (!g.coin(0.7)) continue;
      const long long lo = g.uniform(-3, 3);
      box[v] = {lo, lo + g.uniform(0, 3)};
    }
    std::vector<oracle::Vars> seen;
    bridge::to_domain(box).for_each_point([&](const State& s) {
      seen.push_back(bridge::from_state(s));
      return true;
    });
    EXPECT_EQ(seen, oracle::points(box));
  }
}

TEST(Property, ImplicationAgreesWithPointwiseEvaluation) {
  oracle::Gen g(0x696d706c);
  const oracle::Box box{{"a", {-3, 3}}, {"b", {-3, 3}}};
  const Domain dom = bridge::to_domain(box);
  for (int trial = 0; trial < kTrials; ++trial) {
    const oracle::E p1 = g.linear_pred({"a", "b"});
    const oracle::E p2 = g.linear_pred({"a", "b"});
    std::optional<oracle::Vars> first_refuting;
    for (const auto& pt : oracle::points(box)) {
      if (oracle::holds(p1, pt) && !oracle::holds(p2, pt)) {
        first_refuting = pt;
        break;
      }
    }
    const QueryResult r = implies(bridge::compile(p1), bridge::compile(p2), dom);
    SCOPED_TRACE(oracle::source(p1) + " => " + oracle::source(p2));
    ASSERT_NE(r.status, QueryStatus::kUndefined);
    EXPECT_EQ(r.holds(), !first_refuting.has_value());
    if (first_refuting) EXPECT_EQ(bridge::from_state(*r.witness), *first_refuting);
  }
}

TEST(Property, ContractsAreSubsumedByUnions) {
  oracle::Gen g(0x756e696f);
  const Domain in = parse_domain("a in -3..3, b in -3..3");
  const Domain out = parse_domain("u in -3..3, v in -3..3");
  for (int trial = 0; trial < 100; ++trial) {
    const Contract c1{bridge::compile(g.linear_pred({"a", "b"})),
                      bridge::compile(g.linear_pred({"a", "u"})), std::nullopt};
    const Contract c2{bridge::compile(g.linear_pred({"a", "b"})),
                      bridge::compile(g.linear_pred({"b", "v"})), std::nullopt};
    const Contract u = union_of(c1, c2);
    EXPECT_TRUE(subsumed_by(c1, u, in, out).holds);
    EXPECT_TRUE(subsumed_by(c2, u, in, out).holds);
    EXPECT_TRUE(subsumed_by(c1, c1, in, out).holds);
  }
}

TEST(Property, TestsClassifyAsRegressionIffTheHistoryUnionAdmitsThem) {
  oracle::Gen g(0x636c6173);
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<std::pair<oracle::E, oracle::E>> raw;
    std::vector<Contract> history;
    const int n = g.uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      raw.emplace_back(g.linear_pred({"a", "b"}), g.linear_pred({"a", "u"}));
      history.push_back(
          Contract{bridge::compile(raw.back().first), bridge::compile(raw.back().second),
                   std::nullopt});
    }
    const TestCase t{"t", random_inputs(g), {{"u", g.uniform(-4, 4)}}, std::nullopt};
    oracle::Vars joint = bridge::from_state(t.inputs);
    joint["u"] = t.expected.at("u");
    bool some_pre = false;
    bool some_post = false;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const bool pre = oracle::holds(raw[i].first, joint);
      const bool post = oracle::holds(raw[i].second, joint);
      some_pre = some_pre || pre;
      some_post = some_post || post;
      if (pre && post && !first) first = i;
    }
    const Classification cls = classify_test(t, history);
    EXPECT_EQ(cls.kind == TestKind::kRegression, some_pre && some_post);
    EXPECT_EQ(cls.matched_index, first);
  }
}

TEST(Property, DeletionsAreRecognisedAsSlices) {
  oracle::Gen g(0x64656c73);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Program p = bridge::compile(g.program(rich()));
    const std::vector<DeletionUnit> units = deletable_units(p);
    std::set<DeletionUnit> chosen;
    for (const DeletionUnit& u : units) {
      if (g.coin(0.3)) chosen.insert(u);
    }
    const Program sliced = apply_deletion(p, chosen);
    // Re-parsing renumbers ids; the relation must still be found.
    const Program reparsed = parse_program(pretty_print(sliced));
    const SliceRelation rel = is_slice_of(reparsed, p);
    SCOPED_TRACE(pretty_print(p) + "--- minus ---\n" + pretty_print(sliced));
    ASSERT_TRUE(rel.holds);
    EXPECT_EQ(pretty_print(apply_deletion(p, rel.deleted)), pretty_print(sliced));
    EXPECT_EQ(rel.id_map.size(), count_statements(reparsed.body));
  }
}

TEST(Property, SlicesVerifyAndAreNoLargerThanGreedyOnes) {
  oracle::Gen g(0x736c6373);
  oracle::GenOptions o;
  o.max_statements = 4;
  const oracle::Box box{{"a", {-2, 2}}, {"b", {-2, 2}}};
  const Domain dom = bridge::to_domain(box);
  int sliced = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const oracle::Prog op = g.program(o);
    const Program p = bridge::compile(op);
    const Contract c{bridge::compile(g.linear_pred({"a", "b"})),
                     bridge::compile(g.linear_pred({"a", "u"})), std::nullopt};
    const VerificationResult base = check(p, c, dom, 100);
    if (!base.verified()) continue;
    SliceOptions greedy;
    greedy.strategy = Strategy::kGreedy;
    greedy.step_budget = 100;
    SliceOptions exhaustive;
    exhaustive.step_budget = 100;
    const SliceResult e = slice(p, c, dom, exhaustive);
    const SliceResult gr = slice(p, c, dom, greedy);
    EXPECT_TRUE(check(e.program, c, dom, 100).verified());
    EXPECT_TRUE(check(gr.program, c, dom, 100).verified());
    EXPECT_TRUE(is_slice_of(e.program, p).holds);
    EXPECT_TRUE(is_slice_of(gr.program, p).holds);
    EXPECT_LE(e.retained.size(), gr.retained.size());
    EXPECT_EQ(e.retained.size() + e.deleted.size(), deletable_units(p).size());
    ++sliced;
  }
  EXPECT_GT(sliced, 0);
}

}  // namespace
}  // namespace tddslicer
