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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tddslicer/error.hpp"

namespace tddslicer {
namespace {

using fixtures::contract;

const Contract kThen = contract("a > b", "a > b && max == a");
const Contract kElse = contract("a <= b", "a <= b && max == b");

TestCase max_test(Int a, Int b, Int max) {
  return TestCase{"t", {{"a", a}, {"b", b}}, {{"max", max}}, std::nullopt};
}

TEST(Contract, Printing) {
  EXPECT_EQ(kThen.to_string(), "{a > b} {a > b && max == a}");
}

TEST(TestKind, Names) {
  EXPECT_STREQ(to_string(TestKind::kNew), "new");
  EXPECT_STREQ(to_string(TestKind::kRegression), "regression");
  EXPECT_STREQ(to_string(TestKind::kTriangulation), "triangulation");
  EXPECT_EQ(parse_test_kind("triangulation"), TestKind::kTriangulation);
  EXPECT_THROW(parse_test_kind("unit"), std::invalid_argument);
}

TEST(Scope, PreReadsInParamsOnly) {
  const Program p = fixtures::corpus_program("div/oracle.prog");
  EXPECT_NO_THROW(validate_contract_scope(contract("x > 0 && y > 0", "x == y * q + r"), p));
  EXPECT_THROW(validate_contract_scope(contract("q > 0", "TRUE"), p), ScopeError);
  EXPECT_THROW(validate_contract_scope(contract("TRUE", "t == 0"), p), ScopeError);
  EXPECT_NO_THROW(
      validate_contract_scope(contract("TRUE", "t == r"), p, ScopeWaiver::kAllowLocals));
  EXPECT_THROW(validate_contract_scope(contract("TRUE", "z == 0"), p, ScopeWaiver::kAllowLocals),
               ScopeError);
  EXPECT_NO_THROW(validate_contract_scope(contract("exists n in 0..2 : x == n", "TRUE"), p));
  try {
    validate_contract_scope(contract("TRUE", "t == 0"), p);
  } catch (const ScopeError& e) {
    EXPECT_NE(std::string(e.what()).find("'t'"), std::string::npos);
  }
}

TEST(Scope, TestsBindExactlyTheParameters) {
  const Program p = parse_program(fixtures::kMax);
  EXPECT_NO_THROW(validate_test_scope(max_test(1, 2, 2), p));
  TestCase missing{"t", {{"a", 1}}, {{"max", 1}}, std::nullopt};
  EXPECT_THROW(validate_test_scope(missing, p), ScopeError);
  TestCase wrong{"t", {{"a", 1}, {"c", 2}}, {{"max", 1}}, std::nullopt};
  EXPECT_THROW(validate_test_scope(wrong, p), ScopeError);
  TestCase extra{"t", {{"a", 1}, {"b", 2}}, {{"max", 1}, {"a", 1}}, std::nullopt};
  EXPECT_THROW(validate_test_scope(extra, p), ScopeError);
}

TEST(Instance, PreAndPostAtTheTestValues) {
  const InstanceCheck ok = is_instance(max_test(2, 1, 2), kThen);
  EXPECT_TRUE(ok.holds);
  EXPECT_TRUE(ok.pre_holds);
  EXPECT_TRUE(ok.post_holds);
  const InstanceCheck pre = is_instance(max_test(1, 2, 2), kThen);
  EXPECT_FALSE(pre.holds);
  EXPECT_FALSE(pre.pre_holds);
  const InstanceCheck post = is_instance(max_test(2, 1, 1), kThen);
  EXPECT_FALSE(post.holds);
  EXPECT_TRUE(post.pre_holds);
  EXPECT_FALSE(post.explanation.empty());
}

TEST(Union, Syntactic) {
  const Contract u = union_of(kThen, kElse);
  EXPECT_EQ(u.pre.to_string(), "a > b || a <= b");
  EXPECT_EQ(u.post.to_string(), "(a > b && max == a) || (a <= b && max == b)");
  const std::vector<Contract> three{kThen, kElse, contract("a == 0", "max == 0")};
  EXPECT_EQ(union_of(three).pre.to_string(), "a > b || a <= b || a == 0");
  EXPECT_THROW(union_of(std::span<const Contract>{}), std::invalid_argument);
}

TEST(OutParamDomain, WidestInputRangeUnlessOverridden) {
  const Domain in = parse_domain("x in 0..16, y in 1..9");
  EXPECT_EQ(out_param_domain(in, {"q", "r"}).to_string(), "q in 0..16, r in 0..16");
  EXPECT_EQ(out_param_domain(in, {"q", "r"}, parse_domain("r in 0..8")).to_string(),
            "q in 0..16, r in 0..8");
  EXPECT_THROW(out_param_domain(Domain{}, {"q"}), std::invalid_argument);
}

TEST(Subsumption, OperandsAreSubsumedByTheirUnion) {
  const Domain in = parse_domain("a in -8..8, b in -8..8");
  const Domain out = out_param_domain(in, {"max"});
  const Contract u = union_of(kThen, kElse);
  EXPECT_TRUE(subsumed_by(kThen, u, in, out).holds);
  EXPECT_TRUE(subsumed_by(kElse, u, in, out).holds);
  const SubsumptionResult back = subsumed_by(u, kThen, in, out);
  EXPECT_FALSE(back.holds);
  EXPECT_EQ(back.pre.status, QueryStatus::kRefuted);
  EXPECT_EQ(back.pre.witness, (State{{"a", -8}, {"b", -8}}));
}

TEST(Classify, RegressionIffInstanceOfHistoryUnion) {
  const std::vector<Contract> history{kThen};
  const Classification reg = classify_test(max_test(-1, -2, -1), history);
  EXPECT_EQ(reg.kind, TestKind::kRegression);
  EXPECT_EQ(reg.matched_index, 0u);
  const Classification fresh = classify_test(max_test(3, 4, 4), history);
  EXPECT_EQ(fresh.kind, TestKind::kNew);
  EXPECT_FALSE(fresh.matched_index.has_value());
  EXPECT_EQ(classify_test(max_test(3, 4, 4), {}).kind, TestKind::kNew);
  const std::vector<Contract> both{kThen, kElse};
  EXPECT_EQ(classify_test(max_test(3, 4, 4), both).matched_index, 1u);
}

TEST(Classify, FaultingContractsAreNotMatched) {
  const std::vector<Contract> history{contract("10 / a > 0", "max == a")};
  EXPECT_EQ(classify_test(max_test(0, 1, 0), history).kind, TestKind::kNew);
}

TEST(Classify, KindMatching) {
  EXPECT_TRUE(kind_matches(TestKind::kNew, TestKind::kNew));
  EXPECT_TRUE(kind_matches(TestKind::kTriangulation, TestKind::kRegression));
  EXPECT_FALSE(kind_matches(TestKind::kTriangulation, TestKind::kNew));
  EXPECT_FALSE(kind_matches(TestKind::kRegression, TestKind::kNew));
}

}  // namespace
}  // namespace tddslicer
