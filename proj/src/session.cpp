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

#include "tddslicer/session.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tddslicer/parser.hpp"

namespace tddslicer {

const char* to_string(TestOutcome o) {
  switch (o) {
    case TestOutcome::kPass: return "pass";
    case TestOutcome::kFail: return "fail";
    case TestOutcome::kFault: return "fault";
    case TestOutcome::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

struct Section {
  std::optional<int> cycle;  // nullopt for [session]
  int line = 0;
  std::map<std::string, Entry> entries;
};

const std::set<std::string>& session_keys() {
  static const std::set<std::string> keys{"name", "final", "domain", "outrange"};
  return keys;
}

const std::set<std::string>& cycle_keys() {
  static const std::set<std::string> keys{
      "test.name", "test.inputs",   "test.expect", "test.kind",
      "contract.pre", "contract.post", "snapshot",    "note"};
  return keys;
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw SessionError(line_no, "malformed section header");
      const std::string_view header = trim(line.substr(1, line.size() - 2));
      Section section;
      section.line = line_no;
      if (header == "session") {
        if (!sections.empty()) {
          throw SessionError(line_no, "[session] must be the first section");
        }
      } else if (header.substr(0, 6) == "cycle ") {
        const std::string digits(trim(header.substr(6)));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 6) {
          throw SessionError(line_no, "malformed cycle index '" + digits + "'");
        }
        section.cycle = std::stoi(digits);
        if (sections.empty()) {
          throw SessionError(line_no, "[session] must precede the first cycle");
        }
      } else {
        throw SessionError(line_no, "unknown section [" + std::string(header) + "]");
      }
      sections.push_back(std::move(section));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SessionError(line_no, "expected 'key = value'");
    }
    if (sections.empty()) throw SessionError(line_no, "key outside of any section");
    Section& current = sections.back();
    const std::string key(trim(line.substr(0, eq)));
    const auto& allowed = current.cycle ? cycle_keys() : session_keys();
    if (!allowed.count(key)) {
      throw SessionError(line_no, "malformed key '" + key + "' in " +
                                      (current.cycle ? "a cycle" : "[session]"));
    }
    if (current.entries.count(key)) {
      throw SessionError(line_no, "duplicate key '" + key + "'");
    }
    current.entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
  }
  if (sections.empty()) throw SessionError(std::nullopt, "missing [session] section");
  return sections;
}

const Entry& require(const Section& s, const std::string& key) {
  const auto it = s.entries.find(key);
  if (it == s.entries.end()) {
    throw SessionError(s.line, "missing required key '" + key + "'");
  }
  return it->second;
}

const Entry* find(const Section& s, const std::string& key) {
  const auto it = s.entries.find(key);
  return it == s.entries.end() ? nullptr : &it->second;
}

// Runs `parse` and rewraps library errors with the session line number.
template <typename F>
auto at_line(int line, const std::string& what, F&& parse) {
  try {
    return parse();
  } catch (const SessionError&) {
    throw;
  } catch (const std::exception& err) {
    throw SessionError(line, what + ": " + err.what());
  }
}

class ProgramLoader {
 public:
  explicit ProgramLoader(std::filesystem::path base) : base_(std::move(base)) {}

  const Program& load(const Entry& entry) {
    const std::filesystem::path path = base_ / entry.value;
    const std::string key = path.lexically_normal().string();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SessionError(entry.line, "cannot open program file '" + key + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Program p = at_line(entry.line, "in '" + key + "'",
                        [&] { return parse_program(buf.str()); });
    return cache_.emplace(key, std::move(p)).first->second;
  }

 private:
  std::filesystem::path base_;
  std::map<std::string, Program> cache_;
};

}  // namespace

Session parse_session(std::string_view text, const std::filesystem::path& base_dir) {
  const std::vector<Section> sections = split_sections(text);
  ProgramLoader loader(base_dir);
  Session s;

  const Section& head = sections.front();
  s.name = require(head, "name").value;
  const Entry& final_entry = require(head, "final");
  s.final = loader.load(final_entry);
  s.final_path = final_entry.value;
  if (const Entry* e = find(head, "domain")) {
    s.dom = at_line(e->line, "bad domain", [&] { return parse_domain(e->value); });
    for (const auto& v : s.dom.vars()) {
      if (!s.final.is_in_param(v)) {
        throw SessionError(e->line, "domain variable '" + v +
                                        "' is not an in-parameter of '" + s.final.name + "'");
      }
    }
    for (const auto& v : s.final.in_params()) {
      if (!s.dom.has(v)) {
        throw SessionError(e->line, "domain does not bound in-parameter '" + v + "'");
      }
    }
  } else {
    for (const auto& v : s.final.in_params()) s.dom.set(v, Range{-8, 8});
  }
  if (const Entry* e = find(head, "outrange")) {
    s.out_ranges = at_line(e->line, "bad outrange", [&] { return parse_domain(e->value); });
    for (const auto& v : s.out_ranges.vars()) {
      if (!s.final.is_out_param(v)) {
        throw SessionError(e->line, "outrange variable '" + v +
                                        "' is not an out-parameter of '" + s.final.name + "'");
      }
    }
  }

  if (sections.size() == 1) throw SessionError(head.line, "session has no cycles");
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const Section& sec = sections[i];
    const int expected = static_cast<int>(i);
    if (*sec.cycle != expected) {
      throw SessionError(sec.line, "cycle indices must be contiguous from 1: expected [cycle " +
                                       std::to_string(expected) + "] but found [cycle " +
                                       std::to_string(*sec.cycle) + "]");
    }
    Cycle c;
    c.index = expected;

    const bool has_test = find(sec, "test.name") || find(sec, "test.inputs") ||
                          find(sec, "test.expect");
    if (has_test) {
      c.test.name = require(sec, "test.name").value;
      const Entry& inputs = require(sec, "test.inputs");
      c.test.inputs = at_line(inputs.line, "bad test.inputs",
                              [&] { return parse_bindings(inputs.value); });
      const Entry& expect = require(sec, "test.expect");
      c.test.expected = at_line(expect.line, "bad test.expect",
                                [&] { return parse_bindings(expect.value); });
      at_line(inputs.line, "test scope", [&] {
        validate_test_scope(c.test, s.final);
        return 0;
      });
    } else if (s.cycles.empty()) {
      throw SessionError(sec.line, "the first cycle must define a test");
    } else {
      c.test = s.cycles.back().test;
      c.test.declared_kind.reset();
      c.inherited_test = true;
    }
    if (const Entry* e = find(sec, "test.kind")) {
      c.test.declared_kind =
          at_line(e->line, "bad test.kind", [&] { return parse_test_kind(e->value); });
    }

    const Entry& pre = require(sec, "contract.pre");
    const Entry& post = require(sec, "contract.post");
    c.contract.pre = at_line(pre.line, "bad contract.pre",
                             [&] { return parse_predicate(pre.value); });
    c.contract.post = at_line(post.line, "bad contract.post",
                              [&] { return parse_predicate(post.value); });
    c.contract.label = "cycle " + std::to_string(expected);
    at_line(pre.line, "contract scope", [&] {
      validate_contract_scope(c.contract, s.final);
      return 0;
    });

    const Entry& snap = require(sec, "snapshot");
    c.snapshot = loader.load(snap);
    c.snapshot_path = snap.value;
    if (!c.snapshot.same_signature(s.final)) {
      throw SessionError(snap.line, "snapshot '" + snap.value +
                                        "' does not have the signature of the final program");
    }
    if (const Entry* e = find(sec, "note")) c.note = e->value;
    s.acceptance_suite.push_back(c.test);
    s.cycles.push_back(std::move(c));
  }
  return s;
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SessionError(std::nullopt, "cannot open session file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_session(buf.str(), path.parent_path());
  } catch (const SessionError& err) {
    throw SessionError(err.line(), err.message(), path.string());
  }
}

TestExecution run_test(const Program& p, const TestCase& t, Int step_budget) {
  TestExecution out;
  const RunResult r = run(p, t.inputs, step_budget);
  for (const auto& [name, _] : t.expected) {
    if (auto it = r.final_state.find(name); it != r.final_state.end()) {
      out.actual[name] = it->second;
    }
  }
  if (r.status == RunStatus::kFault) {
    out.outcome = TestOutcome::kFault;
    out.detail = "fault at statement " + std::to_string(r.fault->stmt_id) + ": " +
                 r.fault->message;
    return out;
  }
  if (r.status == RunStatus::kBudgetExceeded) {
    out.outcome = TestOutcome::kBudgetExceeded;
    out.detail = "step budget of " + std::to_string(step_budget) + " exceeded";
    return out;
  }
  if (out.actual != t.expected) {
    out.outcome = TestOutcome::kFail;
    out.detail = "expected " + bindings_to_string(t.expected) + " but got " +
                 bindings_to_string(out.actual);
  }
  return out;
}

QltyScore qlty_score(const Program& p, std::span<const TestCase> suite, Int step_budget) {
  if (suite.empty()) throw std::invalid_argument("qlty needs a nonempty suite");
  QltyScore score;
  for (const TestCase& t : suite) {
    const RunResult r = run(p, t.inputs, step_budget);
    for (const auto& [name, value] : t.expected) {
      ++score.total;
      if (!r.ok()) continue;
      const auto it = r.final_state.find(name);
      if (it != r.final_state.end() && it->second == value) ++score.passed;
    }
  }
  return score;
}

double qlty(const Program& p, std::span<const TestCase> suite, Int step_budget) {
  return qlty_score(p, suite, step_budget).percentage();
}

bool CycleRecord::passed() const {
  if (!errors.empty()) return false;
  if (!green || !green->passed()) return false;
  for (const auto& r : regressions) {
    if (!r.execution.passed()) return false;
  }
  if (!contract_point_check || !contract_point_check->passed()) return false;
  if (!snapshot_contract || !snapshot_contract->verified()) return false;
  if (!oracle_contract || !oracle_contract->verified()) return false;
  return chain && chain->holds;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : cycles) {
    const std::string where = "cycle " + std::to_string(c.index) + ": ";
    for (const auto& e : c.errors) out.push_back(where + e);
    if (c.green && !c.green->passed()) {
      out.push_back(where + "green check failed (" + c.green->detail + ")");
    }
    for (const auto& r : c.regressions) {
      if (!r.execution.passed()) {
        out.push_back(where + "regression test '" + r.test_name + "' from cycle " +
                      std::to_string(r.cycle) + " failed (" + r.execution.detail + ")");
      }
    }
    if (c.contract_point_check && !c.contract_point_check->passed()) {
      out.push_back(where + "contract point check: " +
                    to_string(c.contract_point_check->kind));
    }
    if (c.snapshot_contract && !c.snapshot_contract->verified()) {
      out.push_back(where + "snapshot contract " + to_string(c.snapshot_contract->verdict));
    }
    if (c.oracle_contract && !c.oracle_contract->verified()) {
      out.push_back(where + "final-program contract " +
                    to_string(c.oracle_contract->verdict));
    }
    if (c.chain && !c.chain->holds) out.push_back(where + "chain subsumption fails");
  }
  for (const auto& e : errors) out.push_back(e);
  if (qlty.total > 0 && qlty.passed != qlty.total) {
    out.push_back("qlty of the final program is below 100");
  }
  return out;
}

namespace {

template <typename F>
void recording(std::vector<std::string>& errors, const char* what, F&& f) {
  try {
    f();
  } catch (const std::exception& err) {
    errors.push_back(std::string(what) + ": " + err.what());
  }
}

}  // namespace

Report replay(const Session& s, Int step_budget) {
  Report report;
  report.session_name = s.name;
  if (s.cycles.empty()) {
    report.errors.push_back("session has no cycles");
    return report;
  }

  std::vector<Contract> contracts;
  for (const auto& c : s.cycles) contracts.push_back(c.contract);
  const Domain out_dom = out_param_domain(s.dom, s.final.out_params(), s.out_ranges);

  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    const Cycle& cycle = s.cycles[i];
    CycleRecord rec;
    rec.index = cycle.index;
    rec.test_name = cycle.test.name;
    rec.note = cycle.note;
    const std::span<const Contract> history(contracts.data(), i);

    recording(rec.errors, "classification", [&] {
      const Classification cls = classify_test(cycle.test, history);
      rec.classification.kind = cls.kind;
      if (cls.matched_index) {
        rec.classification.matched_cycle = s.cycles[*cls.matched_index].index;
      }
    });
    rec.classification.declared = cycle.test.declared_kind;
    if (rec.classification.declared &&
        !kind_matches(*rec.classification.declared, rec.classification.kind)) {
      rec.classification.mismatch = true;
      report.warnings.push_back("cycle " + std::to_string(cycle.index) + ": test '" +
                                cycle.test.name + "' is declared " +
                                to_string(*rec.classification.declared) +
                                " but classifies as " + to_string(rec.classification.kind));
    }

    if (i > 0 && !cycle.inherited_test) {
      rec.red.applicable = true;
      rec.red.expect_failure = rec.classification.kind == TestKind::kNew;
      recording(rec.errors, "red check", [&] {
        rec.red.execution = run_test(s.cycles[i - 1].snapshot, cycle.test, step_budget);
        rec.red.as_expected = rec.red.execution->passed() != rec.red.expect_failure;
      });
      if (rec.red.execution && !rec.red.as_expected) {
        report.warnings.push_back(
            "cycle " + std::to_string(cycle.index) + ": red check " +
            (rec.red.expect_failure ? "passed on the previous snapshot although the test is new"
                                    : "failed on the previous snapshot although the test is "
                                      "not new"));
      }
    }

    recording(rec.errors, "green check",
              [&] { rec.green = run_test(cycle.snapshot, cycle.test, step_budget); });
    for (std::size_t j = 0; j < i; ++j) {
      recording(rec.errors, "regression check", [&] {
        rec.regressions.push_back(RegressionCheck{
            s.cycles[j].index, s.cycles[j].test.name,
            run_test(cycle.snapshot, s.cycles[j].test, step_budget)});
      });
    }
    recording(rec.errors, "contract point check", [&] {
      rec.contract_point_check =
          check_point(cycle.snapshot, cycle.contract, cycle.test.inputs, step_budget);
    });
    recording(rec.errors, "snapshot contract", [&] {
      rec.snapshot_contract = check(cycle.snapshot, cycle.contract, s.dom, step_budget);
    });
    recording(rec.errors, "final-program contract", [&] {
      rec.oracle_contract = check(s.final, cycle.contract, s.dom, step_budget);
    });
    rec.implication_witnessed = rec.snapshot_contract && rec.snapshot_contract->verified() &&
                                rec.oracle_contract && rec.oracle_contract->verified();
    recording(rec.errors, "chain", [&] {
      const Contract acc = union_of(std::span<const Contract>(contracts.data(), i + 1));
      rec.chain = subsumed_by(cycle.contract, acc, s.dom, out_dom);
    });
    report.cycles.push_back(std::move(rec));
  }

  recording(report.errors, "union", [&] {
    report.union_contract = union_of(contracts);
    report.union_pre_tautology = is_tautology(report.union_contract.pre, s.dom);
  });
  recording(report.errors, "qlty",
            [&] { report.qlty = qlty_score(s.final, s.acceptance_suite, step_budget); });

  const Program& last = s.cycles.back().snapshot;
  report.final_matches_last_snapshot = same_shape(last.body, s.final.body) &&
                                       last.same_signature(s.final) &&
                                       last.locals == s.final.locals;
  if (!report.final_matches_last_snapshot) {
    report.warnings.push_back("the final program differs from the last snapshot");
  }
  report.monotone_accumulation = true;
  for (const TestCase& t : s.acceptance_suite) {
    if (!run_test(last, t, step_budget).passed()) report.monotone_accumulation = false;
  }
  return report;
}

}  // namespace tddslicer
