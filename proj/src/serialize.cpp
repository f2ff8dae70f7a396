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

#include "tddslicer/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "tddslicer/printer.hpp"

namespace tddslicer {
namespace {

using Json = nlohmann::ordered_json;

Json header(const char* command) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json state_json(const State& s) {
  Json j = Json::object();
  for (const auto& [name, value] : s) j[name] = value;
  return j;
}

Json contract_json(const Contract& c) {
  return Json{{"pre", c.pre.to_string()}, {"post", c.post.to_string()}};
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"inputs", state_json(w->inputs)}, {"final_state", state_json(w->final_state)}};
}

Json verification_json(const VerificationResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = witness_json(r.witness);
  j["checked_points"] = r.checked_points;
  j["domain"] = r.domain_used.to_string();
  j["detail"] = r.detail;
  return j;
}

Json query_json(const QueryResult& q) {
  Json j;
  j["holds"] = q.holds();
  j["status"] = q.status == QueryStatus::kHolds     ? "holds"
                : q.status == QueryStatus::kRefuted ? "refuted"
                                                    : "undefined";
  j["witness"] = q.witness ? state_json(*q.witness) : Json(nullptr);
  j["points"] = q.points;
  return j;
}

Json units_json(const std::vector<DeletionUnit>& units) {
  Json j = Json::array();
  for (const auto& u : units) j.push_back(to_string(u));
  return j;
}

Json execution_json(const std::optional<TestExecution>& e) {
  if (!e) return nullptr;
  return Json{{"outcome", to_string(e->outcome)},
              {"actual", state_json(e->actual)},
              {"detail", e->detail}};
}

std::string paint(const std::string& text, const char* code, Style style) {
  if (!style.color) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string good(const std::string& text, Style s) { return paint(text, "32", s); }
std::string bad(const std::string& text, Style s) { return paint(text, "31", s); }
std::string warn(const std::string& text, Style s) { return paint(text, "33", s); }

std::string verdict_text(const VerificationResult& r, Style s) {
  const std::string v = to_string(r.verdict);
  return (r.verified() ? good(v, s) : bad(v, s)) + " (" + std::to_string(r.checked_points) +
         " points satisfy the precondition)";
}

std::string witness_text(const Witness& w) {
  return "inputs " + bindings_to_string(w.inputs) + "; final state " +
         bindings_to_string(w.final_state);
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string join(const std::vector<DeletionUnit>& units) {
  std::string out;
  for (const auto& u : units) out += (out.empty() ? "" : ", ") + to_string(u);
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string render_check(const VerificationResult& r, const Contract& c, Format f,
                         Style style) {
  if (f == Format::kMachine) {
    Json j = header("check");
    j["contract"] = contract_json(c);
    j.update(verification_json(r));
    return dump(j);
  }
  std::ostringstream out;
  out << "contract: " << c.to_string() << "\n";
  out << "domain:   " << r.domain_used.to_string() << "\n";
  out << "verdict:  " << verdict_text(r, style) << "\n";
  if (r.witness) out << "witness:  " << witness_text(*r.witness) << "\n";
  if (!r.detail.empty()) out << "detail:   " << r.detail << "\n";
  return out.str();
}

std::string render_slice(const Program& original, const SliceResult& r, Format f,
                         Style style) {
  if (f == Format::kMachine) {
    Json j = header("slice");
    j["original"] = original.name;
    j["strategy"] = to_string(r.strategy);
    j["minimal"] = r.minimal;
    j["retained"] = units_json(r.retained);
    j["deleted"] = units_json(r.deleted);
    j["candidates_checked"] = r.candidates_checked;
    j["program"] = pretty_print(r.program);
    j["verification"] = verification_json(r.verification);
    return dump(j);
  }
  std::ostringstream out;
  out << pretty_print(r.program);
  out << "retained: " << join(r.retained) << "\n";
  out << "deleted:  " << join(r.deleted) << "\n";
  out << "strategy: " << to_string(r.strategy) << (r.minimal ? " (minimal)" : "") << ", "
      << r.candidates_checked << " candidates checked\n";
  out << "verdict:  " << verdict_text(r.verification, style) << "\n";
  return out.str();
}

std::string render_union(const UnionReport& u, Format f, Style style) {
  if (f == Format::kMachine) {
    Json j = header("union");
    j["operands"] = Json::array({contract_json(u.first), contract_json(u.second)});
    j["union"] = contract_json(u.result);
    j["domain"] = u.dom ? Json(u.dom->to_string()) : Json(nullptr);
    j["pre_tautology"] = u.pre_tautology ? query_json(*u.pre_tautology) : Json(nullptr);
    j["equivalent_to"] = u.equivalent_to ? Json(*u.equivalent_to) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  out << "pre:  " << u.result.pre.to_string() << "\n";
  out << "post: " << u.result.post.to_string() << "\n";
  if (u.pre_tautology) {
    const bool t = u.pre_tautology->holds();
    out << "precondition is a tautology over domain: "
        << (t ? good("true", style) : bad("false", style));
    if (!t && u.pre_tautology->witness) {
      out << " (" << bindings_to_string(*u.pre_tautology->witness) << ")";
    }
    out << "\n";
  }
  if (u.equivalent_to) {
    out << "note: the union is equivalent to contract " << *u.equivalent_to
        << " over the domain\n";
  }
  return out.str();
}

std::string render_report(const Report& r, Format f, Style style) {
  if (f == Format::kMachine) {
    Json j = header("replay");
    j["session"] = r.session_name;
    Json cycles = Json::array();
    for (const auto& c : r.cycles) {
      Json jc;
      jc["index"] = c.index;
      jc["test"] = c.test_name;
      jc["note"] = c.note ? Json(*c.note) : Json(nullptr);
      Json red;
      red["applicable"] = c.red.applicable;
      red["expect_failure"] = c.red.expect_failure;
      red["execution"] = execution_json(c.red.execution);
      red["as_expected"] = c.red.as_expected;
      jc["red"] = red;
      jc["green"] = execution_json(c.green);
      Json regs = Json::array();
      for (const auto& g : c.regressions) {
        regs.push_back(Json{{"cycle", g.cycle},
                            {"test", g.test_name},
                            {"outcome", to_string(g.execution.outcome)}});
      }
      jc["regressions"] = regs;
      Json cls;
      cls["kind"] = to_string(c.classification.kind);
      cls["declared"] = c.classification.declared
                            ? Json(to_string(*c.classification.declared))
                            : Json(nullptr);
      cls["mismatch"] = c.classification.mismatch;
      cls["matched_cycle"] = c.classification.matched_cycle
                                 ? Json(*c.classification.matched_cycle)
                                 : Json(nullptr);
      jc["classification"] = cls;
      jc["contract_point_check"] =
          c.contract_point_check ? Json(to_string(c.contract_point_check->kind))
                                 : Json(nullptr);
      jc["snapshot_contract"] =
          c.snapshot_contract ? verification_json(*c.snapshot_contract) : Json(nullptr);
      jc["oracle_contract"] =
          c.oracle_contract ? verification_json(*c.oracle_contract) : Json(nullptr);
      jc["implication_witnessed"] = c.implication_witnessed;
      jc["chain"] = c.chain ? Json{{"holds", c.chain->holds},
                                   {"pre", query_json(c.chain->pre)},
                                   {"post", query_json(c.chain->post)}}
                            : Json(nullptr);
      jc["errors"] = c.errors;
      jc["passed"] = c.passed();
      cycles.push_back(jc);
    }
    j["cycles"] = cycles;
    j["union_contract"] = contract_json(r.union_contract);
    j["union_pre_tautology"] = r.union_pre_tautology.holds();
    j["qlty"] = Json{{"percentage", r.qlty.percentage()},
                     {"passed", r.qlty.passed},
                     {"total", r.qlty.total}};
    j["final_matches_last_snapshot"] = r.final_matches_last_snapshot;
    j["monotone_accumulation"] = r.monotone_accumulation;
    j["implication_note"] = std::string(kImplicationNote);
    j["warnings"] = r.warnings;
    j["errors"] = r.errors;
    j["failures"] = r.failures();
    j["ok"] = r.ok();
    return dump(j);
  }

  std::ostringstream out;
  auto verdict_line = [&](const std::optional<VerificationResult>& v) {
    return v ? verdict_text(*v, style) : bad("error", style);
  };
  auto exec = [&](const std::optional<TestExecution>& e) {
    if (!e) return bad("error", style);
    return e->passed() ? good("pass", style) : bad(to_string(e->outcome), style);
  };
  out << "session " << r.session_name << ": " << r.cycles.size() << " cycles\n";
  for (const auto& c : r.cycles) {
    out << "\ncycle " << c.index << ": " << c.test_name << " ["
        << to_string(c.classification.kind);
    if (c.classification.matched_cycle) {
      out << " of cycle " << *c.classification.matched_cycle;
    }
    out << "]";
    if (c.note) out << " " << *c.note;
    out << "\n";
    out << "  red:          ";
    if (!c.red.applicable) {
      out << "n/a";
    } else if (c.red.execution) {
      out << to_string(c.red.execution->outcome) << " on previous snapshot, "
          << (c.red.expect_failure ? "failure" : "pass") << " expected"
          << (c.red.as_expected ? "" : " " + warn("(unexpected)", style));
    } else {
      out << bad("error", style);
    }
    out << "\n";
    out << "  green:        " << exec(c.green);
    if (c.green && !c.green->passed()) out << " (" << c.green->detail << ")";
    out << "\n";
    std::size_t passing = 0;
    for (const auto& g : c.regressions) passing += g.execution.passed();
    const std::string regs =
        std::to_string(passing) + "/" + std::to_string(c.regressions.size()) + " pass";
    out << "  regressions:  "
        << (passing == c.regressions.size() ? good(regs, style) : bad(regs, style)) << "\n";
    out << "  point check:  "
        << (!c.contract_point_check ? bad("error", style)
            : c.contract_point_check->passed()
                ? good("pass", style)
                : bad(to_string(c.contract_point_check->kind), style))
        << "\n";
    out << "  snapshot:     " << verdict_line(c.snapshot_contract) << "\n";
    out << "  final:        " << verdict_line(c.oracle_contract) << "\n";
    out << "  chain:        "
        << (!c.chain ? bad("error", style)
            : c.chain->holds ? good("holds", style)
                             : bad("fails", style))
        << "\n";
    for (const auto& e : c.errors) out << "  error:        " << bad(e, style) << "\n";
  }
  out << "\nunion pre:  " << r.union_contract.pre.to_string() << "\n";
  out << "union post: " << r.union_contract.post.to_string() << "\n";
  out << "union pre is a tautology over domain: "
      << (r.union_pre_tautology.holds() ? "true" : "false") << "\n";
  out << "qlty(final): " << percent(r.qlty.percentage()) << "% (" << r.qlty.passed << "/"
      << r.qlty.total << " assertions)\n";
  out << "final program matches last snapshot: "
      << (r.final_matches_last_snapshot ? "yes" : "no") << "\n";
  out << "all tests pass on last snapshot: " << (r.monotone_accumulation ? "yes" : "no")
      << "\n";
  out << "note: " << kImplicationNote << "\n";
  for (const auto& w : r.warnings) out << warn("warning: ", style) << w << "\n";
  const auto failures = r.failures();
  for (const auto& f2 : failures) out << bad("failure: ", style) << f2 << "\n";
  out << "result: " << (failures.empty() ? good("PASS", style) : bad("FAIL", style)) << "\n";
  return out.str();
}

std::string render_trace(const RunResult& r, const Trajectory& shown,
                         const std::optional<std::set<std::string>>& vars, Format f,
                         Style style) {
  const char* status = r.status == RunStatus::kOk      ? "ok"
                       : r.status == RunStatus::kFault ? "fault"
                                                       : "budget-exceeded";
  if (f == Format::kMachine) {
    Json j = header("trace");
    j["status"] = status;
    j["vars"] = vars ? Json(*vars) : Json(nullptr);
    Json entries = Json::array();
    for (const auto& e : shown) {
      entries.push_back(Json{{"stmt_id", e.stmt_id}, {"var", e.var}, {"value", e.value}});
    }
    j["trajectory"] = entries;
    j["final_state"] = state_json(r.final_state);
    j["steps"] = r.steps;
    j["fault"] = r.fault ? Json{{"stmt_id", r.fault->stmt_id}, {"message", r.fault->message}}
                         : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  for (const auto& e : shown) {
    out << "stmt " << e.stmt_id << ": " << e.var << " = " << e.value << "\n";
  }
  out << "status: " << (r.ok() ? good(status, style) : bad(status, style));
  if (r.fault) out << " at statement " << r.fault->stmt_id << ": " << r.fault->message;
  out << "\n";
  out << "final state: " << bindings_to_string(r.final_state) << "\n";
  out << "steps: " << r.steps << "\n";
  return out.str();
}

std::string render_error(const std::string& command, const std::string& kind,
                         const std::string& message, Format f, Style style) {
  if (f == Format::kMachine) {
    Json j = header(command.c_str());
    j["error"] = Json{{"kind", kind}, {"message", message}};
    return dump(j);
  }
  return bad("error", style) + " (" + kind + "): " + message + "\n";
}

}  // namespace tddslicer
