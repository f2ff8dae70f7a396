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

// tddslicer: check, slice, union, replay and trace from the command line.
//
// Exit status: 0 when every check passed, 1 when a check failed, 2 on usage,
// parse or file errors.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tddslicer/contract.hpp"
#include "tddslicer/interpreter.hpp"
#include "tddslicer/parser.hpp"
#include "tddslicer/predicate.hpp"
#include "tddslicer/serialize.hpp"
#include "tddslicer/session.hpp"
#include "tddslicer/slicer.hpp"
#include "tddslicer/verifier.hpp"

namespace {

using namespace tddslicer;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

// Carries the error kind reported in machine output.
struct CliError : Error {
  CliError(std::string kind, const std::string& message)
      : Error(message), kind(std::move(kind)) {}
  std::string kind;
};

struct Globals {
  Int budget = kDefaultStepBudget;
  std::string format = "human";
  Style style;

  Format fmt() const { return format == "machine" ? Format::kMachine : Format::kHuman; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("file", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load_program(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_program(text);
  } catch (const Error& err) {
    throw CliError("parse", path + ": " + err.what());
  }
}

template <typename F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const CliError&) {
    throw;
  } catch (const Error& err) {
    throw CliError("parse", what + ": " + err.what());
  } catch (const std::invalid_argument& err) {
    throw CliError("parse", what + ": " + err.what());
  }
}

Domain domain_for(const Program& p, const std::string& text) {
  if (!text.empty()) {
    return parsing("--domain", [&] { return parse_domain(text); });
  }
  Domain d;
  for (const auto& v : p.in_params()) d.set(v, Range{-8, 8});
  return d;
}

void require_input_domain(const Program& p, const Domain& dom) {
  for (const auto& v : p.in_params()) {
    if (!dom.has(v)) throw CliError("usage", "--domain does not bound in-parameter '" + v + "'");
  }
  for (const auto& v : dom.vars()) {
    if (!p.is_in_param(v)) {
      throw CliError("usage", "--domain variable '" + v + "' is not an in-parameter of '" +
                                  p.name + "'");
    }
  }
}

Contract contract_for(const Program& p, const std::string& pre, const std::string& post,
                      bool allow_locals) {
  Contract c{parsing("--pre", [&] { return parse_predicate(pre); }),
             parsing("--post", [&] { return parse_predicate(post); }), std::nullopt};
  parsing("contract", [&] {
    validate_contract_scope(c, p, allow_locals ? ScopeWaiver::kAllowLocals : ScopeWaiver::kNone);
    return 0;
  });
  return c;
}

bool color_enabled() {
  const char* env = std::getenv("TDDSLICER_COLOR");
  if (env && std::string(env) == "0") return false;
  if (env && std::string(env) == "1") return true;
  return isatty(STDOUT_FILENO) != 0;
}

struct ProgramArgs {
  std::string program;
  std::string pre;
  std::string post;
  std::string domain;
  bool allow_locals = false;
};

void add_contract_options(CLI::App* cmd, ProgramArgs& a) {
  cmd->add_option("program", a.program, "Program file (.prog)")->required();
  cmd->add_option("--pre", a.pre, "Precondition")->required();
  cmd->add_option("--post", a.post, "Postcondition")->required();
  cmd->add_option("--domain", a.domain,
                  "Input domain, e.g. \"a in -8..8, b in -8..8\" (default: every "
                  "in-parameter in -8..8)");
  cmd->add_flag("--allow-locals", a.allow_locals,
                "Let the postcondition read locals (slice-level contracts)");
}

int cmd_check(const Globals& g, const ProgramArgs& a) {
  const Program p = load_program(a.program);
  const Contract c = contract_for(p, a.pre, a.post, a.allow_locals);
  const Domain dom = domain_for(p, a.domain);
  require_input_domain(p, dom);
  const VerificationResult r = check(p, c, dom, g.budget);
  std::cout << render_check(r, c, g.fmt(), g.style);
  return r.verified() ? kExitOk : kExitFailed;
}

int cmd_slice(const Globals& g, const ProgramArgs& a, const std::string& strategy) {
  const Program p = load_program(a.program);
  const Contract c = contract_for(p, a.pre, a.post, a.allow_locals);
  const Domain dom = domain_for(p, a.domain);
  require_input_domain(p, dom);
  SliceOptions options;
  options.strategy = strategy == "greedy" ? Strategy::kGreedy : Strategy::kExhaustive;
  options.step_budget = g.budget;
  try {
    const SliceResult r = slice(p, c, dom, options);
    std::cout << render_slice(p, r, g.fmt(), g.style);
    return kExitOk;
  } catch (const SliceError& err) {
    if (err.reason() == SliceError::Reason::kTooManyUnits) {
      throw CliError("refused", err.what());
    }
    std::cout << render_error("slice", "not-verified", err.what(), g.fmt(), g.style);
    if (err.original() && g.fmt() == Format::kHuman) {
      std::cout << render_check(*err.original(), c, g.fmt(), g.style);
    }
    return kExitFailed;
  }
}

struct UnionArgs {
  std::vector<std::string> pres;
  std::vector<std::string> posts;
  std::string domain;
};

// Equivalence of two predicates over `dom`, with unbound variables given
// the widest range of `dom`.
bool equivalent(const Predicate& a, const Predicate& b, const Domain& dom) {
  std::vector<std::string> missing;
  for (const auto& src : {free_vars(a), free_vars(b)}) {
    for (const auto& v : src) {
      if (!dom.has(v)) missing.push_back(v);
    }
  }
  const Domain full = dom.merged(out_param_domain(dom, missing));
  return implies(a, b, full).holds() && implies(b, a, full).holds();
}

int cmd_union(const Globals& g, const UnionArgs& a) {
  if (a.pres.size() != 2 || a.posts.size() != 2) {
    throw CliError("usage", "union needs exactly two --pre and two --post options");
  }
  UnionReport u{
      Contract{parsing("--pre", [&] { return parse_predicate(a.pres[0]); }),
               parsing("--post", [&] { return parse_predicate(a.posts[0]); }), std::nullopt},
      Contract{parsing("--pre", [&] { return parse_predicate(a.pres[1]); }),
               parsing("--post", [&] { return parse_predicate(a.posts[1]); }), std::nullopt},
      Contract{Predicate::truth(), Predicate::truth(), std::nullopt},
      std::nullopt, std::nullopt, std::nullopt};
  u.result = union_of(u.first, u.second);
  {
    Domain dom;
    if (a.domain.empty()) {
      for (const auto& v : free_vars(u.result.pre)) dom.set(v, Range{-8, 8});
    } else {
      dom = parsing("--domain", [&] { return parse_domain(a.domain); });
    }
    u.dom = dom;
    for (const auto& v : free_vars(u.result.pre)) {
      if (!dom.has(v)) throw CliError("usage", "--domain does not bound '" + v + "'");
    }
    u.pre_tautology = is_tautology(u.result.pre, dom);
    for (int i = 0; i < 2 && !u.equivalent_to; ++i) {
      const Contract& operand = i == 0 ? u.first : u.second;
      if (equivalent(u.result.pre, operand.pre, dom) &&
          equivalent(u.result.post, operand.post, dom)) {
        u.equivalent_to = i + 1;
      }
    }
  }
  std::cout << render_union(u, g.fmt(), g.style);
  return !u.pre_tautology || u.pre_tautology->holds() ? kExitOk : kExitFailed;
}

int cmd_replay(const Globals& g, const std::string& path) {
  Session s = [&] {
    try {
      return load_session(path);
    } catch (const SessionError& err) {
      throw CliError(err.line() ? "parse" : "file", err.what());
    }
  }();
  const Report r = replay(s, g.budget);
  std::cout << render_report(r, g.fmt(), g.style);
  return r.ok() ? kExitOk : kExitFailed;
}

struct TraceArgs {
  std::string program;
  std::string inputs;
  std::string vars;
};

int cmd_trace(const Globals& g, const TraceArgs& a) {
  const Program p = load_program(a.program);
  const State inputs = parsing("--inputs", [&] { return parse_bindings(a.inputs); });
  for (const auto& v : p.in_params()) {
    if (!inputs.count(v)) throw CliError("usage", "--inputs does not bind '" + v + "'");
  }
  for (const auto& [v, _] : inputs) {
    if (!p.is_in_param(v)) {
      throw CliError("usage", "'" + v + "' is not an in-parameter of '" + p.name + "'");
    }
  }
  std::optional<std::set<std::string>> vars;
  if (!a.vars.empty()) {
    vars.emplace();
    std::stringstream in(a.vars);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto first = item.find_first_not_of(' ');
      const auto last = item.find_last_not_of(' ');
      if (first == std::string::npos) continue;
      const std::string name = item.substr(first, last - first + 1);
      if (!p.has_variable(name)) {
        throw CliError("usage", "--vars: '" + name + "' is not a variable of '" + p.name + "'");
      }
      vars->insert(name);
    }
  }
  const RunResult r = run(p, inputs, g.budget);
  const Trajectory shown = vars ? project(r.trajectory, *vars) : r.trajectory;
  std::cout << render_trace(r, shown, vars, g.fmt(), g.style);
  return r.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contract checking, specification-based slicing and TDD session replay",
               "tddslicer"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--budget", g.budget, "Step budget per execution")
      ->default_val(kDefaultStepBudget)
      ->check(CLI::Range(Int{1}, std::numeric_limits<Int>::max()));
  app.add_option("--format", g.format, "Output format")
      ->default_val("human")
      ->check(CLI::IsMember({"human", "machine"}));

  ProgramArgs check_args;
  CLI::App* check_cmd = app.add_subcommand("check", "Check a contract by bounded execution");
  add_contract_options(check_cmd, check_args);

  ProgramArgs slice_args;
  std::string strategy = "exhaustive";
  CLI::App* slice_cmd = app.add_subcommand("slice", "Compute a specification-based slice");
  add_contract_options(slice_cmd, slice_args);
  slice_cmd->add_option("--strategy", strategy, "exhaustive or greedy")
      ->default_val("exhaustive")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));

  UnionArgs union_args;
  CLI::App* union_cmd = app.add_subcommand("union", "Union of two contracts");
  union_cmd->add_option("--pre", union_args.pres, "Precondition (twice)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  union_cmd->add_option("--post", union_args.posts, "Postcondition (twice)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  union_cmd->add_option("--domain", union_args.domain, "Domain for the tautology check (default: -8..8 for every pre variable)");

  std::string session_path;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Replay a TDD session");
  replay_cmd->add_option("session", session_path, "Session file")->required();

  TraceArgs trace_args;
  CLI::App* trace_cmd = app.add_subcommand("trace", "Print a state trajectory");
  trace_cmd->add_option("program", trace_args.program, "Program file (.prog)")->required();
  trace_cmd->add_option("--inputs", trace_args.inputs, "Inputs, e.g. \"x=4, y=2\"")
      ->required();
  trace_cmd->add_option("--vars", trace_args.vars, "Comma-separated variables to keep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  g.style.color = color_enabled();

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "check") return cmd_check(g, check_args);
    if (command == "slice") return cmd_slice(g, slice_args, strategy);
    if (command == "union") return cmd_union(g, union_args);
    if (command == "replay") return cmd_replay(g, session_path);
    return cmd_trace(g, trace_args);
  } catch (const CliError& err) {
    (g.fmt() == Format::kMachine ? std::cout : std::cerr)
        << render_error(command, err.kind, err.what(), g.fmt(), g.style);
  } catch (const std::exception& err) {
    (g.fmt() == Format::kMachine ? std::cout : std::cerr)
        << render_error(command, "usage", err.what(), g.fmt(), g.style);
  }
  return kExitError;
}
