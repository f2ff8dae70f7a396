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

#ifndef TDDSLICER_SERIALIZE_HPP_
#define TDDSLICER_SERIALIZE_HPP_

#include <optional>
#include <set>
#include <string>

#include "tddslicer/contract.hpp"
#include "tddslicer/interpreter.hpp"
#include "tddslicer/session.hpp"
#include "tddslicer/slicer.hpp"
#include "tddslicer/verifier.hpp"

namespace tddslicer {

// Human text and machine (JSON) renderings of every result type. Machine
// documents are objects whose first two keys are "format_version" (1) and
// "command"; keys keep a fixed order so output is byte-stable. README.md
// lists the schema.

inline constexpr int kFormatVersion = 1;

enum class Format { kHuman, kMachine };

struct Style {
  bool color = false;
};

std::string render_check(const VerificationResult& r, const Contract& c, Format f,
                         Style style = {});

std::string render_slice(const Program& original, const SliceResult& r, Format f,
                         Style style = {});

struct UnionReport {
  Contract first;
  Contract second;
  Contract result;
  /// Present when a domain was supplied.
  std::optional<QueryResult> pre_tautology;
  /// 1 or 2 when the union is equivalent to that operand over the domain.
  std::optional<int> equivalent_to;
  std::optional<Domain> dom;
};

std::string render_union(const UnionReport& u, Format f, Style style = {});

std::string render_report(const Report& r, Format f, Style style = {});

std::string render_trace(const RunResult& r, const Trajectory& shown,
                         const std::optional<std::set<std::string>>& vars, Format f,
                         Style style = {});

/// `kind` is one of usage, parse, file, refused, not-verified.
std::string render_error(const std::string& command, const std::string& kind,
                         const std::string& message, Format f, Style style = {});

}  // namespace tddslicer

#endif  // TDDSLICER_SERIALIZE_HPP_
