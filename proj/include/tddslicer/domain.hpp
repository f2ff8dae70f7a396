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

#ifndef TDDSLICER_DOMAIN_HPP_
#define TDDSLICER_DOMAIN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tddslicer/ast.hpp"
#include "tddslicer/eval.hpp"

namespace tddslicer {

struct Range {
  Int lo;
  Int hi;

  /// Saturates at UINT64_MAX for the full Int range.
  std::uint64_t size() const {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    return span == UINT64_MAX ? span : span + 1;
  }
  bool contains(Int v) const { return lo <= v && v <= hi; }
  bool operator==(const Range&) const = default;
};

/// Inclusive integer ranges per variable; the bounded universe every
/// logical query and verification runs over.
///
/// Points are enumerated lexicographically: variables in name order, values
/// ascending, the last variable varying fastest. Witnesses are therefore
/// reproducible.
class Domain {
 public:
  Domain() = default;

  /// Throws std::invalid_argument when lo > hi.
  Domain& set(const std::string& var, Range range);

  bool has(const std::string& var) const { return ranges_.count(var) > 0; }
  const Range& at(const std::string& var) const { return ranges_.at(var); }
  const std::map<std::string, Range>& ranges() const { return ranges_; }
  std::vector<std::string> vars() const;
  std::size_t dimension() const { return ranges_.size(); }
  bool empty() const { return ranges_.empty(); }

  /// Number of points, saturating at UINT64_MAX.
  std::uint64_t point_count() const;

  /// Visits points in enumeration order until `visit` returns false.
  /// Returns false iff the visit was stopped early. A Domain with no
  /// variables has exactly one (empty) point.
  bool for_each_point(const std::function<bool(const State&)>& visit) const;

  /// Union of the variables; entries of `other` win on collision.
  Domain merged(const Domain& other) const;

  /// Restriction to `vars` (which must all be present).
  Domain restricted(const std::vector<std::string>& vars) const;

  bool contains(const State& point) const;

  /// `a in -8..8, b in -8..8`
  std::string to_string() const;

  bool operator==(const Domain&) const = default;

 private:
  std::map<std::string, Range> ranges_;
};

/// Parses `x in 0..16, y in 1..9`. An empty string gives an empty Domain.
Domain parse_domain(std::string_view text);

/// Parses `x=2, y=-1` into a State. Duplicate names are an error.
State parse_bindings(std::string_view text);

std::string bindings_to_string(const State& s);

}  // namespace tddslicer

#endif  // TDDSLICER_DOMAIN_HPP_
