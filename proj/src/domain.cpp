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

#include "tddslicer/domain.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "lexer.hpp"

namespace tddslicer {

Domain& Domain::set(const std::string& var, Range range) {
  if (range.lo > range.hi) {
    throw std::invalid_argument("empty range for '" + var + "': " +
                                std::to_string(range.lo) + ".." +
                                std::to_string(range.hi));
  }
  ranges_[var] = range;
  return *this;
}

std::vector<std::string> Domain::vars() const {
  std::vector<std::string> out;
  out.reserve(ranges_.size());
  for (const auto& [name, range] : ranges_) out.push_back(name);
  return out;
}

std::uint64_t Domain::point_count() const {
  std::uint64_t total = 1;
  for (const auto& [name, range] : ranges_) {
    if (__builtin_mul_overflow(total, range.size(), &total)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total;
}

bool Domain::for_each_point(const std::function<bool(const State&)>& visit) const {
  State point;
  for (const auto& [name, range] : ranges_) point[name] = range.lo;
  std::vector<std::pair<State::iterator, Range>> slots;
  for (auto it = point.begin(); it != point.end(); ++it) {
    slots.emplace_back(it, ranges_.at(it->first));
  }
  for (;;) {
    if (!visit(point)) return false;
    // Odometer step, last variable fastest.
    std::size_t k = slots.size();
    while (k > 0) {
      auto& [it, range] = slots[k - 1];
      if (it->second < range.hi) {
        ++it->second;
        break;
      }
      it->second = range.lo;
      --k;
    }
    if (k == 0) return true;
  }
}

Domain Domain::merged(const Domain& other) const {
  Domain out = *this;
  for (const auto& [name, range] : other.ranges_) out.ranges_[name] = range;
  return out;
}

Domain Domain::restricted(const std::vector<std::string>& vars) const {
  Domain out;
  for (const auto& v : vars) out.set(v, at(v));
  return out;
}

bool Domain::contains(const State& point) const {
  for (const auto& [name, range] : ranges_) {
    auto it = point.find(name);
    if (it == point.end() || !range.contains(it->second)) return false;
  }
  return true;
}

std::string Domain::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, range] : ranges_) {
    if (!first) os << ", ";
    os << name << " in " << range.lo << ".." << range.hi;
    first = false;
  }
  return os.str();
}

Domain parse_domain(std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  Domain dom;
  if (ts.at_end()) return dom;
  do {
    const SourcePos at = ts.peek().pos;
    std::string name = ts.expect_ident();
    if (dom.has(name)) {
      throw SyntaxError(at, "distinct variable names", "repeated '" + name + "'");
    }
    ts.expect_keyword("in");
    const SourcePos range_at = ts.peek().pos;
    const Int lo = ts.expect_signed_int();
    ts.expect_symbol("..");
    const Int hi = ts.expect_signed_int();
    if (lo > hi) {
      throw SyntaxError(range_at, "range with lo <= hi",
                        std::to_string(lo) + ".." + std::to_string(hi));
    }
    dom.set(name, Range{lo, hi});
  } while (ts.accept_symbol(","));
  ts.expect_end();
  return dom;
}

State parse_bindings(std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  State out;
  if (ts.at_end()) return out;
  do {
    const SourcePos at = ts.peek().pos;
    std::string name = ts.expect_ident();
    ts.expect_symbol("=");
    const Int value = ts.expect_signed_int();
    if (!out.emplace(name, value).second) {
      throw SyntaxError(at, "distinct variable names", "repeated '" + name + "'");
    }
  } while (ts.accept_symbol(","));
  ts.expect_end();
  return out;
}

std::string bindings_to_string(const State& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : s) {
    if (!first) os << ", ";
    os << name << '=' << value;
    first = false;
  }
  return os.str();
}

}  // namespace tddslicer
