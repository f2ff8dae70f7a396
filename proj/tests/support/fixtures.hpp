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

#ifndef TDDSLICER_TESTS_SUPPORT_FIXTURES_HPP_
#define TDDSLICER_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tddslicer/contract.hpp"
#include "tddslicer/parser.hpp"
#include "tddslicer/predicate.hpp"

namespace fixtures {

inline const std::filesystem::path kCorpus = TDDSLICER_CORPUS_DIR;
inline const std::filesystem::path kData = TDDSLICER_TEST_DATA_DIR;

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline tddslicer::Program corpus_program(const std::string& rel) {
  return tddslicer::parse_program(slurp(kCorpus / rel));
}

inline tddslicer::Contract contract(const std::string& pre, const std::string& post) {
  return tddslicer::Contract{tddslicer::parse_predicate(pre), tddslicer::parse_predicate(post),
                             std::nullopt};
}

inline const char* const kMax =
    "proc max(in a, in b, out max) { if (a > b) { max := a; } else { max := b; } }";

}  // namespace fixtures

#endif  // TDDSLICER_TESTS_SUPPORT_FIXTURES_HPP_
