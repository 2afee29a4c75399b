// Copyright 2026 The gradedringlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gradedringlab/graded_ring.hpp"
#include "gradedringlab/harness.hpp"

namespace grl {

inline constexpr std::string_view kSpecHeader = "gradedringlab-spec v1";

// A graded ring read from a spec file. The grammar is in docs/spec-format.md.
struct ParsedSpec {
  std::string name;
  GradedRing graded;
  std::vector<ExpectedFlag> expected;
  // Set by "refutes implication-1": a failure of that check is expected.
  bool implication_counterexample = false;
  std::string source;
};

// Syntax and name-resolution problems throw ParseError with a position;
// grading violations propagate as GradingError.
ParsedSpec parse_spec(std::string_view text);
ParsedSpec load_spec(const std::filesystem::path& path);

// A single group expression such as "cyclic(2)" or "window(3)".
FiniteGroup parse_group(std::string_view text);

Subject subject_from_spec(const ParsedSpec& spec);

}  // namespace grl
