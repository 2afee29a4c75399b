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

#include <string>
#include <vector>

#include "gradedringlab/graded_ring.hpp"
#include "gradedringlab/harness.hpp"

namespace grl {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "gradedringlab-report v1";

struct ReportOptions {
  bool timestamp = true;
};

// Envelope shared by every command: schema, tool, command, optional timestamp.
Json report_header(const std::string& command, const ReportOptions& opts);

Json element_list_json(const Ring& r, const std::vector<Elem>& elems);

// Sizes and component data of a verified graded ring.
Json build_section(const GradedRing& gr);

// Per-component classification, cleanness verdicts with witnesses, J and J^g.
Json analyze_section(const GradedRing& gr);

// Everything needed to re-verify a witness: degree, power data, and all
// graded decompositions when x is homogeneous.
Json element_section(const GradedRing& gr, Elem x);

struct CheckTally {
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  std::size_t failed_expected = 0;
  std::size_t failed = 0;
  std::size_t total() const { return holds + vacuous + failed_expected + failed; }
};
CheckTally tally(const std::vector<CheckResult>& results);

Json check_section(const std::vector<Subject>& subjects, const std::vector<CheckResult>& results);

Json search_section(const Ring& r, const FiniteGroup& g, const SearchResult& result);

Json catalog_section();

// Human-readable rendering of any report built from the sections above.
std::string render_table(const Json& report);

}  // namespace grl
