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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedringlab/graded_ring.hpp"

namespace grl {

struct ExpectedFlag {
  std::string flag;
  bool value = false;
};

struct Fixture {
  std::string name;
  std::string description;
  std::function<GradedRing()> build;
  std::vector<ExpectedFlag> expected;
  // Designated counterexample to "R_e nil clean implies graded nil clean".
  bool implication_counterexample = false;
};

const std::vector<Fixture>& catalog();
const Fixture* find_fixture(const std::string& name);

// Names accepted by compute_flag, in report order.
const std::vector<std::string>& flag_names();
// Throws Error(kInvalidArgument) for unknown names and CapExceeded when the
// flag needs a computation past the caps.
bool compute_flag(const GradedRing& gr, const std::string& flag);

enum class CheckStatus { kHolds, kVacuous, kFailedExpected, kFailed };
const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string fixture;
  std::string check;
  CheckStatus status = CheckStatus::kHolds;
  std::string detail;
  Json witness;
};

struct CheckInfo {
  std::string id;
  std::string statement;
};
// Registry order is the report order.
const std::vector<CheckInfo>& check_registry();

struct Subject {
  std::string name;
  GradedRing graded;
  std::vector<ExpectedFlag> expected;
  bool implication_counterexample = false;
};

Subject subject_from_fixture(const Fixture& f);

// Runs every applicable (subject, check) pair; `checks` empty or {"all"}
// selects the whole registry. Results are ordered by subject, then registry
// order, independent of scheduling.
std::vector<CheckResult> run_checks(const std::vector<Subject>& subjects,
                                    const std::vector<std::string>& checks,
                                    unsigned threads = 0);

struct SearchedGrading {
  std::vector<std::vector<Elem>> components;
  bool identity_nil_clean = false;
  bool graded_nil_clean = false;
  bool graded_strongly_nil_clean = false;
  bool graded_clean = false;
  bool counterexample = false;  // R_e nil clean but R not graded nil clean
};

struct SearchResult {
  std::size_t additive_subgroups = 0;
  std::size_t candidate_families = 0;
  std::vector<SearchedGrading> gradings;
  std::size_t counterexamples() const;
};

// Every G-grading of R by additive subgroups, classified. Throws CapExceeded
// when |R| passes limits().max_search.
SearchResult grading_search(const Ring& r, const FiniteGroup& g);

}  // namespace grl
