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
#include <optional>
#include <string>
#include <vector>

#include "gradedringlab/graded_ring.hpp"

namespace grl {

struct NilCleanDecomposition {
  Elem f = 0;  // idempotent part
  Elem b = 0;  // nilpotent part
  bool commuting = false;
};

struct CleanDecomposition {
  Elem f = 0;  // idempotent part
  Elem u = 0;  // unit part
};

// a = f + u with fa = af and faf nilpotent.
struct PiRegularDecomposition {
  Elem f = 0;
  Elem u = 0;
};

// Plain-ring decompositions, ordered by idempotent index.
std::vector<NilCleanDecomposition> nil_clean_decompositions(const Ring& r, Elem x);
std::vector<NilCleanDecomposition> strongly_nil_clean_decompositions(const Ring& r, Elem x);
std::vector<CleanDecomposition> clean_decompositions(const Ring& r, Elem x);

// Whole-ring tests; the first failing element in index order, if any.
std::optional<Elem> nil_clean_failure(const Ring& r);
std::optional<Elem> strongly_nil_clean_failure(const Ring& r);
std::optional<Elem> clean_failure(const Ring& r);
inline bool is_nil_clean_ring(const Ring& r) { return !nil_clean_failure(r); }
inline bool is_strongly_nil_clean_ring(const Ring& r) { return !strongly_nil_clean_failure(r); }
inline bool is_clean_ring(const Ring& r) { return !clean_failure(r); }

// Decompositions of a homogeneous x into homogeneous parts. Throw
// Error(kNotHomogeneous) for mixed x.
std::vector<NilCleanDecomposition> graded_nil_clean_element(const GradedRing& gr, Elem x);
std::vector<NilCleanDecomposition> graded_strongly_nil_clean_element(const GradedRing& gr, Elem x);
std::vector<CleanDecomposition> graded_clean_element(const GradedRing& gr, Elem x);

struct Verdict {
  bool holds = true;
  // First failing element in index order.
  std::optional<Elem> witness;
  std::size_t checked = 0;
};

Verdict is_graded_nil_clean(const GradedRing& gr);
Verdict is_graded_strongly_nil_clean(const GradedRing& gr);
Verdict is_graded_clean(const GradedRing& gr);
// Every element (homogeneous or not) is a homogeneous idempotent plus two
// homogeneous nilpotents.
Verdict is_graded_2_nil_clean(const GradedRing& gr);

struct GsprResult {
  std::vector<PiRegularDecomposition> decompositions;
  bool unique = true;
};
// Exhaustive over homogeneous idempotents f with a - f a homogeneous unit.
GsprResult gspr_decompositions(const GradedRing& gr, Elem a);

// For the gspr decomposition a = f + u: 2f - 1 + u nilpotent and u in R_e.
// Throws Error(kNoDecomposition) when a has none.
bool check_nilpotency_criterion(const GradedRing& gr, Elem a);

struct IdempotentLift {
  Elem fast = 0;  // from iterating t -> 3t^2 - 2t^3
  // Every idempotent of R_e over abar, when the exhaustive path ran.
  std::vector<Elem> exhaustive;
  bool exhaustive_ran = false;
  // fast is one of the exhaustive lifts.
  bool agree = true;
};
// Lifts an idempotent of (R/I)_e to an idempotent of R_e. I must be
// graded-nil. Throws Error(kNotIdempotentModI) when abar is not an idempotent
// of the identity component.
IdempotentLift lift_idempotent(const GradedRing& gr, const GradedQuotient& q, Elem abar,
                               bool exhaustive = true);

struct GradedProperty {
  std::string name;
  std::function<bool(const GradedRing&, Elem)> holds;
};
GradedProperty homogeneous_nilpotent_property();
GradedProperty homogeneous_unit_property();

struct AbabCondition {
  bool holds = true;
  std::size_t checked = 0;
  Json witness;
};
struct AbabReport {
  std::string property;
  AbabCondition negation;      // (i)
  AbabCondition corner;        // (ii)
  AbabCondition reassembly;    // (iii)
  bool holds() const { return negation.holds && corner.holds && reassembly.holds; }
};
// Per-instance evidence only: a pass does not make P compatible in general.
AbabReport check_abab_conditions(const GradedProperty& p, const GradedRing& gr);

}  // namespace grl
