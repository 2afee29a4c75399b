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

#include <vector>

#include "gradedringlab/graded_ring.hpp"

namespace grl {

// All homogeneous right ideals, built as the closure of the principal right
// ideals hR (h homogeneous) under sums. Every homogeneous right ideal is the
// sum of the principal ideals of its homogeneous members, so the closure is
// complete. Group gradings only.
struct HomogeneousRightIdealLattice {
  std::vector<SubsetIdeal> members;
  // Indices into members of the maximal proper ones.
  std::vector<std::size_t> maximal;
  std::size_t principal_count = 0;
};

// Throws CapExceeded when the homogeneous part passes max_homogeneous or the
// lattice passes max_ideals.
HomogeneousRightIdealLattice homogeneous_right_ideals(const GradedRing& gr);

struct GradedRadical {
  SubsetIdeal ideal;
  std::size_t maximal_count = 0;
  bool two_sided = false;
  bool homogeneous = false;
  // J^g(R) cap R_e = J(R_e).
  bool e_component_matches = false;
};

// Intersection of the maximal homogeneous right ideals (zero ideal for the
// zero ring). The flags record the per-instance verification.
GradedRadical graded_jacobson_radical(const GradedRing& gr);

bool is_graded_local(const GradedRing& gr);

}  // namespace grl
