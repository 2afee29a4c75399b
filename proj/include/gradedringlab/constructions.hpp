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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "gradedringlab/graded_ring.hpp"

namespace grl {

// (g_1, ..., g_n) as group labels.
using Sigma = std::vector<Label>;

// M_n(R)(sigma): the (i, j) entry of the lambda component ranges over
// R_{g_i lambda g_j^{-1}}.
GradedRing graded_matrix_ring(const GradedRing& gr, unsigned n, const Sigma& sigma);

struct GradedTriangular {
  GradedRing graded;
  // Matrices with zero diagonal; homogeneous, two-sided, I^n = 0.
  SubsetIdeal strictly_upper;
  unsigned nilpotency_index = 0;
  // n-fold product of the diagonal gradings (conjugates of GR by g_i), and
  // the verified isomorphism from the quotient by strictly_upper onto it.
  GradedRing diagonal_product;
  GradedQuotient quotient;
};

// T_n(R)(sigma): the matrix-grading components restricted to upper-triangular
// matrices. Verifies the strictly-upper ideal and the diagonal isomorphism.
GradedTriangular graded_triangular_ring(const GradedRing& gr, unsigned n,
                                        const Sigma& sigma);

// Grading of R with components R^g_lambda = R_{g lambda g^{-1}}.
GradedRing conjugate_grading(const GradedRing& gr, Label g);

// R[H] for a normal subgroup H of the grading group with the twisted rule
// (r_g g')(r_h h') = r_g r_h (h^{-1} g' h h'), G-graded by
// (R[H])_g = sum over h in H of R_{g h^{-1}} h. Coefficient tuples follow the
// order of H's labels, first most significant. Associativity, unitality and
// the G/H coarsening are verified.
GradedRing graded_subgroup_ring(const GradedRing& gr, std::span<const Label> subgroup);
GradedRing graded_group_ring(const GradedRing& gr);

struct GroupRingInfo {
  GradedRing base;
  std::vector<Label> support;  // the labels of H, in coefficient order
};
std::optional<GroupRingInfo> group_ring_info(const Ring& r);
std::vector<Elem> group_ring_coefficients(const Ring& r, Elem x);
Elem group_ring_element(const Ring& r, std::span<const Elem> coefficients);

// f(sum r_g) = sum r_g g^{-1} from R onto (R[G])_e, checked as a bijective
// ring homomorphism.
HomReport group_ring_e_isomorphism(const GradedRing& base, const GradedRing& group_ring);

// fRf with identity f and components f R_g f.
// Throws Error(kNotIdempotent) or Error(kNotDegreeE).
GradedRing corner_ring(const GradedRing& gr, Elem f);

struct PeirceBlocks {
  // fRf, fR(1-f), (1-f)Rf, (1-f)R(1-f) as sorted parent elements.
  std::array<std::vector<Elem>, 4> blocks;
};
PeirceBlocks peirce_blocks(const GradedRing& gr, Elem f);

struct Augmentation {
  // R[H] and R coarsened to G/H.
  GradedRing group_ring;
  GradedRing base;
  // image[x] = sum of the coefficients of x.
  std::vector<Elem> image;
  // Kernel of the map; homogeneous for the G/H grading.
  SubsetIdeal delta;
  // 2 is nilpotent in R and H is a 2-group.
  bool two_group_hypothesis = false;
  std::optional<unsigned> delta_nilpotency;
};
// Throws Error(kVerification) if the map or Delta fails any stated property,
// including nilpotency of Delta under the 2-group hypothesis.
Augmentation augmentation(const GradedRing& group_ring);

// Componentwise product over the same group; Error(kGroupMismatch) otherwise.
GradedRing graded_direct_product(std::span<const GradedRing> factors);
GradedRing graded_direct_product(const GradedRing& a, const GradedRing& b);

}  // namespace grl
