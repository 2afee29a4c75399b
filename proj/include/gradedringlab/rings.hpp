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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradedringlab/ring.hpp"

namespace grl {

// Z/n with elements 0..n-1 in their natural order.
Ring ring_zmod(unsigned n);
// k-fold product of Z/2; element bits are the coordinates, first coordinate
// most significant.
Ring ring_boolean(unsigned k);
// The ring with one element, 0 = 1.
Ring zero_ring();
// base[x]/(x^k); element index is the coefficient tuple (c0, ..., c_{k-1})
// read with c0 most significant.
Ring truncated_polynomial_ring(const Ring& base, unsigned k);

// n x n matrices over base. Coordinates are entries in row-major order with
// the first entry most significant. Throws CapExceeded when base.size()^(n^2)
// passes limits().max_elements.
Ring matrix_ring(const Ring& base, unsigned n);
// Upper-triangular n x n matrices; coordinates are the entries (i, j), i <= j,
// in row-major order.
Ring triangular_ring(const Ring& base, unsigned n);

// Componentwise product. Coordinates are factor elements, first factor most
// significant.
Ring product_ring(std::span<const Ring> factors);
Ring product_ring(const Ring& a, const Ring& b);

// Carrier given as an explicit subset of `parent` that is closed under +, neg
// and *, with its own identity `one` (a corner ring fRf has identity f).
// Throws Error(kInvalidArgument) when the subset is not closed or `one` is not
// an identity on it. Local indices follow the sorted parent indices.
Ring subset_ring(const Ring& parent, std::span<const Elem> members, Elem one,
                 std::string description);

// Structural access for matrix and triangular backends.
struct MatrixShape {
  Ring base;
  unsigned n = 0;
  bool triangular = false;
};
// Returns the shape when r is (a tabulation of) a matrix or triangular ring.
std::optional<MatrixShape> matrix_shape(const Ring& r);
// Full n x n entry list (row-major) of a matrix/triangular element; entries
// below the diagonal are zero for triangular rings.
std::vector<Elem> matrix_entries(const Ring& r, Elem a);
Elem matrix_from_entries(const Ring& r, std::span<const Elem> entries);

// Component access for product rings.
std::vector<Ring> product_factors(const Ring& r);
std::vector<Elem> product_coordinates(const Ring& r, Elem a);
Elem product_from_coordinates(const Ring& r, std::span<const Elem> coords);

// Parent ring and parent-side representatives for subset rings.
struct SubsetInfo {
  Ring parent;
  std::vector<Elem> members;  // local index -> parent element
};
std::optional<SubsetInfo> subset_info(const Ring& r);

}  // namespace grl
