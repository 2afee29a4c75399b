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

#include <optional>
#include <span>
#include <vector>

#include "gradedringlab/element_set.hpp"
#include "gradedringlab/ring.hpp"

namespace grl {

enum class IdealKind { kAdditiveSubgroup, kRightIdeal, kLeftIdeal, kTwoSided };

const char* ideal_kind_name(IdealKind kind);

// Subset of a ring closed under +, neg and the absorption its kind demands.
struct SubsetIdeal {
  Ring parent;
  ElementSet members;
  // Additive generators chosen greedily in the order elements were added.
  std::vector<Elem> generators;
  IdealKind kind = IdealKind::kAdditiveSubgroup;

  std::size_t size() const { return members.size(); }
  bool contains(Elem x) const { return members.contains(x); }
  bool is_zero() const { return members.size() == 1; }
  bool is_whole() const { return members.size() == parent.size(); }
};

// Greedy additive basis of the subgroup generated by `elems`: walks `elems` in
// order and keeps each element not yet in the running span.
std::vector<Elem> additive_generators(const Ring& r, std::span<const Elem> elems);

SubsetIdeal additive_span(const Ring& r, std::span<const Elem> gens);
// Smallest ideal of the given kind containing gens. Two-sided and one-sided
// closure only multiplies the additive generators by every ring element.
SubsetIdeal ideal_generated(const Ring& r, std::span<const Elem> gens,
                            IdealKind kind);
SubsetIdeal ideal_sum(const SubsetIdeal& a, const SubsetIdeal& b);
SubsetIdeal ideal_intersection(const SubsetIdeal& a, const SubsetIdeal& b);

// Checks closure of an explicit set; returns the first violating pair or
// element (canonical order) as a description when it fails.
bool is_ideal_of_kind(const Ring& r, const ElementSet& s, IdealKind kind);

// Smallest k with I^k = 0, where I^k is the additive span of k-fold products.
// nullopt when the powers stabilize at a nonzero ideal.
std::optional<unsigned> ideal_power_nilpotent(const SubsetIdeal& ideal);

bool is_nil_set(const Ring& r, std::span<const Elem> s);

// {x : 1 - xr is a unit for every r}, returned as a verified two-sided ideal.
SubsetIdeal jacobson_radical(const Ring& r);

struct QuotientRing {
  Ring ring;
  Ring parent;
  // parent element -> coset index
  std::vector<Elem> projection;
  // coset index -> smallest parent element in the coset
  std::vector<Elem> representative;
};

// R/I for a two-sided ideal. Coset indices follow the order of their
// smallest members.
QuotientRing quotient_ring(const SubsetIdeal& ideal);

}  // namespace grl
