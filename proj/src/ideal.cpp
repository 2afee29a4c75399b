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

#include "gradedringlab/ideal.hpp"

#include <algorithm>

#include "gradedringlab/errors.hpp"

namespace grl {
namespace {

bool right_closed(IdealKind k) { return k == IdealKind::kRightIdeal || k == IdealKind::kTwoSided; }
bool left_closed(IdealKind k) { return k == IdealKind::kLeftIdeal || k == IdealKind::kTwoSided; }

IdealKind kind_from(bool right, bool left) {
  if (right && left) return IdealKind::kTwoSided;
  if (right) return IdealKind::kRightIdeal;
  if (left) return IdealKind::kLeftIdeal;
  return IdealKind::kAdditiveSubgroup;
}

// Adds x to the additive subgroup, appending whole cosets H + kx.
void extend_span(const Ring& r, SubsetIdeal& s, Elem x) {
  if (s.members.contains(x)) return;
  s.generators.push_back(x);
  const std::vector<Elem> base = s.members.members();
  Elem shift = x;
  while (!s.members.contains(shift)) {
    for (Elem h : base) s.members.insert(r.add(h, shift));
    shift = r.add(shift, x);
  }
}

SubsetIdeal zero_ideal(const Ring& r, IdealKind kind) {
  SubsetIdeal s{r, ElementSet(r.size()), {}, kind};
  s.members.insert(r.zero());
  return s;
}

class QuotientImpl final : public RingImpl {
 public:
  QuotientImpl(Ring parent, std::vector<Elem> projection, std::vector<Elem> rep,
               std::string description)
      : parent_(std::move(parent)), projection_(std::move(projection)),
        rep_(std::move(rep)), description_(std::move(description)) {}
  std::size_t size() const override { return rep_.size(); }
  Elem zero() const override { return projection_[parent_.zero()]; }
  Elem one() const override { return projection_[parent_.one()]; }
  Elem add(Elem a, Elem b) const override { return projection_[parent_.add(rep_[a], rep_[b])]; }
  Elem neg(Elem a) const override { return projection_[parent_.neg(rep_[a])]; }
  Elem mul(Elem a, Elem b) const override { return projection_[parent_.mul(rep_[a], rep_[b])]; }
  std::string backend() const override { return "quotient-by"; }
  std::string describe() const override { return description_; }
  Json literal(Elem a) const override { return parent_.literal(rep_[a]); }
  Elem from_literal(const Json& lit) const override {
    return projection_[parent_.from_literal(lit)];
  }

 private:
  Ring parent_;
  std::vector<Elem> projection_;
  std::vector<Elem> rep_;
  std::string description_;
};

}  // namespace

const char* ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::kAdditiveSubgroup: return "additive";
    case IdealKind::kRightIdeal: return "right";
    case IdealKind::kLeftIdeal: return "left";
    case IdealKind::kTwoSided: return "two-sided";
  }
  return "?";
}

std::vector<Elem> additive_generators(const Ring& r, std::span<const Elem> elems) {
  SubsetIdeal s = zero_ideal(r, IdealKind::kAdditiveSubgroup);
  for (Elem x : elems) extend_span(r, s, x);
  return s.generators;
}

SubsetIdeal additive_span(const Ring& r, std::span<const Elem> gens) {
  SubsetIdeal s = zero_ideal(r, IdealKind::kAdditiveSubgroup);
  for (Elem x : gens) extend_span(r, s, x);
  return s;
}

SubsetIdeal ideal_generated(const Ring& r, std::span<const Elem> gens, IdealKind kind) {
  SubsetIdeal s = zero_ideal(r, kind);
  for (Elem x : gens) extend_span(r, s, x);
  if (kind == IdealKind::kAdditiveSubgroup) return s;
  const bool right = right_closed(kind);
  const bool left = left_closed(kind);
  const auto n = static_cast<Elem>(r.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    const Elem g = s.generators[i];
    for (Elem x = 0; x < n; ++x) {
      if (right) extend_span(r, s, r.mul(g, x));
      if (left) extend_span(r, s, r.mul(x, g));
    }
  }
  return s;
}

SubsetIdeal ideal_sum(const SubsetIdeal& a, const SubsetIdeal& b) {
  const IdealKind kind = kind_from(right_closed(a.kind) && right_closed(b.kind),
                                   left_closed(a.kind) && left_closed(b.kind));
  SubsetIdeal s = a;
  s.kind = kind;
  for (Elem g : b.generators) extend_span(a.parent, s, g);
  return s;
}

SubsetIdeal ideal_intersection(const SubsetIdeal& a, const SubsetIdeal& b) {
  const IdealKind kind = kind_from(right_closed(a.kind) && right_closed(b.kind),
                                   left_closed(a.kind) && left_closed(b.kind));
  const std::vector<Elem> common = a.members.intersect(b.members).sorted();
  SubsetIdeal s = additive_span(a.parent, common);
  s.kind = kind;
  return s;
}

bool is_ideal_of_kind(const Ring& r, const ElementSet& s, IdealKind kind) {
  if (!s.contains(r.zero())) return false;
  const std::vector<Elem> sorted = s.sorted();
  const SubsetIdeal span = additive_span(r, sorted);
  if (span.size() != s.size()) return false;
  const auto n = static_cast<Elem>(r.size());
  for (Elem g : span.generators) {
    for (Elem x = 0; x < n; ++x) {
      if (right_closed(kind) && !s.contains(r.mul(g, x))) return false;
      if (left_closed(kind) && !s.contains(r.mul(x, g))) return false;
    }
  }
  return true;
}

std::optional<unsigned> ideal_power_nilpotent(const SubsetIdeal& ideal) {
  const Ring& r = ideal.parent;
  if (ideal.is_zero()) return 1;
  SubsetIdeal power = ideal;
  for (unsigned k = 2;; ++k) {
    SubsetIdeal next = zero_ideal(r, IdealKind::kAdditiveSubgroup);
    for (Elem x : power.generators)
      for (Elem y : ideal.generators) extend_span(r, next, r.mul(x, y));
    if (next.is_zero()) return k;
    if (next.size() == power.size()) return std::nullopt;
    power = std::move(next);
  }
}

bool is_nil_set(const Ring& r, std::span<const Elem> s) {
  return std::all_of(s.begin(), s.end(), [&](Elem x) { return r.is_nilpotent(x); });
}

SubsetIdeal jacobson_radical(const Ring& r) {
  const Classification& c = r.classification();
  const auto n = static_cast<Elem>(r.size());
  SubsetIdeal j = zero_ideal(r, IdealKind::kTwoSided);
  for (Elem x : c.nilpotents) {
    if (j.members.contains(x)) continue;
    bool in_radical = true;
    for (Elem y = 0; y < n && in_radical; ++y)
      in_radical = c.inverse[r.sub(r.one(), r.mul(x, y))] != kNoElem;
    if (in_radical) extend_span(r, j, x);
  }
  if (!is_ideal_of_kind(r, j.members, IdealKind::kTwoSided))
    throw Error(ErrorKind::kVerification, "Jacobson radical failed the two-sided ideal check");
  return j;
}

QuotientRing quotient_ring(const SubsetIdeal& ideal) {
  const Ring& r = ideal.parent;
  if (!is_ideal_of_kind(r, ideal.members, IdealKind::kTwoSided))
    throw Error(ErrorKind::kInvalidArgument, "quotient needs a two-sided ideal");
  const auto n = static_cast<Elem>(r.size());
  std::vector<Elem> projection(n, kNoElem);
  std::vector<Elem> rep;
  const std::vector<Elem>& members = ideal.members.members();
  for (Elem x = 0; x < n; ++x) {
    if (projection[x] != kNoElem) continue;
    const auto coset = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem m : members) projection[r.add(x, m)] = coset;
  }
  std::string description = r.describe() + "/I(" + std::to_string(ideal.size()) + ")";
  Ring q = make_ring(std::make_shared<QuotientImpl>(r, projection, rep, std::move(description)));
  return QuotientRing{std::move(q), r, std::move(projection), std::move(rep)};
}

}  // namespace grl
