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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gradedringlab/constructions.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/radicals.hpp"
#include "gradedringlab/rings.hpp"
#include "oracles.hpp"

namespace grl {
namespace {

GradedRing fixture(const std::string& name) { return find_fixture(name)->build(); }

Elem lit(const Ring& r, const char* l) { return r.from_literal(Json::parse(l)); }

oracle::Mask mask(const SubsetIdeal& i) { return oracle::mask_of(i.members.members()); }

// Group-graded catalog rings small enough for the subgroup oracle.
std::vector<std::pair<std::string, GradedRing>> small_group_graded() {
  std::vector<std::pair<std::string, GradedRing>> out;
  for (const Fixture& f : catalog()) {
    GradedRing gr = f.build();
    if (gr.is_group_graded() && gr.ring().size() <= 64) out.emplace_back(f.name, std::move(gr));
  }
  return out;
}

std::vector<oracle::Mask> oracle_lattice(const GradedRing& gr) {
  std::vector<oracle::Mask> out;
  for (oracle::Mask m : oracle::additive_subgroups(gr.ring()))
    if (oracle::right_ideal(gr.ring(), m) && oracle::homogeneous_subgroup(gr, m)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Lattice, Examples) {
  const auto f2 = homogeneous_right_ideals(trivial_grading(ring_zmod(2), cyclic_group(1)));
  EXPECT_EQ(f2.members.size(), 2u);

  const auto z4 = homogeneous_right_ideals(fixture("Z4-trivial"));
  std::set<oracle::Mask> z4m;
  for (const auto& m : z4.members) z4m.insert(mask(m));
  EXPECT_EQ(z4m, (std::set<oracle::Mask>{0b0001, 0b0101, 0b1111}));

  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Ring& r = cb.ring();
  const auto lat = homogeneous_right_ideals(cb);
  const oracle::Mask row1 = oracle::mask_of(
      {lit(r, "[[0,0],[0,0]]"), lit(r, "[[1,0],[0,0]]"), lit(r, "[[0,1],[0,0]]"), lit(r, "[[1,1],[0,0]]")});
  const oracle::Mask row2 = oracle::mask_of(
      {lit(r, "[[0,0],[0,0]]"), lit(r, "[[0,0],[1,0]]"), lit(r, "[[0,0],[0,1]]"), lit(r, "[[0,0],[1,1]]")});
  std::set<oracle::Mask> maximal;
  for (std::size_t i : lat.maximal) maximal.insert(mask(lat.members[i]));
  EXPECT_EQ(maximal, (std::set<oracle::Mask>{row1, row2}));
}

TEST(Lattice, MatchesSubgroupOracle) {
  for (const auto& [name, gr] : small_group_graded()) {
    const auto lat = homogeneous_right_ideals(gr);
    std::vector<oracle::Mask> got;
    for (const auto& m : lat.members) got.push_back(mask(m));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle_lattice(gr)) << name;
  }
}

TEST(GradedRadical, Examples) {
  const GradedRing t2 = fixture("T2-F2");
  const Ring& r = t2.ring();
  EXPECT_EQ(mask(graded_jacobson_radical(t2).ideal), oracle::mask_of({r.zero(), lit(r, "[[0,1],[0,0]]")}));
  EXPECT_TRUE(graded_jacobson_radical(fixture("M2-F2-checkerboard")).ideal.is_zero());
  EXPECT_EQ(mask(graded_jacobson_radical(fixture("Z4-trivial")).ideal), oracle::Mask{0b0101});
  EXPECT_TRUE(graded_jacobson_radical(fixture("zero-ring-C2")).ideal.is_zero());
}

TEST(GradedRadical, MatchesOracleAndIsVerified) {
  for (const auto& [name, gr] : small_group_graded()) {
    const GradedRadical jg = graded_jacobson_radical(gr);
    EXPECT_EQ(mask(jg.ideal), oracle::graded_jacobson(gr)) << name;
    EXPECT_TRUE(jg.two_sided) << name;
    EXPECT_TRUE(jg.homogeneous) << name;
    EXPECT_TRUE(jg.e_component_matches) << name;
    if (gr.is_trivial()) EXPECT_EQ(mask(jg.ideal), oracle::jacobson(gr.ring())) << name;
    if (is_graded_division(gr)) EXPECT_TRUE(jg.ideal.is_zero()) << name;
  }
}

TEST(GradedRadical, QuotientIsSemisimple) {
  for (const auto& [name, gr] : small_group_graded()) {
    const GradedRadical jg = graded_jacobson_radical(gr);
    const GradedQuotient q = quotient_graded(gr, jg.ideal);
    EXPECT_TRUE(graded_jacobson_radical(q.graded).ideal.is_zero()) << name;
  }
}

TEST(GradedLocal, Cases) {
  EXPECT_TRUE(is_graded_local(fixture("Z4-trivial")));
  EXPECT_FALSE(is_graded_local(fixture("M2-F2-checkerboard")));
  EXPECT_FALSE(is_graded_local(fixture("zero-ring-C2")));
  // F2[C2]: g is a homogeneous unit, so the only proper homogeneous right ideal is 0.
  const GradedRing gc2 = graded_group_ring(trivial_grading(ring_zmod(2), cyclic_group(2)));
  EXPECT_TRUE(is_graded_local(gc2));
  EXPECT_TRUE(graded_jacobson_radical(gc2).ideal.is_zero());

  for (const auto& [name, gr] : small_group_graded()) {
    const auto lat = oracle_lattice(gr);
    const oracle::Mask all = oracle::whole(gr.ring());
    std::size_t maximal = 0;
    for (oracle::Mask m : lat) {
      if (m == all) continue;
      bool top = true;
      for (oracle::Mask n : lat)
        if (n != m && n != all && (n & m) == m) top = false;
      maximal += top;
    }
    EXPECT_EQ(is_graded_local(gr), maximal == 1) << name;
  }
}

TEST(GradedRadical, RejectsSGradingsAndHonoursCaps) {
  EXPECT_THROW(homogeneous_right_ideals(fixture("brandt-M2-F2")), Error);
  Limits l = limits();
  l.max_homogeneous = 4;
  ScopedLimits scope(l);
  EXPECT_THROW(homogeneous_right_ideals(fixture("M2-F2-checkerboard")), CapExceeded);
}

}  // namespace
}  // namespace grl
