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

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/ideal.hpp"
#include "gradedringlab/rings.hpp"
#include "oracles.hpp"

namespace grl {
namespace {

GradedRing fixture(const std::string& name) { return find_fixture(name)->build(); }

std::vector<Elem> elems(const Ring& r, std::initializer_list<const char*> lits) {
  std::vector<Elem> out;
  for (const char* l : lits) out.push_back(r.from_literal(Json::parse(l)));
  return out;
}

ErrorKind violation_kind(const Ring& r, const FiniteGroup& g, const std::vector<std::vector<Elem>>& comps) {
  try {
    verify_grading(r, g, comps);
  } catch (const GradingError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "grading accepted";
  return ErrorKind::kVerification;
}

TEST(Grading, TrivialAndCheckerboardAreValid) {
  const Ring z2 = ring_zmod(2);
  const GradedRing t = trivial_grading(z2, cyclic_group(1));
  EXPECT_EQ(t.degree(1).kind, DegreeKind::kHomogeneous);
  EXPECT_EQ(t.degree(1).label, 0);
  EXPECT_EQ(t.degree(0).kind, DegreeKind::kZero);

  const Ring m2 = matrix_ring(ring_zmod(2), 2);
  const auto diag = elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]", "[[1,0],[0,1]]"});
  const auto anti = elems(m2, {"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[0,1],[1,0]]"});
  const GradedRing cb = verify_grading(m2, cyclic_group(2), {diag, anti});
  EXPECT_EQ(cb.homogeneous().size(), 7u);
  const Elem e12 = m2.from_literal(Json::parse("[[0,1],[0,0]]"));
  EXPECT_EQ(cb.degree(e12).label, 1);
  const Elem mixed = m2.from_literal(Json::parse("[[1,1],[0,0]]"));
  EXPECT_EQ(cb.degree(mixed).kind, DegreeKind::kMixed);
  EXPECT_FALSE(cb.is_homogeneous(mixed));
  try {
    graded_nil_clean_element(cb, mixed);
    FAIL() << "expected NotHomogeneous";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHomogeneous);
  }
  // Decomposition map: the parts of every element add back to it and lie
  // in the right components.
  for (Elem x = 0; x < m2.size(); ++x) {
    const auto p = cb.parts(x);
    EXPECT_EQ(m2.add(p[0], p[1]), x);
    EXPECT_TRUE(cb.component(0).contains(p[0]));
    EXPECT_TRUE(cb.component(1).contains(p[1]));
  }
}

TEST(Grading, Violations) {
  const Ring m2 = matrix_ring(ring_zmod(2), 2);
  const FiniteGroup c2 = cyclic_group(2);
  const auto zero = elems(m2, {"[[0,0],[0,0]]"});
  const auto diag = elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]", "[[1,0],[0,1]]"});
  EXPECT_EQ(violation_kind(m2, c2, {diag, zero}), ErrorKind::kNotDirectSum);
  EXPECT_EQ(violation_kind(m2, c2, {elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]"}), zero}),
            ErrorKind::kNotSubgroup);
  // R_e = <1, E12>, R_g = <E11, E21>: a direct sum with E11 * E11 leaking.
  EXPECT_EQ(violation_kind(m2, c2,
                           {elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,1]]", "[[0,1],[0,0]]", "[[1,1],[0,1]]"}),
                            elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,0],[1,0]]", "[[1,0],[1,0]]"})}),
            ErrorKind::kProductLeak);
  // R_e = <E11, E12>, R_g = <E21, E22>: 1 = E11 + E22 is not in R_e.
  EXPECT_EQ(violation_kind(m2, c2,
                           {elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,1],[0,0]]", "[[1,1],[0,0]]"}),
                            elems(m2, {"[[0,0],[0,0]]", "[[0,0],[1,0]]", "[[0,0],[0,1]]", "[[0,0],[1,1]]"})}),
            ErrorKind::kIdentityNotInE);
}

TEST(Grading, ViolationWitnessIsReported) {
  const Ring m2 = matrix_ring(ring_zmod(2), 2);
  const auto diag = elems(m2, {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]", "[[1,0],[0,1]]"});
  const auto dup = diag;
  try {
    verify_grading(m2, cyclic_group(2), {diag, dup});
    FAIL();
  } catch (const GradingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotDirectSum);
    EXPECT_FALSE(e.witness().is_null());
  }
}

TEST(Grading, HomogeneousIdealsAgreeWithOracle) {
  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Ring& r = cb.ring();
  for (oracle::Mask m : oracle::additive_subgroups(r)) {
    const ElementSet s(r.size(), oracle::members(m));
    EXPECT_EQ(is_homogeneous_ideal(cb, s), oracle::homogeneous_subgroup(cb, m)) << m;
  }
  const Elem j = r.from_literal(Json::parse("[[1,1],[1,1]]"));
  const Elem gens[] = {j};
  EXPECT_FALSE(is_homogeneous_ideal(cb, additive_span(r, gens).members));
}

TEST(Grading, QuotientGrading) {
  const GradedRing z4 = fixture("Z4-trivial");
  const Elem two[] = {2};
  const GradedQuotient q = quotient_graded(z4, ideal_generated(z4.ring(), two, IdealKind::kTwoSided));
  EXPECT_EQ(q.graded.ring().size(), 2u);
  EXPECT_EQ(q.graded.component(0).size(), 2u);
  const GradedQuotient same = quotient_graded(z4, ideal_generated(z4.ring(), std::span<const Elem>{}, IdealKind::kTwoSided));
  EXPECT_EQ(same.graded.ring().size(), 4u);

  const GradedRing t2 = fixture("T2-F2-C2-offdiagonal");
  const Elem e12 = t2.ring().from_literal(Json::parse("[[0,1],[0,0]]"));
  const Elem g[] = {e12};
  const GradedQuotient qt = quotient_graded(t2, ideal_generated(t2.ring(), g, IdealKind::kTwoSided));
  EXPECT_EQ(qt.graded.ring().size(), 4u);
  EXPECT_EQ(qt.graded.component(1).size(), 1u);

  // The checkerboard ring is simple, so a mixed generator yields everything.
  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Elem mixed = cb.ring().from_literal(Json::parse("[[1,1],[0,0]]"));
  const Elem mg[] = {mixed};
  EXPECT_TRUE(ideal_generated(cb.ring(), mg, IdealKind::kTwoSided).is_whole());
}

TEST(Grading, QuotientRejectsNonHomogeneousIdeal) {
  // F2[C2] natural grading: the augmentation ideal {0, 1+g} is not homogeneous.
  const GradedRing gr = fixture("F2-C2-groupring-natural");
  const Ring& r = gr.ring();
  Elem sum = r.add(r.one(), gr.component_generators(1).front());
  const Elem gens[] = {sum};
  try {
    quotient_graded(gr, ideal_generated(r, gens, IdealKind::kTwoSided));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHomogeneous);
  }
}

TEST(Grading, Coarsening) {
  const GradedRing cb = fixture("M2-F2-checkerboard");
  const std::vector<Label> all{0, 1}, e{0};
  const Coarsening full = coarsen(cb, all);
  EXPECT_EQ(full.graded.num_labels(), 1);
  EXPECT_TRUE(full.graded.is_trivial());
  const Coarsening none = coarsen(cb, e);
  EXPECT_EQ(none.graded.component_lists(), cb.component_lists());

  // Compositionality: coarsening by C4 equals coarsening by {e,g2} and then by
  // the rest.
  const GradedRing gr = fixture("F2-H-in-C4");
  const std::vector<Label> h{0, 2};
  const Coarsening step = coarsen(gr, h);
  const std::vector<Label> rest{0, 1};
  EXPECT_TRUE(coarsen(step.graded, rest).graded.is_trivial());
}

TEST(Grading, GradedNil) {
  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Ring& r = cb.ring();
  EXPECT_TRUE(is_graded_nil(cb, ElementSet(r.size(), std::vector<Elem>{r.zero()})));
  std::vector<Elem> all(r.size());
  std::iota(all.begin(), all.end(), 0);
  const auto w = graded_nil_witness(cb, ElementSet(r.size(), all));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(r.literal(*w), Json::parse("[[0,1],[1,0]]"));
  EXPECT_EQ(r.mul(*w, *w), r.one());
  EXPECT_FALSE(is_graded_nil(cb));

  const GradedRing t2 = fixture("T2-F2");
  const Elem e12 = t2.ring().from_literal(Json::parse("[[0,1],[0,0]]"));
  EXPECT_TRUE(is_graded_nil(t2, ElementSet(t2.ring().size(), std::vector<Elem>{t2.ring().zero(), e12})));
  EXPECT_TRUE(is_graded_nil(fixture("zero-ring-C2")));
}

TEST(Grading, SGradings) {
  for (const auto& f : catalog()) {
    const GradedRing gr = f.build();
    if (!gr.is_group_graded()) continue;
    const GradedRing s = as_s_grading(gr);
    EXPECT_TRUE(is_cancellative(s.labels())) << f.name;
    EXPECT_NO_THROW(verify_s_grading(gr.ring(), PartialGroupoid::from_group(gr.group()), gr.component_lists()))
        << f.name;
  }
  EXPECT_EQ(groupoid_idempotents(PartialGroupoid::from_group(cyclic_group(2))), std::vector<Label>{0});

  // S = {e, s}: ee = e, es = se = s, ss undefined. In F2[C2] with R_s = {0, g}
  // the product g * g = 1 is nonzero where ss is undefined.
  const PartialGroupoid s({{0, 1}, {1, std::nullopt}}, {"e", "s"});
  const GradedRing gr = fixture("F2-C2-groupring-natural");
  try {
    verify_s_grading(gr.ring(), s, gr.component_lists());
    FAIL() << "expected a condition (ii) violation";
  } catch (const GradingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConditionTwo);
    EXPECT_FALSE(e.witness().is_null());
  }
  const PartialGroupoid b = brandt_groupoid(2);
  EXPECT_TRUE(is_cancellative(b));
  EXPECT_EQ(groupoid_idempotents(b).size(), 2u);
}

TEST(Grading, ZeroDivisorsAndDivision) {
  const GradedRing gr = fixture("F2-C2-groupring-natural");
  EXPECT_TRUE(homogeneous_zero_divisor_free(gr));
  EXPECT_TRUE(is_graded_division(gr));
  EXPECT_FALSE(homogeneous_zero_divisor_free(fixture("M2-F2-checkerboard")));
  EXPECT_TRUE(homogeneous_zero_divisor_free(trivial_grading(ring_zmod(2), cyclic_group(1))));
  // Oracle over every catalog ring: graded division means every nonzero
  // homogeneous element has a two-sided inverse.
  for (const auto& f : catalog()) {
    const GradedRing g = f.build();
    if (!g.is_group_graded()) continue;
    bool division = g.ring().size() > 1;
    for (Elem x : oracle::homogeneous(g))
      if (x != g.ring().zero() && !oracle::inverse(g.ring(), x)) division = false;
    EXPECT_EQ(is_graded_division(g), division) << f.name;
  }
}

TEST(Grading, IdentityComponentRing) {
  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Ring re = identity_component_ring(cb);
  EXPECT_EQ(re.size(), 4u);
  EXPECT_TRUE(oracle::nil_clean_ring(re));
  const GradedRing z = fixture("M2-F2-Zgraded");
  EXPECT_EQ(identity_component_ring(z).size(), 4u);
}

}  // namespace
}  // namespace grl
