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
#include "gradedringlab/constructions.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/ideal.hpp"
#include "gradedringlab/rings.hpp"
#include "oracles.hpp"

namespace grl {
namespace {

GradedRing fixture(const std::string& name) { return find_fixture(name)->build(); }

Elem lit(const Ring& r, const char* l) { return r.from_literal(Json::parse(l)); }

GradedRing f2_c2() { return graded_group_ring(trivial_grading(ring_zmod(2), cyclic_group(2))); }

// The element h of R[G] with coefficient 1 at label h and 0 elsewhere.
Elem group_element(const GradedRing& gr, std::size_t h, std::size_t order) {
  std::vector<Elem> c(order, 0);
  c[h] = 1;
  return group_ring_element(gr.ring(), c);
}

TEST(Decompositions, PlainRing) {
  const Ring z4 = ring_zmod(4);
  const auto d = nil_clean_decompositions(z4, 3);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].f, 1u);
  EXPECT_EQ(d[0].b, 2u);
  EXPECT_TRUE(d[0].commuting);

  for (const Ring& r : {ring_zmod(4), matrix_ring(ring_zmod(2), 2), ring_boolean(3)}) {
    const auto z = nil_clean_decompositions(r, r.zero());
    ASSERT_FALSE(z.empty());
    EXPECT_EQ(z[0].f, r.zero());
    EXPECT_EQ(z[0].b, r.zero());
  }
  const Ring f2 = ring_zmod(2);
  const auto one = nil_clean_decompositions(f2, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].f, 1u);
  EXPECT_EQ(one[0].b, 0u);
}

TEST(Decompositions, ExhaustiveAgainstOracle) {
  for (const Ring& r : {ring_zmod(4), ring_zmod(6), matrix_ring(ring_zmod(2), 2), triangular_ring(ring_zmod(3), 2)}) {
    for (Elem x = 0; x < r.size(); ++x) {
      std::vector<std::pair<Elem, Elem>> nil, strong, clean;
      for (Elem f = 0; f < r.size(); ++f) {
        if (!oracle::idempotent(r, f)) continue;
        const Elem b = r.add(x, r.neg(f));
        if (oracle::nilpotent(r, b)) {
          nil.emplace_back(f, b);
          if (r.mul(f, b) == r.mul(b, f)) strong.emplace_back(f, b);
        }
        if (oracle::inverse(r, b)) clean.emplace_back(f, b);
      }
      auto pairs = [](const auto& ds) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& d : ds) out.emplace_back(d.f, d.b);
        return out;
      };
      EXPECT_EQ(pairs(nil_clean_decompositions(r, x)), nil) << r.describe() << " " << x;
      EXPECT_EQ(pairs(strongly_nil_clean_decompositions(r, x)), strong) << r.describe() << " " << x;
      std::vector<std::pair<Elem, Elem>> got;
      for (const auto& d : clean_decompositions(r, x)) got.emplace_back(d.f, d.u);
      EXPECT_EQ(got, clean) << r.describe() << " " << x;
    }
    EXPECT_EQ(is_nil_clean_ring(r), oracle::nil_clean_ring(r)) << r.describe();
  }
}

TEST(Decompositions, GradedExamples) {
  const GradedRing zg = fixture("M2-F2-Zgraded");
  const Elem e12 = lit(zg.ring(), "[[0,1],[0,0]]");
  const auto d = graded_nil_clean_element(zg, e12);
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].f, zg.ring().zero());
  EXPECT_EQ(d[0].b, e12);

  const GradedRing cb = fixture("M2-F2-checkerboard");
  const Elem anti = lit(cb.ring(), "[[0,1],[1,0]]");
  EXPECT_TRUE(graded_nil_clean_element(cb, anti).empty());
  EXPECT_TRUE(graded_strongly_nil_clean_element(cb, anti).empty());

  const GradedRing gc2 = f2_c2();
  const Elem g = group_element(gc2, 1, 2);
  EXPECT_TRUE(graded_nil_clean_element(gc2, g).empty());
  const auto c = graded_clean_element(gc2, g);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c[0].f, gc2.ring().zero());
  EXPECT_EQ(c[0].u, g);

  try {
    graded_nil_clean_element(cb, lit(cb.ring(), "[[1,1],[0,0]]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHomogeneous);
  }
}

TEST(Verdicts, Examples) {
  EXPECT_TRUE(is_graded_nil_clean(fixture("M2-F2-Zgraded")).holds);
  const Verdict cb = is_graded_nil_clean(fixture("M2-F2-checkerboard"));
  EXPECT_FALSE(cb.holds);
  ASSERT_TRUE(cb.witness.has_value());
  const GradedRing checker = fixture("M2-F2-checkerboard");
  EXPECT_EQ(checker.degree(*cb.witness).label, 1);
  EXPECT_TRUE(oracle::inverse(checker.ring(), *cb.witness).has_value());
  const GradedRing z4 = fixture("Z4-trivial");
  EXPECT_TRUE(is_graded_nil_clean(z4).holds);
  EXPECT_TRUE(is_graded_strongly_nil_clean(z4).holds);

  EXPECT_TRUE(is_graded_2_nil_clean(fixture("M2-F2-Zgraded")).holds);
  EXPECT_TRUE(is_graded_2_nil_clean(fixture("T2-F2-C2-offdiagonal")).holds);
  EXPECT_TRUE(is_graded_2_nil_clean(fixture("zero-ring-C2")).holds);
}

bool two_nil_clean_oracle(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const auto h = oracle::homogeneous(gr);
  std::vector<Elem> idem, nil;
  for (Elem x : h) {
    if (oracle::idempotent(r, x)) idem.push_back(x);
    if (oracle::nilpotent(r, x)) nil.push_back(x);
  }
  for (Elem x = 0; x < r.size(); ++x) {
    bool found = false;
    for (Elem f : idem)
      for (Elem b : nil)
        for (Elem c : nil) found = found || r.add(r.add(f, b), c) == x;
    if (!found) return false;
  }
  return true;
}

TEST(Verdicts, CatalogAgainstOracle) {
  std::size_t compared = 0;
  for (const Fixture& f : catalog()) {
    const GradedRing gr = f.build();
    if (gr.ring().size() > 256) continue;
    EXPECT_EQ(is_graded_nil_clean(gr).holds, oracle::graded_property(gr, oracle::Kind::kNilClean)) << f.name;
    EXPECT_EQ(is_graded_strongly_nil_clean(gr).holds, oracle::graded_property(gr, oracle::Kind::kStronglyNilClean))
        << f.name;
    EXPECT_EQ(is_graded_clean(gr).holds, oracle::graded_property(gr, oracle::Kind::kClean)) << f.name;
    if (gr.ring().size() <= 16) EXPECT_EQ(is_graded_2_nil_clean(gr).holds, two_nil_clean_oracle(gr)) << f.name;
    ++compared;
  }
  EXPECT_GE(compared, 15u);
}

TEST(Verdicts, WitnessIsFirstFailure) {
  for (const Fixture& f : catalog()) {
    const GradedRing gr = f.build();
    if (gr.ring().size() > 256) continue;
    const Verdict v = is_graded_nil_clean(gr);
    if (v.holds) continue;
    ASSERT_TRUE(v.witness.has_value()) << f.name;
    for (Elem x : gr.homogeneous()) {
      if (x == *v.witness) break;
      EXPECT_TRUE(oracle::graded_decomposable(gr, x, oracle::Kind::kNilClean)) << f.name << " " << x;
    }
    EXPECT_FALSE(oracle::graded_decomposable(gr, *v.witness, oracle::Kind::kNilClean)) << f.name;
  }
}

TEST(Gspr, Examples) {
  const GradedRing z4 = fixture("Z4-trivial");
  const GsprResult two = gspr_decompositions(z4, 2);
  ASSERT_EQ(two.decompositions.size(), 1u);
  EXPECT_EQ(two.decompositions[0].f, 1u);
  EXPECT_EQ(two.decompositions[0].u, 1u);
  EXPECT_TRUE(two.unique);
  EXPECT_TRUE(check_nilpotency_criterion(z4, 2));
  EXPECT_FALSE(graded_strongly_nil_clean_element(z4, 2).empty());

  const GsprResult unit = gspr_decompositions(z4, 3);
  ASSERT_FALSE(unit.decompositions.empty());
  EXPECT_EQ(unit.decompositions[0].f, 0u);
  EXPECT_EQ(unit.decompositions[0].u, 3u);

  const GradedRing f2 = trivial_grading(ring_zmod(2), cyclic_group(1));
  const GsprResult one = gspr_decompositions(f2, 1);
  ASSERT_EQ(one.decompositions.size(), 1u);
  EXPECT_EQ(one.decompositions[0].f, 0u);
  EXPECT_EQ(one.decompositions[0].u, 1u);

  // a = 0: f = 1, u = -1 and 2f - 1 + u = 0.
  const GsprResult zero = gspr_decompositions(z4, 0);
  ASSERT_EQ(zero.decompositions.size(), 1u);
  EXPECT_EQ(zero.decompositions[0].f, 1u);
  EXPECT_EQ(zero.decompositions[0].u, 3u);
  EXPECT_TRUE(check_nilpotency_criterion(z4, 0));

  const GradedRing gc2 = f2_c2();
  const Elem g = group_element(gc2, 1, 2);
  EXPECT_FALSE(check_nilpotency_criterion(gc2, g));
  EXPECT_TRUE(graded_strongly_nil_clean_element(gc2, g).empty());

  const GradedRing cb = fixture("M2-F2-checkerboard");
  try {
    check_nilpotency_criterion(cb, lit(cb.ring(), "[[0,1],[0,0]]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoDecomposition);
  }
}

TEST(Gspr, DefinitionAgainstOracle) {
  for (const char* name : {"M2-F2-Zgraded", "M2-F2-checkerboard", "T2-F2-C2-offdiagonal", "Z4-C2-groupring-natural",
                           "truncpoly-F2-C3"}) {
    const GradedRing gr = fixture(name);
    const Ring& r = gr.ring();
    const auto h = oracle::homogeneous(gr);
    for (Elem a : h) {
      std::vector<std::pair<Elem, Elem>> expect;
      for (Elem f : h) {
        if (!oracle::idempotent(r, f)) continue;
        const Elem u = r.add(a, r.neg(f));
        if (!gr.is_homogeneous(u) || !oracle::inverse(r, u)) continue;
        if (r.mul(f, a) != r.mul(a, f)) continue;
        if (!oracle::nilpotent(r, r.mul(r.mul(f, a), f))) continue;
        expect.emplace_back(f, u);
      }
      const GsprResult got = gspr_decompositions(gr, a);
      std::vector<std::pair<Elem, Elem>> pairs;
      for (const auto& d : got.decompositions) pairs.emplace_back(d.f, d.u);
      EXPECT_EQ(pairs, expect) << name << " " << a;
      EXPECT_EQ(got.unique, expect.size() <= 1);
    }
  }
}

TEST(Lifting, TriangularExamples) {
  const GradedRing t2 = fixture("T2-F2");
  const Ring& r = t2.ring();
  const std::vector<Elem> e12{lit(r, "[[0,1],[0,0]]")};
  const SubsetIdeal upper = ideal_generated(r, e12, IdealKind::kTwoSided);
  ASSERT_EQ(upper.size(), 2u);
  const GradedQuotient q = quotient_graded(t2, upper);
  const Elem a = lit(r, "[[1,1],[0,1]]");
  const IdempotentLift l = lift_idempotent(t2, q, q.quotient.projection[a]);
  EXPECT_EQ(l.fast, r.one());
  EXPECT_TRUE(l.exhaustive_ran);
  EXPECT_TRUE(l.agree);
  EXPECT_EQ(lift_idempotent(t2, q, q.quotient.projection[r.zero()]).fast, r.zero());
  EXPECT_EQ(lift_idempotent(t2, q, q.quotient.projection[r.one()]).fast, r.one());

  // Every idempotent of the quotient lifts to an idempotent in its class.
  const Ring& qr = q.quotient.ring;
  for (Elem c = 0; c < qr.size(); ++c) {
    if (!oracle::idempotent(qr, c)) continue;
    const IdempotentLift lc = lift_idempotent(t2, q, c);
    EXPECT_TRUE(oracle::idempotent(r, lc.fast));
    EXPECT_EQ(q.quotient.projection[lc.fast], c);
    EXPECT_TRUE(lc.agree);
    for (Elem e : lc.exhaustive) EXPECT_EQ(q.quotient.projection[e], c);
  }
}

TEST(Lifting, RejectsNonIdempotent) {
  const GradedRing z4 = fixture("Z4-trivial");
  const std::vector<Elem> four{0};
  const SubsetIdeal zero = ideal_generated(z4.ring(), four, IdealKind::kTwoSided);
  const GradedQuotient q = quotient_graded(z4, zero);
  try {
    lift_idempotent(z4, q, q.quotient.projection[2]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotIdempotentModI);
  }
}

TEST(Abab, BuiltInProperties) {
  const AbabReport nil = check_abab_conditions(homogeneous_nilpotent_property(), fixture("Z4-trivial"));
  EXPECT_TRUE(nil.holds());
  EXPECT_GT(nil.negation.checked, 0u);
  const AbabReport unit = check_abab_conditions(homogeneous_unit_property(), f2_c2());
  EXPECT_TRUE(unit.holds());
}

TEST(Abab, ConstructedViolation) {
  const GradedProperty is_one{"equal-to-one", [](const GradedRing& gr, Elem x) { return x == gr.ring().one(); }};
  // In characteristic 2, -1 = 1, so condition (i) cannot fail there.
  EXPECT_TRUE(check_abab_conditions(is_one, trivial_grading(ring_zmod(2), cyclic_group(1))).negation.holds);
  const AbabReport z4 = check_abab_conditions(is_one, fixture("Z4-trivial"));
  EXPECT_FALSE(z4.negation.holds);
  EXPECT_FALSE(z4.holds());
  EXPECT_FALSE(z4.negation.witness.is_null());
}

}  // namespace
}  // namespace grl
