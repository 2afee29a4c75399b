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

#include "gradedringlab/harness.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/rings.hpp"
#include "oracles.hpp"

namespace grl {
namespace {

std::vector<Subject> catalog_subjects() {
  std::vector<Subject> out;
  for (const Fixture& f : catalog()) out.push_back(subject_from_fixture(f));
  return out;
}

TEST(Catalog, ShapeAndExpectedFlags) {
  EXPECT_GE(catalog().size(), 15u);
  std::set<std::string> names;
  std::size_t counterexamples = 0;
  for (const Fixture& f : catalog()) {
    EXPECT_TRUE(names.insert(f.name).second) << f.name;
    EXPECT_EQ(find_fixture(f.name), &f);
    const GradedRing gr = f.build();
    for (const auto& e : f.expected) EXPECT_EQ(compute_flag(gr, e.flag), e.value) << f.name << " " << e.flag;
    counterexamples += f.implication_counterexample;
  }
  EXPECT_GE(counterexamples, 1u);
  EXPECT_EQ(find_fixture("no-such-fixture"), nullptr);
  EXPECT_THROW(compute_flag(catalog()[0].build(), "no-such-flag"), Error);
}

TEST(Checks, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : check_registry()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_GE(ids.size(), 30u);
}

TEST(Checks, CatalogRunIsCleanAndDeterministic) {
  const auto subjects = catalog_subjects();
  const auto a = run_checks(subjects, {}, 1);
  const auto b = run_checks(subjects, {"all"}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].fixture, b[i].fixture);
    EXPECT_EQ(a[i].check, b[i].check);
    EXPECT_EQ(a[i].status, b[i].status) << a[i].fixture << " " << a[i].check;
    EXPECT_EQ(a[i].detail, b[i].detail);
    EXPECT_EQ(a[i].witness, b[i].witness);
  }
  std::size_t holds = 0;
  for (const auto& r : a) {
    EXPECT_NE(r.status, CheckStatus::kFailed) << r.fixture << " " << r.check << ": " << r.detail;
    if (r.status == CheckStatus::kFailedExpected) EXPECT_EQ(r.check, "implication-1") << r.fixture;
    holds += r.status == CheckStatus::kHolds;
  }
  EXPECT_GT(holds, a.size() / 3);
}

// Every refutation of "R_e nil clean implies graded nil clean" is re-derived
// from scratch.
TEST(Checks, FailedExpectedWitnessesAgreeWithOracle) {
  const auto subjects = catalog_subjects();
  std::size_t seen = 0;
  for (const auto& r : run_checks(subjects, {"implication-1"}, 2)) {
    if (r.status != CheckStatus::kFailedExpected) continue;
    ++seen;
    const GradedRing gr = find_fixture(r.fixture)->build();
    const Ring& ring = gr.ring();
    const Elem x = ring.from_literal(r.witness.at("x"));
    EXPECT_TRUE(oracle::nil_clean_ring(identity_component_ring(gr))) << r.fixture;
    EXPECT_TRUE(gr.is_homogeneous(x));
    EXPECT_FALSE(oracle::graded_decomposable(gr, x, oracle::Kind::kNilClean)) << r.fixture;
  }
  EXPECT_GE(seen, 1u);
}

TEST(Checks, UnknownIdAndCorruptedFlag) {
  EXPECT_THROW(run_checks(catalog_subjects(), {"no-such-check"}), Error);
  Subject s = subject_from_fixture(*find_fixture("M2-F2-checkerboard"));
  ASSERT_FALSE(s.expected.empty());
  s.expected[0].value = !s.expected[0].value;
  const auto res = run_checks({s}, {"fixture-flags"}, 1);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].status, CheckStatus::kFailed);
}

TEST(Checks, CapExceededIsReportedAsSkipped) {
  Limits l = limits();
  l.max_homogeneous = 4;
  ScopedLimits scope(l);
  const auto res = run_checks({subject_from_fixture(*find_fixture("M2-F2-Zgraded"))}, {"jg-graded-nil"}, 1);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].status, CheckStatus::kVacuous);
  EXPECT_EQ(res[0].detail.rfind("skipped", 0), 0u) << res[0].detail;
}

// All pairs (A, B) of additive subgroups with R = A + B, A cap B = 0, 1 in A,
// AA, BB in A and AB, BA in B.
std::set<std::vector<std::vector<Elem>>> c2_gradings_oracle(const Ring& r) {
  std::set<std::vector<std::vector<Elem>>> out;
  const auto subs = oracle::additive_subgroups_by_subsets(r);
  auto inside = [&](oracle::Mask x, oracle::Mask y, oracle::Mask target) {
    for (Elem a : oracle::members(x))
      for (Elem b : oracle::members(y))
        if (!(target & oracle::bit(r.mul(a, b)))) return false;
    return true;
  };
  for (oracle::Mask a : subs) {
    if (!(a & oracle::bit(r.one()))) continue;
    for (oracle::Mask b : subs) {
      if ((a & b) != oracle::bit(r.zero())) continue;
      if (static_cast<std::size_t>(std::popcount(a)) * std::popcount(b) != r.size()) continue;
      if (inside(a, a, a) && inside(b, b, a) && inside(a, b, b) && inside(b, a, b))
        out.insert({oracle::members(a), oracle::members(b)});
    }
  }
  return out;
}

TEST(GradingSearch, MatchesSubsetOracle) {
  for (const Ring& r : {matrix_ring(ring_zmod(2), 2), ring_zmod(4), ring_zmod(2), ring_boolean(2),
                        triangular_ring(ring_zmod(2), 2)}) {
    const SearchResult res = grading_search(r, cyclic_group(2));
    std::set<std::vector<std::vector<Elem>>> got;
    for (const auto& g : res.gradings) {
      std::vector<std::vector<Elem>> comps;
      for (auto c : g.components) {
        std::sort(c.begin(), c.end());
        comps.push_back(c);
      }
      got.insert(comps);
      const GradedRing gr = verify_grading(r, cyclic_group(2), g.components);
      EXPECT_EQ(g.graded_nil_clean, oracle::graded_property(gr, oracle::Kind::kNilClean));
      EXPECT_EQ(g.graded_clean, oracle::graded_property(gr, oracle::Kind::kClean));
      const bool re_nil = oracle::nil_clean_ring(identity_component_ring(gr));
      EXPECT_EQ(g.identity_nil_clean, re_nil);
      EXPECT_EQ(g.counterexample, re_nil && !g.graded_nil_clean);
    }
    EXPECT_EQ(got.size(), res.gradings.size()) << r.describe();
    EXPECT_EQ(got, c2_gradings_oracle(r)) << r.describe();
  }
  const SearchResult m2 = grading_search(matrix_ring(ring_zmod(2), 2), cyclic_group(2));
  EXPECT_EQ(m2.gradings.size(), 5u);
  EXPECT_EQ(m2.counterexamples(), 3u);
  EXPECT_EQ(grading_search(ring_zmod(4), cyclic_group(2)).counterexamples(), 0u);
}

TEST(GradingSearch, Cap) {
  EXPECT_THROW(grading_search(ring_zmod(32), cyclic_group(2)), CapExceeded);
}

}  // namespace
}  // namespace grl
