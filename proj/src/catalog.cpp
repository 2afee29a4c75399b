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

#include <algorithm>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/constructions.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/radicals.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

Label label(const FiniteGroup& g, const std::string& name) {
  auto l = g.find(name);
  if (!l) throw Error(ErrorKind::kInvalidArgument, "no group element named " + name);
  return *l;
}

GradedRing trivially(const Ring& r, int order = 1) { return trivial_grading(r, cyclic_group(order)); }

GradedRing z_graded_matrix(const Ring& base) {
  const FiniteGroup z = integer_window(2);
  return graded_matrix_ring(trivial_grading(base, z), 2, {label(z, "0"), label(z, "1")});
}

GradedRing checkerboard(const Ring& base) {
  const FiniteGroup c2 = cyclic_group(2);
  return graded_matrix_ring(trivial_grading(base, c2), 2, {c2.identity(), label(c2, "g")});
}

// Matrix units E_ij over base, graded by the Brandt groupoid on n objects.
GradedRing brandt_graded(const Ring& base, unsigned n, bool triangular) {
  const Ring m = triangular ? triangular_ring(base, n) : matrix_ring(base, n);
  const PartialGroupoid s = brandt_groupoid(static_cast<int>(n));
  std::vector<std::vector<Elem>> comps(n * n);
  std::vector<Elem> entries(n * n, base.zero());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      comps[i * n + j].push_back(m.zero());
      if (triangular && j < i) continue;
      for (Elem x = 0; x < base.size(); ++x) {
        if (x == base.zero()) continue;
        entries[i * n + j] = x;
        comps[i * n + j].push_back(matrix_from_entries(m, entries));
      }
      entries[i * n + j] = base.zero();
    }
  return verify_s_grading(m, s, comps);
}

std::vector<Fixture> build_catalog() {
  const Ring f2 = ring_zmod(2);
  const Ring z3 = ring_zmod(3);
  const Ring z4 = ring_zmod(4);
  std::vector<Fixture> c;
  auto add = [&](std::string name, std::string description, std::function<GradedRing()> build,
                 std::vector<ExpectedFlag> expected, bool counterexample = false) {
    c.push_back(Fixture{std::move(name), std::move(description), std::move(build),
                        std::move(expected), counterexample});
  };

  add("M2-F2-Zgraded", "M2(F2) with E12 in degree 1 and E21 in degree -1",
      [=] { return z_graded_matrix(f2); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", false},
       {"graded-2-nil-clean", true}, {"identity-nil-clean", true}, {"graded-local", false}});
  add("M2-Z4-Zgraded", "M2(Z/4) with E12 in degree 1 and E21 in degree -1",
      [=] { return z_graded_matrix(z4); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", false},
       {"identity-nil-clean", true}});
  add("M2-F2-checkerboard", "M2(F2) over C2 with diagonal and antidiagonal components",
      [=] { return checkerboard(f2); },
      {{"graded-nil-clean", false}, {"graded-strongly-nil-clean", false}, {"graded-clean", false},
       {"identity-nil-clean", true}, {"graded-local", false}},
      true);
  add("M2-Z4-checkerboard", "M2(Z/4) over C2 with diagonal and antidiagonal components",
      [=] { return checkerboard(z4); },
      {{"graded-nil-clean", false}, {"identity-nil-clean", true}}, true);
  add("M2-F2-trivial", "M2(F2) concentrated in degree e",
      [=] { return trivially(matrix_ring(f2, 2)); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", false}, {"graded-clean", true},
       {"nil-clean", true}});
  add("T2-F2-C2-offdiagonal", "T2(F2) over C2 with E12 in degree g",
      [=] {
        const FiniteGroup c2 = cyclic_group(2);
        return graded_triangular_ring(trivial_grading(f2, c2), 2, {c2.identity(), label(c2, "g")}).graded;
      },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", false},
       {"graded-2-nil-clean", true}});
  add("Z4-trivial", "Z/4 over the trivial group",
      [=] { return trivially(z4); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", true},
       {"graded-local", true}, {"two-nilpotent", true}});
  add("Z4-trivial-C2", "Z/4 concentrated in degree e of C2",
      [=] { return trivially(z4, 2); },
      {{"graded-nil-clean", true}, {"graded-local", true}});
  add("T2-F2", "T2(F2) over the trivial group",
      [=] { return trivially(triangular_ring(f2, 2)); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", true}});
  add("T3-F2", "T3(F2) over the trivial group",
      [=] { return trivially(triangular_ring(f2, 3)); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}});
  add("T2-Z4", "T2(Z/4) over the trivial group",
      [=] { return trivially(triangular_ring(z4, 2)); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}});
  add("zero-ring-C2", "the zero ring over C2",
      [] { return trivially(zero_ring(), 2); },
      {{"graded-nil", true}, {"graded-nil-clean", true}, {"graded-strongly-nil-clean", true},
       {"graded-clean", true}, {"graded-division", false}, {"graded-local", false}});
  add("Z3-trivial", "Z/3 over the trivial group",
      [=] { return trivially(z3); },
      {{"graded-nil-clean", false}, {"graded-clean", true}, {"graded-division", true},
       {"two-nilpotent", false}});
  add("T2-Z3", "T2(Z/3) over the trivial group",
      [=] { return trivially(triangular_ring(z3, 2)); },
      {{"graded-nil-clean", false}, {"graded-clean", true}, {"two-nilpotent", false}});
  add("F2-C2-groupring-natural", "F2[C2] with components F2 e and F2 g",
      [=] { return graded_group_ring(trivially(f2, 2)); },
      {{"graded-nil-clean", false}, {"graded-clean", true}, {"graded-division", true},
       {"graded-local", true}, {"identity-nil-clean", true}, {"nil-clean", true}},
      true);
  add("F2-C2-groupring-coarsened", "F2[C2] coarsened to the trivial group",
      [=] {
        const GradedRing rg = graded_group_ring(trivially(f2, 2));
        const std::vector<Label> all{0, 1};
        return coarsen(rg, all).graded;
      },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", true}});
  add("Z4-C2-groupring-natural", "Z/4[C2] with components Z/4 e and Z/4 g",
      [=] { return graded_group_ring(trivially(z4, 2)); },
      {{"graded-nil-clean", false}, {"graded-clean", false}, {"identity-nil-clean", true}}, true);
  add("F2-H-in-C4", "F2[H] for H = {e, g2} in C4, graded by C4",
      [=] {
        const FiniteGroup c4 = cyclic_group(4);
        const std::vector<Label> h{c4.identity(), label(c4, "g2")};
        return graded_subgroup_ring(trivial_grading(f2, c4), h);
      },
      {{"graded-nil-clean", false}, {"graded-clean", true}, {"graded-division", true},
       {"identity-nil-clean", true}},
      true);
  add("F2xF2-trivial", "F2 x F2 over the trivial group",
      [=] { return graded_direct_product(trivially(f2), trivially(f2)); },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", true}});
  add("truncpoly-F2-C3", "F2[x]/(x^3) over C3 with x in degree g",
      [=] {
        const Ring t = truncated_polynomial_ring(f2, 3);
        const auto lit = [&](int c0, int c1, int c2) { return t.from_literal(Json::array({c0, c1, c2})); };
        return verify_grading(t, cyclic_group(3),
                              {{t.zero(), lit(1, 0, 0)}, {t.zero(), lit(0, 1, 0)}, {t.zero(), lit(0, 0, 1)}});
      },
      {{"graded-nil-clean", true}, {"graded-strongly-nil-clean", true}, {"graded-clean", false},
       {"graded-local", true}});
  add("brandt-M2-F2", "M2(F2) graded by matrix units over the Brandt groupoid B2",
      [=] { return brandt_graded(f2, 2, false); },
      {{"graded-nil-clean", true}, {"s-cancellative", true}});
  add("brandt-T2-F2", "T2(F2) graded by matrix units over B2",
      [=] { return brandt_graded(f2, 2, true); },
      {{"graded-nil-clean", true}, {"s-cancellative", true}});
  add("brandt-M2-Z4", "M2(Z/4) graded by matrix units over B2",
      [=] { return brandt_graded(z4, 2, false); },
      {{"graded-nil-clean", true}});
  add("brandt-M2-Z3", "M2(Z/3) graded by matrix units over B2",
      [=] { return brandt_graded(z3, 2, false); },
      {{"graded-nil-clean", false}});
  return c;
}

}  // namespace

const std::vector<Fixture>& catalog() {
  static const std::vector<Fixture> c = build_catalog();
  return c;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : catalog())
    if (f.name == name) return &f;
  return nullptr;
}

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names{
      "graded-nil-clean", "graded-strongly-nil-clean", "graded-clean", "graded-2-nil-clean",
      "identity-nil-clean", "nil-clean", "graded-nil", "graded-division", "graded-local",
      "two-nilpotent", "s-cancellative"};
  return names;
}

bool compute_flag(const GradedRing& gr, const std::string& flag) {
  const Ring& r = gr.ring();
  if (flag == "graded-nil-clean") return is_graded_nil_clean(gr).holds;
  if (flag == "graded-strongly-nil-clean") return is_graded_strongly_nil_clean(gr).holds;
  if (flag == "graded-clean") return is_graded_clean(gr).holds;
  if (flag == "graded-2-nil-clean") return is_graded_2_nil_clean(gr).holds;
  if (flag == "identity-nil-clean") return is_nil_clean_ring(identity_component_ring(gr));
  if (flag == "nil-clean") return is_nil_clean_ring(r);
  if (flag == "graded-nil") return is_graded_nil(gr);
  if (flag == "graded-division") return is_graded_division(gr);
  if (flag == "graded-local") return is_graded_local(gr);
  if (flag == "two-nilpotent") return r.is_nilpotent(r.from_int(2));
  if (flag == "s-cancellative") return is_cancellative(gr.labels());
  throw Error(ErrorKind::kInvalidArgument, "unknown flag " + flag);
}

Subject subject_from_fixture(const Fixture& f) {
  return Subject{f.name, f.build().with_name(f.name), f.expected, f.implication_counterexample};
}

}  // namespace grl
