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

#include "gradedringlab/radicals.hpp"

#include <deque>
#include <unordered_map>

#include "gradedringlab/limits.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {

HomogeneousRightIdealLattice homogeneous_right_ideals(const GradedRing& gr) {
  if (!gr.is_group_graded())
    throw Error(ErrorKind::kInvalidArgument, "radical computations are limited to group gradings");
  const Ring& r = gr.ring();
  require_under_cap(gr.homogeneous().size(), limits().max_homogeneous, "homogeneous part");

  HomogeneousRightIdealLattice lattice;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto intern = [&](SubsetIdeal ideal) -> std::pair<std::size_t, bool> {
    auto [it, fresh] = index.emplace(ideal.members, lattice.members.size());
    if (fresh) {
      if (lattice.members.size() >= limits().max_ideals)
        throw CapExceeded("homogeneous right ideal lattice exceeds max_ideals");
      lattice.members.push_back(std::move(ideal));
    }
    return {it->second, fresh};
  };

  std::vector<std::size_t> principals;
  intern(ideal_generated(r, std::vector<Elem>{}, IdealKind::kRightIdeal));
  for (Elem h : gr.homogeneous()) {
    if (h == r.zero()) continue;
    std::vector<Elem> multiples(r.size());
    for (Elem x = 0; x < r.size(); ++x) multiples[x] = r.mul(h, x);
    SubsetIdeal p = additive_span(r, multiples);
    p.kind = IdealKind::kRightIdeal;
    auto [id, fresh] = intern(std::move(p));
    if (fresh) principals.push_back(id);
  }
  lattice.principal_count = principals.size();

  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < lattice.members.size(); ++i) queue.push_back(i);
  std::vector<std::uint8_t> is_max;
  while (!queue.empty()) {
    const std::size_t m = queue.front();
    queue.pop_front();
    bool maximal = !lattice.members[m].is_whole();
    for (std::size_t p : principals) {
      if (lattice.members[p].members.is_subset_of(lattice.members[m].members)) continue;
      SubsetIdeal sum = ideal_sum(lattice.members[m], lattice.members[p]);
      if (!sum.is_whole()) maximal = false;
      auto [id, fresh] = intern(std::move(sum));
      if (fresh) queue.push_back(id);
    }
    if (is_max.size() < lattice.members.size()) is_max.resize(lattice.members.size(), 0);
    is_max[m] = maximal;
  }
  for (std::size_t i = 0; i < lattice.members.size(); ++i)
    if (is_max[i]) lattice.maximal.push_back(i);
  return lattice;
}

GradedRadical graded_jacobson_radical(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const HomogeneousRightIdealLattice lattice = homogeneous_right_ideals(gr);
  GradedRadical out;
  out.maximal_count = lattice.maximal.size();
  if (lattice.maximal.empty()) {
    out.ideal = additive_span(r, std::vector<Elem>{});
  } else {
    out.ideal = lattice.members[lattice.maximal.front()];
    for (std::size_t k = 1; k < lattice.maximal.size(); ++k)
      out.ideal = ideal_intersection(out.ideal, lattice.members[lattice.maximal[k]]);
  }
  out.two_sided = is_ideal_of_kind(r, out.ideal.members, IdealKind::kTwoSided);
  out.ideal.kind = out.two_sided ? IdealKind::kTwoSided : IdealKind::kRightIdeal;
  out.homogeneous = is_homogeneous_ideal(gr, out.ideal.members);

  const ElementSet& e = gr.component(gr.identity_label());
  const Ring re = identity_component_ring(gr);
  const SubsetIdeal j = jacobson_radical(re);
  ElementSet j_parent(r.size());
  if (auto info = subset_info(re)) {
    for (Elem x : j.members.members()) j_parent.insert(info->members[x]);
  } else {
    j_parent = j.members;
  }
  out.e_component_matches = out.ideal.members.intersect(e) == j_parent;
  return out;
}

bool is_graded_local(const GradedRing& gr) {
  return homogeneous_right_ideals(gr).maximal.size() == 1;
}

}  // namespace grl
