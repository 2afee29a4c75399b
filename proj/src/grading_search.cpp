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
#include <unordered_set>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/ideal.hpp"
#include "gradedringlab/limits.hpp"

namespace grl {
namespace {

struct Subgroup {
  ElementSet members;
  std::vector<Elem> generators;
};

// All additive subgroups of (R,+), closing the cyclic ones under joins.
std::vector<Subgroup> additive_subgroups(const Ring& r) {
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto push = [&](std::vector<Elem> gens) {
    SubsetIdeal span = additive_span(r, gens);
    if (seen.insert(span.members).second) out.push_back(Subgroup{span.members, additive_generators(r, span.members.members())});
  };
  push({});
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem x = 0; x < r.size(); ++x) {
      if (out[i].members.contains(x)) continue;
      std::vector<Elem> gens = out[i].generators;
      gens.push_back(x);
      push(std::move(gens));
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.members.size() < b.members.size(); });
  return out;
}

class Search {
 public:
  Search(const Ring& r, const FiniteGroup& g, SearchResult& result)
      : r_(r), g_(g), s_(PartialGroupoid::from_group(g)), result_(result),
        subgroups_(additive_subgroups(r)), choice_(g.order()) {
    result_.additive_subgroups = subgroups_.size();
    // Labels in order with e first, so 1 in R_e prunes early.
    order_.push_back(g.identity());
    for (Label l = 0; l < g.order(); ++l)
      if (l != g.identity()) order_.push_back(l);
  }

  void run() { assign(0, {}, 1); }

 private:
  void assign(std::size_t depth, const std::vector<Elem>& span_gens, std::size_t product) {
    if (depth == order_.size()) {
      if (product == r_.size()) classify();
      return;
    }
    const Label label = order_[depth];
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      const Subgroup& a = subgroups_[i];
      const std::size_t next = product * a.members.size();
      if (next > r_.size()) break;
      if (label == g_.identity() && !a.members.contains(r_.one())) continue;
      std::vector<Elem> gens = span_gens;
      gens.insert(gens.end(), a.generators.begin(), a.generators.end());
      // The sum is direct exactly when the span has the product of the orders.
      if (additive_span(r_, gens).size() != next) continue;
      choice_[label] = i;
      assign(depth + 1, gens, next);
    }
  }

  void classify() {
    ++result_.candidate_families;
    std::vector<std::vector<Elem>> components(g_.order());
    for (Label l = 0; l < g_.order(); ++l) components[l] = subgroups_[choice_[l]].members.sorted();
    auto attempt = try_grading(r_, s_, g_, components);
    auto* gr = std::get_if<GradedRing>(&attempt);
    if (!gr) return;
    SearchedGrading sg;
    sg.components = std::move(components);
    sg.identity_nil_clean = is_nil_clean_ring(identity_component_ring(*gr));
    sg.graded_nil_clean = is_graded_nil_clean(*gr).holds;
    sg.graded_strongly_nil_clean = sg.graded_nil_clean && is_graded_strongly_nil_clean(*gr).holds;
    sg.graded_clean = is_graded_clean(*gr).holds;
    sg.counterexample = sg.identity_nil_clean && !sg.graded_nil_clean;
    result_.gradings.push_back(std::move(sg));
  }

  const Ring& r_;
  const FiniteGroup& g_;
  PartialGroupoid s_;
  SearchResult& result_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::size_t> choice_;
  std::vector<Label> order_;
};

}  // namespace

std::size_t SearchResult::counterexamples() const {
  return static_cast<std::size_t>(
      std::count_if(gradings.begin(), gradings.end(), [](const SearchedGrading& g) { return g.counterexample; }));
}

SearchResult grading_search(const Ring& r, const FiniteGroup& g) {
  if (r.size() > limits().max_search)
    throw CapExceeded("grading search needs |R| <= " + std::to_string(limits().max_search) + ", got " +
                      std::to_string(r.size()));
  SearchResult result;
  Search(r, g, result).run();
  return result;
}

}  // namespace grl
