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

#include "gradedringlab/graded_ring.hpp"

#include <algorithm>

#include "gradedringlab/limits.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

GradingViolation violation(ErrorKind kind, std::string message, Json witness) {
  return GradingViolation{kind, std::move(message), std::move(witness)};
}

// Walks all tuples (x_g) with x_g in component g, recording the parts of
// each sum. Stops at the first sum reached twice.
struct DirectSumWalk {
  const Ring& r;
  const std::vector<std::vector<Elem>>& comps;
  std::vector<Elem>& parts;
  std::vector<std::uint8_t>& seen;
  std::vector<Elem> stack;
  std::optional<Elem> collision;

  void run(std::size_t g, Elem acc) {
    if (collision) return;
    if (g == comps.size()) {
      if (seen[acc]) {
        collision = acc;
        return;
      }
      seen[acc] = 1;
      std::copy(stack.begin(), stack.end(), parts.begin() + std::size_t{acc} * comps.size());
      return;
    }
    for (Elem x : comps[g]) {
      stack[g] = x;
      run(g + 1, r.add(acc, x));
      if (collision) return;
    }
  }
};

}  // namespace

std::variant<GradedRing, GradingViolation> try_grading(
    const Ring& r, const PartialGroupoid& labels,
    const std::optional<FiniteGroup>& group,
    const std::vector<std::vector<Elem>>& components) {
  const std::size_t n = r.size();
  const auto num = static_cast<std::size_t>(labels.order());
  if (components.size() != num)
    return violation(ErrorKind::kInvalidArgument,
                     "expected " + std::to_string(num) + " components, got " +
                         std::to_string(components.size()),
                     nullptr);

  auto data = std::make_shared<GradedRing::Data>();
  data->ring = r;
  data->labels = labels;
  data->group = group;

  std::vector<std::vector<Elem>> sorted(num);
  for (std::size_t g = 0; g < num; ++g) {
    ElementSet set(n);
    for (Elem x : components[g]) {
      if (x >= n)
        return violation(ErrorKind::kInvalidArgument,
                         "component " + labels.name(g) + " names element " +
                             std::to_string(x) + " outside the ring",
                         Json{{"label", labels.name(g)}, {"index", x}});
      set.insert(x);
    }
    if (!set.contains(r.zero()))
      return violation(ErrorKind::kNotSubgroup,
                       "component " + labels.name(g) + " does not contain zero",
                       Json{{"label", labels.name(g)}});
    sorted[g] = set.sorted();
    for (Elem x : sorted[g]) {
      if (!set.contains(r.neg(x)))
        return violation(ErrorKind::kNotSubgroup,
                         "component " + labels.name(g) + " is not closed under negation",
                         Json{{"label", labels.name(g)}, {"x", r.literal(x)}});
    }
    const std::vector<Elem> gens = additive_generators(r, sorted[g]);
    for (Elem x : sorted[g])
      for (Elem y : gens)
        if (!set.contains(r.add(x, y))) {
          for (Elem a : sorted[g])
            for (Elem b : sorted[g])
              if (!set.contains(r.add(a, b)))
                return violation(ErrorKind::kNotSubgroup,
                                 "component " + labels.name(g) + " is not closed under addition",
                                 Json{{"label", labels.name(g)}, {"x", r.literal(a)}, {"y", r.literal(b)}});
        }
    data->components.push_back(std::move(set));
    data->generators.push_back(gens);
  }

  // Direct sum: the sum map from the product of components onto R is a
  // bijection exactly when it is injective and the sizes multiply to |R|.
  data->parts.assign(n * num, r.zero());
  std::vector<std::uint8_t> seen(n, 0);
  DirectSumWalk walk{r, sorted, data->parts, seen, std::vector<Elem>(num, r.zero()), std::nullopt};
  walk.run(0, r.zero());
  if (walk.collision)
    return violation(ErrorKind::kNotDirectSum,
                     "element has two decompositions into homogeneous parts",
                     Json{{"element", r.literal(*walk.collision)}, {"index", *walk.collision}});
  for (Elem x = 0; x < n; ++x)
    if (!seen[x])
      return violation(ErrorKind::kNotDirectSum,
                       "element is not a sum of homogeneous parts",
                       Json{{"element", r.literal(x)}, {"index", x}});

  data->degree.assign(n, GradedRing::kZeroCode);
  for (Elem x = 0; x < n; ++x) {
    int code = GradedRing::kZeroCode;
    for (std::size_t g = 0; g < num; ++g) {
      if (data->parts[std::size_t{x} * num + g] == r.zero()) continue;
      code = code == GradedRing::kZeroCode ? static_cast<int>(g) : GradedRing::kMixedCode;
    }
    data->degree[x] = code;
    if (code != GradedRing::kMixedCode) data->homogeneous.push_back(x);
  }

  if (group && !data->components[group->identity()].contains(r.one()))
    return violation(ErrorKind::kIdentityNotInE, "the identity is not in the identity component",
                     Json{{"one", r.literal(r.one())}});

  // Products on generator pairs decide the product condition by bilinearity;
  // a failure is re-located by exhaustive search for a canonical witness.
  auto product_ok = [&](std::size_t s, std::size_t t, Elem a, Elem b) {
    const Elem p = r.mul(a, b);
    if (auto st = labels.op(static_cast<Label>(s), static_cast<Label>(t)))
      return data->components[*st].contains(p);
    return p == r.zero();
  };
  for (std::size_t s = 0; s < num; ++s)
    for (std::size_t t = 0; t < num; ++t) {
      bool ok = true;
      for (Elem a : data->generators[s])
        for (Elem b : data->generators[t]) ok = ok && product_ok(s, t, a, b);
      if (ok) continue;
      for (Elem a : sorted[s])
        for (Elem b : sorted[t]) {
          if (product_ok(s, t, a, b)) continue;
          Json w{{"s", labels.name(s)}, {"t", labels.name(t)},
                 {"x", r.literal(a)}, {"y", r.literal(b)},
                 {"xy", r.literal(r.mul(a, b))}};
          if (labels.defined(s, t))
            return violation(ErrorKind::kProductLeak,
                             "product of components leaves the target component", std::move(w));
          return violation(ErrorKind::kConditionTwo,
                           "nonzero product of components whose labels do not compose",
                           std::move(w));
        }
    }

  for (Elem x : data->homogeneous) {
    if (r.is_idempotent(x)) data->hom_idempotents.push_back(x);
    if (r.is_nilpotent(x)) data->hom_nilpotents.push_back(x);
    if (r.is_unit(x)) data->hom_units.push_back(x);
  }
  return GradedRing(std::move(data));
}

const FiniteGroup& GradedRing::group() const {
  if (!d_->group) throw Error(ErrorKind::kInvalidArgument, "grading is not a group grading");
  return *d_->group;
}

Degree GradedRing::degree(Elem x) const {
  const int code = d_->degree[x];
  if (code == kZeroCode) return {DegreeKind::kZero, -1};
  if (code == kMixedCode) return {DegreeKind::kMixed, -1};
  return {DegreeKind::kHomogeneous, code};
}

std::vector<std::pair<Label, Elem>> GradedRing::nonzero_parts(Elem x) const {
  std::vector<std::pair<Label, Elem>> out;
  const auto p = parts(x);
  for (std::size_t g = 0; g < p.size(); ++g)
    if (p[g] != ring().zero()) out.emplace_back(static_cast<Label>(g), p[g]);
  return out;
}

const std::vector<Elem>& GradedRing::homogeneous_idempotents() const { return d_->hom_idempotents; }
const std::vector<Elem>& GradedRing::homogeneous_nilpotents() const { return d_->hom_nilpotents; }
const std::vector<Elem>& GradedRing::homogeneous_units() const { return d_->hom_units; }

bool GradedRing::is_trivial() const {
  return is_group_graded() && component(identity_label()).size() == ring().size();
}

GradedRing GradedRing::with_name(std::string name) const {
  auto copy = std::make_shared<Data>(*d_);
  copy->name = std::move(name);
  return GradedRing(std::move(copy));
}

std::vector<std::vector<Elem>> GradedRing::component_lists() const {
  std::vector<std::vector<Elem>> out;
  for (const auto& c : d_->components) out.push_back(c.sorted());
  return out;
}

GradedRing verify_grading(const Ring& r, const FiniteGroup& g,
                          const std::vector<std::vector<Elem>>& components) {
  auto result = try_grading(r, PartialGroupoid::from_group(g), g, components);
  if (auto* v = std::get_if<GradingViolation>(&result)) throw GradingError(std::move(*v));
  return std::get<GradedRing>(std::move(result));
}

GradedRing verify_s_grading(const Ring& r, const PartialGroupoid& s,
                            const std::vector<std::vector<Elem>>& components) {
  auto result = try_grading(r, s, std::nullopt, components);
  if (auto* v = std::get_if<GradingViolation>(&result)) throw GradingError(std::move(*v));
  return std::get<GradedRing>(std::move(result));
}

GradedRing trivial_grading(const Ring& r, const FiniteGroup& g) {
  std::vector<std::vector<Elem>> comps(g.order(), std::vector<Elem>{r.zero()});
  comps[g.identity()].resize(r.size());
  for (Elem x = 0; x < r.size(); ++x) comps[g.identity()][x] = x;
  return verify_grading(r, g, comps);
}

GradedRing as_s_grading(const GradedRing& gr) {
  return verify_s_grading(gr.ring(), PartialGroupoid::from_group(gr.group()),
                          gr.component_lists())
      .with_name(gr.name());
}

std::vector<Elem> homogeneous_part(const GradedRing& gr) { return gr.homogeneous(); }

namespace {

std::optional<Elem> first_inhomogeneous_member(const GradedRing& gr, const ElementSet& ideal) {
  for (Elem x : ideal.sorted())
    for (Elem p : gr.parts(x))
      if (!ideal.contains(p)) return x;
  return std::nullopt;
}

}  // namespace

bool is_homogeneous_ideal(const GradedRing& gr, const ElementSet& ideal) {
  return !first_inhomogeneous_member(gr, ideal).has_value();
}

GradedQuotient quotient_graded(const GradedRing& gr, const SubsetIdeal& ideal) {
  const Ring& r = gr.ring();
  if (auto bad = first_inhomogeneous_member(gr, ideal.members))
    throw Error(ErrorKind::kNotHomogeneous, "ideal is not homogeneous",
                Json{{"element", r.literal(*bad)}});
  QuotientRing q = quotient_ring(ideal);
  std::vector<std::vector<Elem>> comps(gr.num_labels());
  for (int g = 0; g < gr.num_labels(); ++g) {
    ElementSet image(q.ring.size());
    for (Elem x : gr.component(g).members()) image.insert(q.projection[x]);
    comps[g] = image.sorted();
  }
  std::optional<FiniteGroup> group;
  if (gr.is_group_graded()) group = gr.group();
  auto result = try_grading(q.ring, gr.labels(), group, comps);
  if (auto* v = std::get_if<GradingViolation>(&result)) throw GradingError(std::move(*v));
  GradedRing qgr = std::get<GradedRing>(std::move(result));
  const std::vector<Elem>& proj = q.projection;
  HomReport report = verify_graded_hom(gr, qgr, [&](Elem x) { return proj[x]; });
  if (!report.ok || !report.surjective)
    throw Error(ErrorKind::kVerification,
                "quotient projection failed verification: " + report.violation, report.witness);
  return GradedQuotient{qgr.with_name(gr.name().empty() ? "" : gr.name() + "/I"), std::move(q)};
}

Coarsening coarsen(const GradedRing& gr, std::span<const Label> normal_subgroup) {
  const FiniteGroup& g = gr.group();
  QuotientGroup q = quotient_group(g, normal_subgroup);
  std::vector<std::vector<Elem>> gens(q.group.order());
  for (Label x = 0; x < g.order(); ++x) {
    const auto& cg = gr.component_generators(x);
    gens[q.coset_of[x]].insert(gens[q.coset_of[x]].end(), cg.begin(), cg.end());
  }
  std::vector<std::vector<Elem>> comps;
  for (const auto& list : gens) comps.push_back(additive_span(gr.ring(), list).members.sorted());
  GradedRing coarse = verify_grading(gr.ring(), q.group, comps);
  return Coarsening{coarse.with_name(gr.name()), std::move(q)};
}

bool is_graded_nil(const GradedRing& gr) {
  return gr.homogeneous_nilpotents().size() == gr.homogeneous().size();
}

std::optional<Elem> graded_nil_witness(const GradedRing& gr, const ElementSet& subset) {
  std::vector<Label> order;
  const std::optional<Label> e =
      gr.is_group_graded() ? std::optional<Label>(gr.identity_label()) : std::nullopt;
  for (Label l = 0; l < gr.num_labels(); ++l)
    if (l != e) order.push_back(l);
  if (e) order.push_back(*e);
  for (Label l : order)
    for (Elem x : gr.component(l).sorted())
      if (subset.contains(x) && !gr.ring().is_nilpotent(x)) return x;
  return std::nullopt;
}

bool is_graded_nil(const GradedRing& gr, const ElementSet& subset) {
  return !graded_nil_witness(gr, subset).has_value();
}

bool is_cancellative(const PartialGroupoid& s) { return s.is_cancellative(); }
std::vector<Label> groupoid_idempotents(const PartialGroupoid& s) { return s.idempotents(); }

bool homogeneous_zero_divisor_free(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const std::vector<Elem>& h = gr.homogeneous();
  if (h.size() * h.size() <= (std::size_t{1} << 24)) {
    for (Elem x : h) {
      if (x == r.zero()) continue;
      for (Elem y : h)
        if (y != r.zero() && r.mul(x, y) == r.zero()) return false;
    }
    return true;
  }
  if (!gr.is_group_graded())
    throw CapExceeded("too many homogeneous elements for the zero-divisor search");
  // For a group grading the right annihilator of a homogeneous x is a graded
  // right ideal, and a nonzero non-unit of a finite ring has nonzero right
  // annihilator; so the condition is that every nonzero homogeneous element is
  // a unit.
  return is_graded_division(gr);
}

bool is_graded_division(const GradedRing& gr) {
  const Ring& r = gr.ring();
  if (r.is_zero_ring()) return false;
  std::size_t nonzero_units = 0;
  for (Elem u : gr.homogeneous_units())
    if (u != r.zero()) ++nonzero_units;
  return nonzero_units + 1 == gr.homogeneous().size();
}

Ring identity_component_ring(const GradedRing& gr) {
  const ElementSet& e = gr.component(gr.identity_label());
  if (e.size() == gr.ring().size()) return gr.ring();
  return subset_ring(gr.ring(), e.sorted(), gr.ring().one(), "R_e");
}

HomReport verify_graded_hom(const GradedRing& src, const GradedRing& dst,
                            const ElementMap& f, const GradedHomOptions& options) {
  HomReport report = verify_ring_hom(src.ring(), dst.ring(), f, options.require_bijective);
  if (!report.ok) return report;
  const Ring& r = src.ring();
  const Ring& s = dst.ring();
  auto fail = [&](Json witness) {
    report.ok = false;
    report.violation = "degree";
    report.witness = std::move(witness);
    return report;
  };
  if (options.homogeneous_mode) {
    std::vector<std::uint8_t> in_image(s.size(), 0), hom_preimage(s.size(), 0);
    for (Elem x = 0; x < r.size(); ++x) {
      const Elem y = f(x);
      in_image[y] = 1;
      if (src.is_homogeneous(x)) {
        hom_preimage[y] = 1;
        if (!dst.is_homogeneous(y))
          return fail({{"element", r.literal(x)}, {"image", s.literal(y)}});
      }
    }
    for (Elem y : dst.homogeneous())
      if (y != s.zero() && in_image[y] && !hom_preimage[y])
        return fail({{"image", s.literal(y)}, {"reason", "no homogeneous preimage"}});
    return report;
  }
  if (options.label_map.empty() && src.num_labels() != dst.num_labels())
    return fail({{"reason", "label sets differ and no label map was given"}});
  for (Elem x : src.homogeneous()) {
    const Degree d = src.degree(x);
    if (d.kind != DegreeKind::kHomogeneous) continue;
    const Label target = options.label_map.empty() ? d.label : options.label_map[d.label];
    const Elem y = f(x);
    if (!dst.component(target).contains(y))
      return fail({{"element", r.literal(x)},
                   {"degree", src.labels().name(d.label)},
                   {"image", s.literal(y)},
                   {"target", dst.labels().name(target)}});
  }
  return report;
}

}  // namespace grl
