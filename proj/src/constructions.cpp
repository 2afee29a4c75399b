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

#include "gradedringlab/constructions.hpp"

#include <algorithm>
#include <bit>

#include "gradedringlab/limits.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

constexpr std::size_t kMaxSupport = 32;
using Coeffs = std::array<Elem, kMaxSupport>;

std::string sigma_name(const FiniteGroup& g, const Sigma& sigma) {
  std::string out = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) out += (i ? "," : "") + g.name(sigma[i]);
  return out + ")";
}

GradedRing graded_from_generators(const Ring& r, const FiniteGroup& g,
                                  const std::vector<std::vector<Elem>>& gens) {
  std::vector<std::vector<Elem>> comps;
  for (const auto& list : gens) comps.push_back(additive_span(r, list).members.sorted());
  return verify_grading(r, g, comps);
}

void check_sigma(const FiniteGroup& g, unsigned n, const Sigma& sigma) {
  if (n == 0 || sigma.size() != n)
    throw Error(ErrorKind::kInvalidArgument, "sigma must have exactly n entries");
  for (Label s : sigma)
    if (s < 0 || s >= g.order())
      throw Error(ErrorKind::kInvalidArgument, "sigma entry is not a group element");
}

// Generators of the lambda component of M_n(R)(sigma) or T_n(R)(sigma).
std::vector<std::vector<Elem>> matrix_component_generators(const GradedRing& gr,
                                                           const Ring& m, unsigned n,
                                                           const Sigma& sigma,
                                                           bool triangular) {
  const FiniteGroup& g = gr.group();
  const Ring& r = gr.ring();
  std::vector<std::vector<Elem>> gens(g.order());
  std::vector<Elem> entries(n * n, r.zero());
  for (Label lambda = 0; lambda < g.order(); ++lambda)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = triangular ? i : 0; j < n; ++j) {
        const Label src = g.op(g.op(sigma[i], lambda), g.inverse(sigma[j]));
        for (Elem x : gr.component_generators(src)) {
          entries[i * n + j] = x;
          gens[lambda].push_back(matrix_from_entries(m, entries));
          entries[i * n + j] = r.zero();
        }
      }
  return gens;
}

class GroupRingImpl final : public RingImpl {
 public:
  GroupRingImpl(GradedRing base, std::vector<Label> support, std::size_t size)
      : base_(std::move(base)), group_(base_.group()), support_(std::move(support)),
        size_(size), radix_(base_.ring().size()) {
    position_.assign(group_.order(), -1);
    for (std::size_t k = 0; k < support_.size(); ++k) position_[support_[k]] = static_cast<int>(k);
    const Ring& r = base_.ring();
    parts_.resize(r.size());
    for (Elem x = 0; x < r.size(); ++x) parts_[x] = base_.nonzero_parts(x);
  }

  std::size_t size() const override { return size_; }
  Elem zero() const override { return 0; }
  Elem one() const override {
    Coeffs c;
    c.fill(base_.ring().zero());
    c[position_[group_.identity()]] = base_.ring().one();
    return encode(c);
  }
  Elem add(Elem a, Elem b) const override {
    Coeffs x = decode(a), y = decode(b);
    for (std::size_t k = 0; k < support_.size(); ++k) x[k] = base_.ring().add(x[k], y[k]);
    return encode(x);
  }
  Elem neg(Elem a) const override {
    Coeffs x = decode(a);
    for (std::size_t k = 0; k < support_.size(); ++k) x[k] = base_.ring().neg(x[k]);
    return encode(x);
  }
  // Bilinear extension of (r_g g')(r_h h') = r_g r_h (h^{-1} g' h h').
  Elem mul(Elem a, Elem b) const override {
    const Ring& r = base_.ring();
    const Coeffs x = decode(a), y = decode(b);
    Coeffs z;
    z.fill(r.zero());
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (x[i] == r.zero()) continue;
      for (std::size_t j = 0; j < support_.size(); ++j) {
        if (y[j] == r.zero()) continue;
        for (const auto& [g, rg] : parts_[x[i]]) {
          (void)g;
          for (const auto& [h, rh] : parts_[y[j]]) {
            const Elem p = r.mul(rg, rh);
            if (p == r.zero()) continue;
            const Label t = group_.op(group_.op(group_.inverse(h), support_[i]),
                                      group_.op(h, support_[j]));
            const int k = position_[t];
            z[k] = r.add(z[k], p);
          }
        }
      }
    }
    return encode(z);
  }
  std::string backend() const override { return "group-ring-over"; }
  std::string describe() const override {
    std::string h;
    for (std::size_t k = 0; k < support_.size(); ++k) h += (k ? "," : "") + group_.name(support_[k]);
    return base_.ring().describe() + "[" + h + "]";
  }
  Json literal(Elem a) const override {
    const Coeffs x = decode(a);
    Json out = Json::array();
    for (std::size_t k = 0; k < support_.size(); ++k) out.push_back(base_.ring().literal(x[k]));
    return out;
  }
  Elem from_literal(const Json& lit) const override {
    if (!lit.is_array()) return RingImpl::from_literal(lit);
    if (lit.size() != support_.size())
      throw Error(ErrorKind::kInvalidArgument, "group ring literal needs one coefficient per group element");
    Coeffs x;
    for (std::size_t k = 0; k < support_.size(); ++k) x[k] = base_.ring().from_literal(lit[k]);
    return encode(x);
  }

  const GradedRing& base() const { return base_; }
  const std::vector<Label>& support() const { return support_; }
  int position(Label g) const { return position_[g]; }

  Coeffs decode(Elem a) const {
    Coeffs c;
    for (std::size_t k = support_.size(); k-- > 0;) {
      c[k] = static_cast<Elem>(a % radix_);
      a /= static_cast<Elem>(radix_);
    }
    return c;
  }
  Elem encode(const Coeffs& c) const {
    std::size_t a = 0;
    for (std::size_t k = 0; k < support_.size(); ++k) a = a * radix_ + c[k];
    return static_cast<Elem>(a);
  }

 private:
  GradedRing base_;
  FiniteGroup group_;
  std::vector<Label> support_;
  std::size_t size_;
  std::size_t radix_;
  std::vector<int> position_;
  std::vector<std::vector<std::pair<Label, Elem>>> parts_;
};

const GroupRingImpl& group_ring_impl(const Ring& r) {
  auto* impl = dynamic_cast<const GroupRingImpl*>(&underlying_impl(r));
  if (!impl) throw Error(ErrorKind::kInvalidArgument, "not a group ring");
  return *impl;
}

void verify_axioms_or_throw(const Ring& r) {
  if (auto v = check_ring_axioms(r)) {
    Json w = Json::array();
    for (Elem x : v->elements) w.push_back(r.literal(x));
    const ErrorKind kind = v->law.find("associativ") != std::string::npos
                               ? ErrorKind::kAssociativityFailure
                               : ErrorKind::kRingAxiom;
    throw Error(kind, "constructed ring violates " + v->law, Json{{"law", v->law}, {"elements", w}});
  }
}

std::vector<Elem> parent_to_local(const std::vector<Elem>& members, std::size_t parent_size) {
  std::vector<Elem> local(parent_size, kNoElem);
  for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
  return local;
}

}  // namespace

GradedRing graded_matrix_ring(const GradedRing& gr, unsigned n, const Sigma& sigma) {
  const FiniteGroup& g = gr.group();
  check_sigma(g, n, sigma);
  const Ring m = matrix_ring(gr.ring(), n);
  GradedRing out = graded_from_generators(m, g, matrix_component_generators(gr, m, n, sigma, false));
  return out.with_name("M" + std::to_string(n) + "(" + gr.ring().describe() + ")" + sigma_name(g, sigma));
}

GradedRing conjugate_grading(const GradedRing& gr, Label x) {
  const FiniteGroup& g = gr.group();
  std::vector<std::vector<Elem>> comps(g.order());
  for (Label lambda = 0; lambda < g.order(); ++lambda)
    comps[lambda] = gr.component(g.op(g.op(x, lambda), g.inverse(x))).sorted();
  return verify_grading(gr.ring(), g, comps);
}

GradedTriangular graded_triangular_ring(const GradedRing& gr, unsigned n, const Sigma& sigma) {
  const FiniteGroup& g = gr.group();
  check_sigma(g, n, sigma);
  const Ring& r = gr.ring();
  const Ring t = triangular_ring(r, n);
  GradedRing graded =
      graded_from_generators(t, g, matrix_component_generators(gr, t, n, sigma, true))
          .with_name("T" + std::to_string(n) + "(" + r.describe() + ")" + sigma_name(g, sigma));

  std::vector<Elem> gens;
  std::vector<Elem> entries(n * n, r.zero());
  for (Label lambda = 0; lambda < g.order(); ++lambda)
    for (Elem x : gr.component_generators(lambda))
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
          entries[i * n + j] = x;
          gens.push_back(matrix_from_entries(t, entries));
          entries[i * n + j] = r.zero();
        }
  SubsetIdeal upper = ideal_generated(t, gens, IdealKind::kTwoSided);
  for (Elem x : upper.members.members()) {
    const std::vector<Elem> e = matrix_entries(t, x);
    for (unsigned i = 0; i < n; ++i)
      if (e[i * n + i] != r.zero())
        throw Error(ErrorKind::kVerification, "strictly-upper ideal reached the diagonal");
  }
  const std::optional<unsigned> index = ideal_power_nilpotent(upper);
  if (!index || *index > n)
    throw Error(ErrorKind::kVerification, "strictly-upper ideal is not nilpotent of index <= n");

  GradedQuotient quotient = quotient_graded(graded, upper);
  std::vector<GradedRing> diagonal;
  for (unsigned i = 0; i < n; ++i) diagonal.push_back(conjugate_grading(gr, sigma[i]));
  GradedRing product = graded_direct_product(diagonal);
  const QuotientRing& q = quotient.quotient;
  const Ring& prod_ring = product.ring();
  auto diag_map = [&](Elem c) {
    const std::vector<Elem> e = matrix_entries(t, q.representative[c]);
    std::vector<Elem> coords(n);
    for (unsigned i = 0; i < n; ++i) coords[i] = e[i * n + i];
    return n == 1 ? coords[0] : product_from_coordinates(prod_ring, coords);
  };
  GradedHomOptions bijective;
  bijective.require_bijective = true;
  HomReport report = verify_graded_hom(quotient.graded, product, diag_map, bijective);
  if (!report.ok)
    throw Error(ErrorKind::kVerification,
                "quotient by the strictly-upper ideal is not the diagonal product: " + report.violation,
                report.witness);
  return GradedTriangular{std::move(graded), std::move(upper), *index, std::move(product),
                          std::move(quotient)};
}

GradedRing graded_subgroup_ring(const GradedRing& gr, std::span<const Label> subgroup) {
  const FiniteGroup& g = gr.group();
  if (!g.is_subgroup(subgroup))
    throw Error(ErrorKind::kInvalidArgument, "support is not a subgroup");
  if (!g.is_normal_subgroup(subgroup))
    throw Error(ErrorKind::kNotNormal, "support is not a normal subgroup");
  std::vector<Label> support(subgroup.begin(), subgroup.end());
  std::sort(support.begin(), support.end());
  if (support.size() > kMaxSupport) throw CapExceeded("group ring support too large");
  const std::size_t size =
      checked_power(gr.ring().size(), support.size(), limits().max_elements, "group ring");
  auto impl = std::make_shared<GroupRingImpl>(gr, support, size);
  const Ring rh = make_ring(impl);
  verify_axioms_or_throw(rh);

  const Ring& r = gr.ring();
  std::vector<std::vector<Elem>> gens(g.order());
  for (Label x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < support.size(); ++k) {
      const Label src = g.op(x, g.inverse(support[k]));
      for (Elem c : gr.component_generators(src)) {
        Coeffs coeffs;
        coeffs.fill(r.zero());
        coeffs[k] = c;
        gens[x].push_back(impl->encode(coeffs));
      }
    }
  GradedRing out = graded_from_generators(rh, g, gens).with_name(rh.describe());
  coarsen(out, support);
  return out;
}

GradedRing graded_group_ring(const GradedRing& gr) {
  std::vector<Label> all(gr.group().order());
  for (Label x = 0; x < gr.group().order(); ++x) all[x] = x;
  return graded_subgroup_ring(gr, all);
}

std::optional<GroupRingInfo> group_ring_info(const Ring& r) {
  if (auto* impl = dynamic_cast<const GroupRingImpl*>(&underlying_impl(r)))
    return GroupRingInfo{impl->base(), impl->support()};
  return std::nullopt;
}

std::vector<Elem> group_ring_coefficients(const Ring& r, Elem x) {
  const GroupRingImpl& impl = group_ring_impl(r);
  const Coeffs c = impl.decode(x);
  return {c.begin(), c.begin() + impl.support().size()};
}

Elem group_ring_element(const Ring& r, std::span<const Elem> coefficients) {
  const GroupRingImpl& impl = group_ring_impl(r);
  if (coefficients.size() != impl.support().size())
    throw Error(ErrorKind::kInvalidArgument, "wrong number of group ring coefficients");
  Coeffs c;
  std::copy(coefficients.begin(), coefficients.end(), c.begin());
  return impl.encode(c);
}

HomReport group_ring_e_isomorphism(const GradedRing& base, const GradedRing& group_ring) {
  const GroupRingImpl& impl = group_ring_impl(group_ring.ring());
  const FiniteGroup& g = base.group();
  if (impl.support().size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::kInvalidArgument, "the e-component map needs the full group ring");
  const Ring re = identity_component_ring(group_ring);
  std::vector<Elem> local;
  if (auto info = subset_info(re)) local = parent_to_local(info->members, group_ring.ring().size());
  const Ring& r = base.ring();
  auto f = [&](Elem x) {
    Coeffs c;
    c.fill(r.zero());
    for (const auto& [label, part] : base.nonzero_parts(x)) {
      const int k = impl.position(g.inverse(label));
      c[k] = r.add(c[k], part);
    }
    const Elem parent = impl.encode(c);
    return local.empty() ? parent : local[parent];
  };
  return verify_ring_hom(r, re, f, true);
}

GradedRing corner_ring(const GradedRing& gr, Elem f) {
  const Ring& r = gr.ring();
  if (!r.is_idempotent(f))
    throw Error(ErrorKind::kNotIdempotent, "corner needs an idempotent", Json{{"f", r.literal(f)}});
  if (!gr.in_identity_component(f))
    throw Error(ErrorKind::kNotDegreeE, "corner idempotent must lie in R_e", Json{{"f", r.literal(f)}});
  ElementSet carrier(r.size());
  for (Elem x = 0; x < r.size(); ++x) carrier.insert(r.mul(r.mul(f, x), f));
  const std::vector<Elem> members = carrier.sorted();
  const Ring corner = subset_ring(r, members, f, "fRf");
  const std::vector<Elem> local = parent_to_local(members, r.size());
  std::vector<std::vector<Elem>> comps(gr.num_labels());
  for (Label g = 0; g < gr.num_labels(); ++g) {
    ElementSet c(corner.size());
    for (Elem x : gr.component(g).members()) c.insert(local[r.mul(r.mul(f, x), f)]);
    comps[g] = c.sorted();
  }
  return verify_grading(corner, gr.group(), comps).with_name("fRf");
}

PeirceBlocks peirce_blocks(const GradedRing& gr, Elem f) {
  const Ring& r = gr.ring();
  if (!r.is_idempotent(f))
    throw Error(ErrorKind::kNotIdempotent, "Peirce blocks need an idempotent", Json{{"f", r.literal(f)}});
  if (!gr.in_identity_component(f))
    throw Error(ErrorKind::kNotDegreeE, "Peirce idempotent must lie in R_e", Json{{"f", r.literal(f)}});
  const Elem fbar = r.sub(r.one(), f);
  const std::array<std::pair<Elem, Elem>, 4> sides{{{f, f}, {f, fbar}, {fbar, f}, {fbar, fbar}}};
  std::array<ElementSet, 4> sets;
  for (auto& s : sets) s = ElementSet(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    Elem sum = r.zero();
    for (std::size_t b = 0; b < 4; ++b) {
      const Elem y = r.mul(r.mul(sides[b].first, x), sides[b].second);
      sets[b].insert(y);
      sum = r.add(sum, y);
    }
    if (sum != x)
      throw Error(ErrorKind::kVerification, "Peirce parts do not sum to the element", Json{{"x", r.literal(x)}});
  }
  PeirceBlocks out;
  for (std::size_t b = 0; b < 4; ++b) {
    out.blocks[b] = sets[b].sorted();
    if (!is_ideal_of_kind(r, sets[b], IdealKind::kAdditiveSubgroup))
      throw Error(ErrorKind::kVerification, "Peirce block is not an additive subgroup");
  }
  for (Elem x : out.blocks[0])
    for (Elem y : out.blocks[0])
      if (!sets[0].contains(r.mul(x, y)))
        throw Error(ErrorKind::kVerification, "fRf is not closed under multiplication");
  for (Elem x : out.blocks[3])
    for (Elem y : out.blocks[3])
      if (!sets[3].contains(r.mul(x, y)))
        throw Error(ErrorKind::kVerification, "(1-f)R(1-f) is not closed under multiplication");
  return out;
}

Augmentation augmentation(const GradedRing& group_ring) {
  const GroupRingImpl& impl = group_ring_impl(group_ring.ring());
  const GradedRing& base = impl.base();
  const Ring& r = base.ring();
  const Ring& rh = group_ring.ring();
  const std::vector<Label>& h = impl.support();

  Augmentation out{coarsen(group_ring, h).graded, coarsen(base, h).graded, {}, {}, false, std::nullopt};
  out.image.resize(rh.size());
  std::vector<Elem> kernel;
  for (Elem x = 0; x < rh.size(); ++x) {
    const Coeffs c = impl.decode(x);
    Elem s = r.zero();
    for (std::size_t k = 0; k < h.size(); ++k) s = r.add(s, c[k]);
    out.image[x] = s;
    if (s == r.zero()) kernel.push_back(x);
  }
  const std::vector<Elem>& image = out.image;
  HomReport report = verify_graded_hom(out.group_ring, out.base, [&](Elem x) { return image[x]; });
  if (!report.ok || !report.surjective)
    throw Error(ErrorKind::kVerification, "augmentation is not a surjective graded homomorphism",
                report.witness);
  out.delta = additive_span(rh, kernel);
  out.delta.kind = IdealKind::kTwoSided;
  if (out.delta.size() != kernel.size() || !is_ideal_of_kind(rh, out.delta.members, IdealKind::kTwoSided))
    throw Error(ErrorKind::kVerification, "augmentation kernel is not a two-sided ideal");
  if (out.delta.size() * r.size() != rh.size())
    throw Error(ErrorKind::kVerification, "augmentation kernel has the wrong index");
  if (!is_homogeneous_ideal(out.group_ring, out.delta.members))
    throw Error(ErrorKind::kVerification, "augmentation ideal is not homogeneous");
  out.two_group_hypothesis = r.is_nilpotent(r.from_int(2)) && std::has_single_bit(h.size());
  out.delta_nilpotency = ideal_power_nilpotent(out.delta);
  if (out.two_group_hypothesis && !out.delta_nilpotency)
    throw Error(ErrorKind::kVerification, "augmentation ideal is not nilpotent for a 2-group");
  return out;
}

GradedRing graded_direct_product(std::span<const GradedRing> factors) {
  if (factors.empty()) throw Error(ErrorKind::kInvalidArgument, "empty product");
  const FiniteGroup& g = factors[0].group();
  for (const auto& f : factors)
    if (!(f.group() == g))
      throw Error(ErrorKind::kGroupMismatch, "factors are graded by different groups");
  if (factors.size() == 1) return factors[0];
  std::vector<Ring> rings;
  for (const auto& f : factors) rings.push_back(f.ring());
  const Ring p = product_ring(rings);
  std::vector<std::vector<Elem>> gens(g.order());
  std::vector<Elem> coords(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) coords[k] = rings[k].zero();
  for (Label lambda = 0; lambda < g.order(); ++lambda)
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (Elem x : factors[k].component_generators(lambda)) {
        coords[k] = x;
        gens[lambda].push_back(product_from_coordinates(p, coords));
        coords[k] = rings[k].zero();
      }
  return graded_from_generators(p, g, gens).with_name(p.describe());
}

GradedRing graded_direct_product(const GradedRing& a, const GradedRing& b) {
  const GradedRing both[] = {a, b};
  return graded_direct_product(both);
}

}  // namespace grl
