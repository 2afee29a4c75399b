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
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gradedringlab/cleanness.hpp"
#include "gradedringlab/constructions.hpp"
#include "gradedringlab/harness.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/radicals.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

// Sizes of auxiliary rings (T2(R), R[H], R x R) built by the checks.
constexpr std::size_t kAuxiliaryCap = 4096;
constexpr std::size_t kMaxCandidateIdeals = 6;

template <typename T>
class Lazy {
 public:
  template <typename F>
  const T& get(F&& make) {
    std::call_once(once_, [&] {
      try {
        value_.emplace(make());
      } catch (...) {
        error_ = std::current_exception();
      }
    });
    if (error_) std::rethrow_exception(error_);
    return *value_;
  }

 private:
  std::once_flag once_;
  std::optional<T> value_;
  std::exception_ptr error_;
};

struct Outcome {
  CheckStatus status;
  std::string detail;
  Json witness = nullptr;
};

Outcome holds(std::string d) { return {CheckStatus::kHolds, std::move(d)}; }
Outcome vacuous(std::string d) { return {CheckStatus::kVacuous, std::move(d)}; }
Outcome failed(std::string d, Json w) { return {CheckStatus::kFailed, std::move(d), std::move(w)}; }

struct CandidateIdeal {
  Elem generator;
  SubsetIdeal ideal;
  GradedQuotient quotient;
  bool nilpotent;
};

struct GroupRingCase {
  std::vector<Label> subgroup;
  GradedRing group_ring;
};

bool power_fits(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / std::max<std::size_t>(base, 1)) return false;
    v *= base;
  }
  return v <= cap;
}

class Context {
 public:
  explicit Context(const Subject& s) : subject(s), gr(s.graded), r(s.graded.ring()) {}

  const Subject& subject;
  const GradedRing& gr;
  const Ring& r;

  bool group() const { return gr.is_group_graded(); }
  Json lit(Elem x) const { return r.literal(x); }

  const Verdict& gnc() { return gnc_.get([&] { return is_graded_nil_clean(gr); }); }
  const Verdict& gsnc() { return gsnc_.get([&] { return is_graded_strongly_nil_clean(gr); }); }
  const Verdict& gclean() { return gclean_.get([&] { return is_graded_clean(gr); }); }
  const Ring& re() { return re_.get([&] { return identity_component_ring(gr); }); }
  bool re_nil_clean() { return re_nil_clean_.get([&] { return is_nil_clean_ring(re()); }); }
  const GradedRadical& jg() { return jg_.get([&] { return graded_jacobson_radical(gr); }); }
  const GradedQuotient& jg_quotient() {
    return jg_quotient_.get([&] { return quotient_graded(gr, jg().ideal); });
  }

  // Homogeneous graded-nil two-sided ideals generated by single homogeneous
  // nilpotents, proper and nonzero, first few in index order.
  const std::vector<CandidateIdeal>& candidates() {
    return candidates_.get([&] {
      std::vector<CandidateIdeal> out;
      std::unordered_set<ElementSet, ElementSetHash> seen;
      for (Elem h : gr.homogeneous_nilpotents()) {
        if (h == r.zero()) continue;
        const Elem gens[] = {h};
        SubsetIdeal ideal = ideal_generated(r, gens, IdealKind::kTwoSided);
        if (ideal.is_whole() || !seen.insert(ideal.members).second) continue;
        if (!is_homogeneous_ideal(gr, ideal.members) || !is_graded_nil(gr, ideal.members)) continue;
        GradedQuotient q = quotient_graded(gr, ideal);
        const bool nilpotent = ideal_power_nilpotent(ideal).has_value();
        out.push_back(CandidateIdeal{h, std::move(ideal), std::move(q), nilpotent});
        if (out.size() == kMaxCandidateIdeals) break;
      }
      return out;
    });
  }

  const std::vector<GroupRingCase>& group_rings() {
    return group_rings_.get([&] {
      std::vector<GroupRingCase> out;
      for (const auto& h : gr.group().normal_subgroups()) {
        if (h.size() < 2 || !power_fits(r.size(), h.size(), kAuxiliaryCap)) continue;
        out.push_back(GroupRingCase{h, graded_subgroup_ring(gr, h)});
      }
      return out;
    });
  }

  const std::vector<std::pair<Sigma, GradedRing>>& triangulars() {
    return triangulars_.get([&] {
      std::vector<std::pair<Sigma, GradedRing>> out;
      const FiniteGroup& g = gr.group();
      std::vector<Sigma> sigmas{{g.identity(), g.identity()}};
      if (g.order() > 1) {
        const Label other = g.identity() == 0 ? 1 : 0;
        sigmas.push_back({g.identity(), other});
        sigmas.push_back({other, g.identity()});
      }
      for (const auto& s : sigmas) out.emplace_back(s, graded_triangular_ring(gr, 2, s).graded);
      return out;
    });
  }

 private:
  Lazy<Verdict> gnc_, gsnc_, gclean_;
  Lazy<Ring> re_;
  Lazy<bool> re_nil_clean_;
  Lazy<GradedRadical> jg_;
  Lazy<GradedQuotient> jg_quotient_;
  Lazy<std::vector<CandidateIdeal>> candidates_;
  Lazy<std::vector<GroupRingCase>> group_rings_;
  Lazy<std::vector<std::pair<Sigma, GradedRing>>> triangulars_;
};

using CheckFn = std::function<std::optional<Outcome>(Context&)>;

struct Check {
  CheckInfo info;
  CheckFn run;
};

Outcome implication(bool hyp, bool concl, const std::string& what, Json witness = nullptr) {
  if (!hyp) return vacuous("hypothesis fails: " + what);
  if (concl) return holds(what);
  return failed(what, std::move(witness));
}

std::string sigma_text(const FiniteGroup& g, const Sigma& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out + ")";
}

std::optional<Outcome> fixture_flags(Context& c) {
  if (c.subject.expected.empty()) return std::nullopt;
  Json mismatches = Json::array();
  for (const auto& e : c.subject.expected) {
    const bool got = compute_flag(c.gr, e.flag);
    if (got != e.value) mismatches.push_back({{"flag", e.flag}, {"expected", e.value}, {"computed", got}});
  }
  if (!mismatches.empty()) return failed("computed flags differ from expected", mismatches);
  return holds(std::to_string(c.subject.expected.size()) + " flags match");
}

std::optional<Outcome> remark_structure(Context& c) {
  if (!c.group()) return std::nullopt;
  if (!c.gnc().holds) return vacuous("not graded nil clean");
  for (Elem f : c.gr.homogeneous_idempotents())
    if (f != c.r.zero() && !c.gr.in_identity_component(f))
      return failed("nonzero homogeneous idempotent outside R_e", {{"f", c.lit(f)}});
  if (!c.re_nil_clean()) return failed("R_e is not nil clean", nullptr);
  for (Elem x : c.gr.homogeneous())
    if (x != c.r.zero() && !c.gr.in_identity_component(x) && !c.r.is_nilpotent(x))
      return failed("homogeneous element outside R_e is not nilpotent", {{"x", c.lit(x)}});
  return holds("idempotents in R_e, R_e nil clean, other components nil");
}

std::optional<Outcome> graded_nil_implies_strongly(Context& c) {
  return implication(is_graded_nil(c.gr), c.gsnc().holds, "graded-nil implies graded strongly nil clean",
                     c.gsnc().witness ? c.lit(*c.gsnc().witness) : Json(nullptr));
}

std::optional<Outcome> graded_clean_structure(Context& c) {
  if (!c.group()) return std::nullopt;
  const bool clean = c.gclean().holds;
  const bool division = is_graded_division(c.gr);
  if (!clean && !division) return vacuous("neither graded clean nor graded division");
  if (division && !clean)
    return failed("graded division ring is not graded clean", {{"x", c.lit(*c.gclean().witness)}});
  if (auto bad = clean_failure(c.re())) return failed("R_e is not clean", {{"x", c.re().literal(*bad)}});
  for (Elem x : c.gr.homogeneous())
    if (x != c.r.zero() && !c.gr.in_identity_component(x) && !c.r.is_unit(x))
      return failed("homogeneous element outside R_e is not a unit", {{"x", c.lit(x)}});
  return holds("R_e clean and other homogeneous elements are units");
}

template <typename Pred>
std::optional<Outcome> over_candidates(Context& c, bool nilpotent_only, const std::string& what,
                                       Pred pred) {
  std::size_t applicable = 0;
  for (const auto& cand : c.candidates()) {
    if (nilpotent_only && !cand.nilpotent) continue;
    std::optional<bool> res = pred(cand);
    if (!res) continue;
    ++applicable;
    if (!*res)
      return failed(what, {{"ideal_generator", c.lit(cand.generator)}, {"ideal_size", cand.ideal.size()}});
  }
  if (applicable == 0) return vacuous("no ideal satisfies the hypotheses");
  return holds(what + " on " + std::to_string(applicable) + " ideal(s)");
}

std::optional<Outcome> quotient_forward(Context& c) {
  if (!c.group()) return std::nullopt;
  const bool gnc = c.gnc().holds;
  return over_candidates(c, false, "R graded nil clean implies R/I graded nil clean",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           if (!gnc) return std::nullopt;
                           return is_graded_nil_clean(i.quotient.graded).holds;
                         });
}

std::optional<Outcome> quotient_backward(Context& c) {
  if (!c.group()) return std::nullopt;
  const bool gnc = c.gnc().holds;
  return over_candidates(c, false, "R/I graded nil clean implies R graded nil clean",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           if (!is_graded_nil_clean(i.quotient.graded).holds) return std::nullopt;
                           return gnc;
                         });
}

std::optional<Outcome> jg_graded_nil(Context& c) {
  if (!c.group()) return std::nullopt;
  if (!c.gnc().holds) return vacuous("not graded nil clean");
  const auto w = graded_nil_witness(c.gr, c.jg().ideal.members);
  if (w) return failed("J^g contains a non-nilpotent homogeneous element", {{"x", c.lit(*w)}});
  return holds("J^g is graded-nil (" + std::to_string(c.jg().ideal.size()) + " elements)");
}

std::optional<Outcome> jg_corollary_forward(Context& c) {
  if (!c.group()) return std::nullopt;
  if (!c.gnc().holds) return vacuous("not graded nil clean");
  if (!is_graded_nil(c.gr, c.jg().ideal.members)) return failed("J^g is not graded-nil", nullptr);
  if (!is_graded_nil_clean(c.jg_quotient().graded).holds)
    return failed("R/J^g is not graded nil clean", nullptr);
  return holds("J^g graded-nil and R/J^g graded nil clean");
}

std::optional<Outcome> jg_corollary_backward(Context& c) {
  if (!c.group()) return std::nullopt;
  const bool hyp = is_graded_nil(c.gr, c.jg().ideal.members) &&
                   is_graded_nil_clean(c.jg_quotient().graded).holds;
  return implication(hyp, c.gnc().holds, "J^g graded-nil and R/J^g graded nil clean imply R graded nil clean");
}

std::optional<Outcome> jg_e_component(Context& c) {
  if (!c.group()) return std::nullopt;
  const GradedRadical& j = c.jg();
  if (!j.two_sided) return failed("J^g is not two-sided", nullptr);
  if (!j.homogeneous) return failed("J^g is not homogeneous", nullptr);
  if (!j.e_component_matches) return failed("J^g cap R_e differs from J(R_e)", nullptr);
  return holds("J^g two-sided, homogeneous, J^g cap R_e = J(R_e); " +
               std::to_string(j.maximal_count) + " maximal homogeneous right ideal(s)");
}

std::optional<Outcome> jg_trivial_equals_classical(Context& c) {
  if (!c.group() || !c.gr.is_trivial()) return std::nullopt;
  const SubsetIdeal j = jacobson_radical(c.r);
  if (!(j.members == c.jg().ideal.members)) return failed("J^g differs from J for a trivial grading", nullptr);
  return holds("J^g = J (" + std::to_string(j.size()) + " elements)");
}

std::optional<Outcome> jg_quotient_semisimple(Context& c) {
  if (!c.group()) return std::nullopt;
  if (c.jg().ideal.is_whole()) return vacuous("zero ring");
  const GradedRadical q = graded_jacobson_radical(c.jg_quotient().graded);
  if (!q.ideal.is_zero()) return failed("R/J^g has nonzero graded radical", {{"size", q.ideal.size()}});
  return holds("J^g(R/J^g) = 0");
}

std::optional<Outcome> jg_division_zero(Context& c) {
  if (!c.group()) return std::nullopt;
  return implication(is_graded_division(c.gr), c.jg().ideal.is_zero(), "graded division ring has J^g = 0");
}

std::optional<Outcome> gspr_uniqueness(Context& c) {
  if (!c.group()) return std::nullopt;
  std::size_t with = 0;
  for (Elem a : c.gr.homogeneous()) {
    const GsprResult g = gspr_decompositions(c.gr, a);
    if (!g.unique) return failed("two gspr decompositions", {{"a", c.lit(a)}});
    with += g.decompositions.size();
  }
  return holds(std::to_string(with) + " homogeneous element(s) with a unique gspr decomposition");
}

std::optional<Outcome> nilpotency_criterion(Context& c, bool forward) {
  if (!c.group()) return std::nullopt;
  std::size_t applicable = 0;
  for (Elem a : c.gr.homogeneous()) {
    if (gspr_decompositions(c.gr, a).decompositions.empty()) continue;
    const bool snc = !graded_strongly_nil_clean_element(c.gr, a).empty();
    const bool crit = check_nilpotency_criterion(c.gr, a);
    const bool hyp = forward ? snc : crit;
    const bool concl = forward ? crit : snc;
    if (!hyp) continue;
    ++applicable;
    if (!concl)
      return failed(forward ? "graded strongly nil clean but criterion fails"
                            : "criterion holds but not graded strongly nil clean",
                    {{"a", c.lit(a)}});
  }
  if (applicable == 0) return vacuous("no gspr element satisfies the hypothesis");
  return holds(std::to_string(applicable) + " gspr element(s) checked");
}

std::optional<Outcome> lifting_theorem(Context& c) {
  if (!c.group()) return std::nullopt;
  return over_candidates(c, true, "images graded strongly nil clean lift",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           bool any = false;
                           for (Elem a : c.gr.homogeneous()) {
                             const Elem abar = i.quotient.quotient.projection[a];
                             if (graded_strongly_nil_clean_element(i.quotient.graded, abar).empty()) continue;
                             any = true;
                             if (graded_strongly_nil_clean_element(c.gr, a).empty()) return false;
                           }
                           if (!any) return std::nullopt;
                           return true;
                         });
}

std::optional<Outcome> idempotent_lifting(Context& c) {
  if (!c.group()) return std::nullopt;
  return over_candidates(c, false, "fast idempotent lift agrees with exhaustive search",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           const GradedRing& q = i.quotient.graded;
                           for (Elem abar : q.homogeneous_idempotents()) {
                             if (!q.in_identity_component(abar)) continue;
                             if (!lift_idempotent(c.gr, i.quotient, abar).agree) return false;
                           }
                           return true;
                         });
}

std::optional<Outcome> lifting_corollary(Context& c, bool forward) {
  if (!c.group()) return std::nullopt;
  const bool gsnc = c.gsnc().holds;
  return over_candidates(c, true,
                         forward ? "R graded strongly nil clean implies R/I is"
                                 : "R/I graded strongly nil clean implies R is",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           const bool q = is_graded_strongly_nil_clean(i.quotient.graded).holds;
                           if (forward) return gsnc ? std::optional<bool>(q) : std::nullopt;
                           return q ? std::optional<bool>(gsnc) : std::nullopt;
                         });
}

bool has_nontrivial_homogeneous_idempotent(Context& c) {
  for (Elem f : c.gr.homogeneous_idempotents())
    if (f != c.r.zero() && f != c.r.one()) return true;
  return false;
}

std::optional<Outcome> han_nicholson_lemma(Context& c) {
  if (!c.group()) return std::nullopt;
  const bool zdf = homogeneous_zero_divisor_free(c.gr);
  if (!zdf) {
    return vacuous(has_nontrivial_homogeneous_idempotent(c)
                       ? "hypothesis conflict: f(1-f) = 0 makes a nontrivial f a homogeneous zero divisor"
                       : "ring has nonzero homogeneous zero divisors");
  }
  std::size_t applicable = 0;
  for (Elem f : c.gr.homogeneous_idempotents()) {
    if (!c.gr.in_identity_component(f)) continue;
    const bool corners = is_graded_clean(corner_ring(c.gr, f)).holds &&
                         is_graded_clean(corner_ring(c.gr, c.r.sub(c.r.one(), f))).holds;
    if (!corners) continue;
    ++applicable;
    if (!c.gclean().holds) return failed("corners graded clean but R is not", {{"f", c.lit(f)}});
  }
  if (applicable == 0) return vacuous("no idempotent with graded clean corners");
  return holds("R graded clean; " + std::to_string(applicable) + " idempotent(s) checked");
}

std::optional<Outcome> han_nicholson_theorem(Context& c) {
  if (!c.group()) return std::nullopt;
  if (!homogeneous_zero_divisor_free(c.gr)) {
    return vacuous(has_nontrivial_homogeneous_idempotent(c)
                       ? "hypothesis conflict: orthogonal nonzero idempotents are homogeneous zero divisors"
                       : "ring has nonzero homogeneous zero divisors");
  }
  // Without homogeneous zero divisors the only complete orthogonal family is {1}.
  return implication(c.gclean().holds, c.gclean().holds, "family {1}: fRf = R graded clean");
}

std::optional<Outcome> triangular(Context& c, bool strongly, bool forward) {
  if (!c.group() || c.r.is_zero_ring() || !power_fits(c.r.size(), 3, kAuxiliaryCap)) return std::nullopt;
  const bool base = strongly ? c.gsnc().holds : c.gnc().holds;
  std::size_t applicable = 0;
  for (const auto& [sigma, t] : c.triangulars()) {
    const bool tri = strongly ? is_graded_strongly_nil_clean(t).holds : is_graded_nil_clean(t).holds;
    const bool hyp = forward ? base : tri;
    const bool concl = forward ? tri : base;
    if (!hyp) continue;
    ++applicable;
    if (!concl) return failed("triangular ring disagrees with its base", {{"sigma", sigma_text(c.gr.group(), sigma)}});
  }
  if (applicable == 0) return vacuous("hypothesis fails for every sigma");
  return holds(std::to_string(applicable) + " sigma(s) agree");
}

std::optional<Outcome> two_nilpotency(Context& c) {
  if (!c.group()) return std::nullopt;
  return implication(c.gnc().holds, c.r.is_nilpotent(c.r.from_int(2)), "graded nil clean implies 2 nilpotent");
}

std::optional<Outcome> group_ring_forward(Context& c) {
  if (!c.group() || !c.gr.group().is_two_group()) return std::nullopt;
  std::size_t applicable = 0;
  for (const auto& gc : c.group_rings()) {
    if (!is_graded_nil_clean(coarsen(c.gr, gc.subgroup).graded).holds) continue;
    ++applicable;
    if (!is_graded_nil_clean(coarsen(gc.group_ring, gc.subgroup).graded).holds)
      return failed("R[H] over G/H is not graded nil clean", {{"H_size", gc.subgroup.size()}});
  }
  if (applicable == 0) return vacuous("no subgroup H with R graded nil clean over G/H");
  return holds(std::to_string(applicable) + " subgroup(s) H");
}

std::optional<Outcome> group_ring_converse(Context& c) {
  if (!c.group() || c.gr.group().order() < 2) return std::nullopt;
  const GroupRingCase* full = nullptr;
  for (const auto& gc : c.group_rings())
    if (gc.subgroup.size() == static_cast<std::size_t>(c.gr.group().order())) full = &gc;
  if (!full) return std::nullopt;
  const Classification& cl = c.r.classification();
  const bool homogeneous_only =
      std::all_of(cl.idempotents.begin(), cl.idempotents.end(), [&](Elem x) { return c.gr.is_homogeneous(x); }) &&
      std::all_of(cl.nilpotents.begin(), cl.nilpotents.end(), [&](Elem x) { return c.gr.is_homogeneous(x); });
  const bool hyp = homogeneous_only && is_graded_nil_clean(full->group_ring).holds;
  return implication(hyp, c.gnc().holds, "R[G] graded nil clean implies R graded nil clean");
}

std::optional<Outcome> group_ring_e_iso(Context& c) {
  if (!c.group() || c.gr.group().order() < 2) return std::nullopt;
  for (const auto& gc : c.group_rings())
    if (gc.subgroup.size() == static_cast<std::size_t>(c.gr.group().order())) {
      const HomReport rep = group_ring_e_isomorphism(c.gr, gc.group_ring);
      if (!rep.ok) return failed("map onto (R[G])_e is not an isomorphism: " + rep.violation, rep.witness);
      return holds("R -> (R[G])_e is a ring isomorphism");
    }
  return std::nullopt;
}

std::optional<Outcome> augmentation_nilpotent(Context& c) {
  if (!c.group() || c.group_rings().empty()) return std::nullopt;
  std::size_t applicable = 0;
  for (const auto& gc : c.group_rings()) {
    const Augmentation a = augmentation(gc.group_ring);
    if (!a.two_group_hypothesis) continue;
    ++applicable;
    if (!a.delta_nilpotency) return failed("augmentation ideal is not nilpotent", {{"H_size", gc.subgroup.size()}});
  }
  if (applicable == 0) return vacuous("2 is not nilpotent or no 2-subgroup");
  return holds("augmentation ideal nilpotent for " + std::to_string(applicable) + " subgroup(s)");
}

std::optional<Outcome> implication_one(Context& c) {
  if (!c.group()) return std::nullopt;
  if (!c.re_nil_clean()) return vacuous("R_e is not nil clean");
  if (c.gnc().holds) return holds("R_e nil clean and R graded nil clean");
  Outcome o{c.subject.implication_counterexample ? CheckStatus::kFailedExpected : CheckStatus::kFailed,
            "implication refuted", {{"x", c.lit(*c.gnc().witness)}}};
  return o;
}

std::optional<Outcome> graded_local_theorem(Context& c) {
  if (!c.group()) return std::nullopt;
  const FiniteGroup& g = c.gr.group();
  if (!c.r.is_unit(c.r.from_int(g.order()))) return vacuous("|G| is not a unit");
  for (Label x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    for (Elem a : c.gr.component_generators(x))
      for (Elem b : c.gr.component_generators(g.inverse(x)))
        if (c.r.mul(a, b) != c.r.zero()) return vacuous("R_g R_{g^-1} is nonzero for some g != e");
  }
  if (!is_graded_local(c.gr)) return vacuous("not graded local");
  if (!c.re_nil_clean()) return vacuous("R_e is not nil clean");
  if (!c.gnc().holds) return failed("hypotheses hold but R is not graded nil clean", {{"x", c.lit(*c.gnc().witness)}});
  return holds("graded nil clean; the PI hypothesis holds for every finite ring");
}

std::optional<Outcome> abab(Context& c, const GradedProperty& p) {
  if (!c.group()) return std::nullopt;
  const AbabReport rep = check_abab_conditions(p, c.gr);
  if (!rep.negation.holds) return failed("condition (i) fails", rep.negation.witness);
  if (!rep.corner.holds) return failed("condition (ii) fails", rep.corner.witness);
  if (!rep.reassembly.holds) return failed("condition (iii) fails", rep.reassembly.witness);
  return holds("(i) " + std::to_string(rep.negation.checked) + ", (ii) " + std::to_string(rep.corner.checked) +
               ", (iii) " + std::to_string(rep.reassembly.checked) + " instances");
}

std::optional<Outcome> product_closure(Context& c) {
  if (!c.group() || !power_fits(c.r.size(), 2, kAuxiliaryCap)) return std::nullopt;
  if (!c.gnc().holds) return vacuous("not graded nil clean");
  const GradedRing p = graded_direct_product(c.gr, c.gr);
  return implication(true, is_graded_nil_clean(p).holds, "R x R graded nil clean");
}

std::optional<Outcome> s_grading_reinterpret(Context& c) {
  if (c.group()) {
    const GradedRing s = as_s_grading(c.gr);
    if (!is_cancellative(s.labels())) return failed("group is not cancellative as a groupoid", nullptr);
    return holds("group grading verified as an S-grading");
  }
  verify_s_grading(c.r, c.gr.labels(), c.gr.component_lists());
  return holds(std::string("S-grading re-verified; S is ") +
               (is_cancellative(c.gr.labels()) ? "cancellative" : "not cancellative"));
}

std::optional<Outcome> s_quotient_lemma(Context& c, bool forward) {
  if (c.group()) return std::nullopt;
  if (!is_cancellative(c.gr.labels())) return vacuous("S is not cancellative");
  const bool gnc = c.gnc().holds;
  return over_candidates(c, false,
                         forward ? "R graded nil clean implies R/I is" : "R/I graded nil clean implies R is",
                         [&](const CandidateIdeal& i) -> std::optional<bool> {
                           const bool q = is_graded_nil_clean(i.quotient.graded).holds;
                           if (forward) return gnc ? std::optional<bool>(q) : std::nullopt;
                           return q ? std::optional<bool>(gnc) : std::nullopt;
                         });
}

std::optional<Outcome> pi_jacobson_radical(Context& c) {
  if (!c.group()) return std::nullopt;
  // J(R) is nil in a finite ring, so R = J(R) exactly when 1 is nilpotent.
  const bool radical = c.r.is_nilpotent(c.r.one());
  if (!radical) return vacuous("R is not Jacobson radical; a unital ring equals J(R) only when it is zero");
  return implication(c.re_nil_clean(), c.gnc().holds, "R_e nil clean implies R graded nil clean");
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = [] {
    std::vector<Check> v;
    auto add = [&](std::string id, std::string statement, CheckFn fn) {
      v.push_back(Check{{std::move(id), std::move(statement)}, std::move(fn)});
    };
    add("fixture-flags", "computed classification flags equal the expected flags", fixture_flags);
    add("remark-structure", "graded nil clean: homogeneous idempotents in R_e, R_e nil clean, other components nil", remark_structure);
    add("graded-nil-implies-strongly", "graded-nil implies graded strongly nil clean", graded_nil_implies_strongly);
    add("graded-clean-structure", "graded clean: R_e clean and other homogeneous elements units; graded division implies graded clean", graded_clean_structure);
    add("quotient-lemma-forward", "R graded nil clean implies R/I graded nil clean for homogeneous graded-nil I", quotient_forward);
    add("quotient-lemma-backward", "R/I graded nil clean implies R graded nil clean for homogeneous graded-nil I", quotient_backward);
    add("jg-graded-nil", "graded nil clean over a finite group implies J^g graded-nil", jg_graded_nil);
    add("jg-corollary-forward", "graded nil clean implies J^g graded-nil and R/J^g graded nil clean", jg_corollary_forward);
    add("jg-corollary-backward", "J^g graded-nil and R/J^g graded nil clean imply graded nil clean", jg_corollary_backward);
    add("jg-e-component", "J^g is homogeneous, two-sided, and J^g cap R_e = J(R_e)", jg_e_component);
    add("jg-trivial-equals-classical", "J^g = J for trivial gradings", jg_trivial_equals_classical);
    add("jg-quotient-semisimple", "R/J^g has zero graded radical", jg_quotient_semisimple);
    add("jg-division-zero", "graded division rings have J^g = 0", jg_division_zero);
    add("gspr-uniqueness", "homogeneous elements have at most one gspr decomposition", gspr_uniqueness);
    add("nilpotency-criterion-forward", "gspr a = f + u graded strongly nil clean implies 2f-1+u nilpotent and u in R_e",
        [](Context& c) { return nilpotency_criterion(c, true); });
    add("nilpotency-criterion-backward", "gspr a = f + u with 2f-1+u nilpotent and u in R_e is graded strongly nil clean",
        [](Context& c) { return nilpotency_criterion(c, false); });
    add("lifting-theorem", "homogeneous nilpotent I: abar graded strongly nil clean implies a is", lifting_theorem);
    add("idempotent-lifting", "fast idempotent lift agrees with exhaustive search", idempotent_lifting);
    add("lifting-corollary-forward", "R graded strongly nil clean implies R/I is, I homogeneous nilpotent",
        [](Context& c) { return lifting_corollary(c, true); });
    add("lifting-corollary-backward", "R/I graded strongly nil clean implies R is, I homogeneous nilpotent",
        [](Context& c) { return lifting_corollary(c, false); });
    add("han-nicholson-lemma", "graded clean corners and no homogeneous zero divisors imply graded clean", han_nicholson_lemma);
    add("han-nicholson-theorem", "orthogonal idempotents with graded clean corners and no homogeneous zero divisors imply graded clean", han_nicholson_theorem);
    add("triangular-nil-clean-forward", "R graded nil clean implies T2(R)(sigma) graded nil clean",
        [](Context& c) { return triangular(c, false, true); });
    add("triangular-nil-clean-backward", "T2(R)(sigma) graded nil clean implies R graded nil clean",
        [](Context& c) { return triangular(c, false, false); });
    add("triangular-strongly-nil-clean-forward", "R graded strongly nil clean implies T2(R)(sigma) is",
        [](Context& c) { return triangular(c, true, true); });
    add("triangular-strongly-nil-clean-backward", "T2(R)(sigma) graded strongly nil clean implies R is",
        [](Context& c) { return triangular(c, true, false); });
    add("two-nilpotency", "graded nil clean implies 2 nilpotent", two_nilpotency);
    add("group-ring-forward", "G a 2-group, R graded nil clean over G/H implies R[H] graded nil clean over G/H", group_ring_forward);
    add("group-ring-converse", "only homogeneous idempotents and nilpotents, R[G] graded nil clean implies R is", group_ring_converse);
    add("group-ring-e-isomorphism", "sum r_g -> sum r_g g^-1 is an isomorphism R -> (R[G])_e", group_ring_e_iso);
    add("augmentation-nilpotent", "2 nilpotent and H a 2-group imply the augmentation ideal nilpotent", augmentation_nilpotent);
    add("implication-1", "R_e nil clean implies R graded nil clean", implication_one);
    add("graded-local-theorem", "graded local, |G| a unit, R_g R_g^-1 = 0, R_e nil clean imply graded nil clean", graded_local_theorem);
    add("abab-nilpotent", "homogeneous nilpotence passes the ABAB conditions", [](Context& c) { return abab(c, homogeneous_nilpotent_property()); });
    add("abab-unit", "homogeneous invertibility passes the ABAB conditions", [](Context& c) { return abab(c, homogeneous_unit_property()); });
    add("product-closure", "R graded nil clean implies R x R graded nil clean", product_closure);
    add("s-grading-reinterpret", "gradings re-verify as S-gradings over their label groupoid", s_grading_reinterpret);
    add("s-quotient-lemma-forward", "S cancellative: R graded nil clean implies R/I is, I homogeneous graded-nil",
        [](Context& c) { return s_quotient_lemma(c, true); });
    add("s-quotient-lemma-backward", "S cancellative: R/I graded nil clean implies R is, I homogeneous graded-nil",
        [](Context& c) { return s_quotient_lemma(c, false); });
    add("pi-jacobson-radical", "R = J(R) and R_e nil clean imply graded nil clean", pi_jacobson_radical);
    return v;
  }();
  return all;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kHolds: return "holds";
    case CheckStatus::kVacuous: return "vacuous";
    case CheckStatus::kFailedExpected: return "failed-expected";
    case CheckStatus::kFailed: return "FAILED";
  }
  return "?";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& c : checks()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

std::vector<CheckResult> run_checks(const std::vector<Subject>& subjects,
                                    const std::vector<std::string>& ids, unsigned threads) {
  const auto& registry = checks();
  std::vector<const Check*> selected;
  const bool everything = ids.empty() || (ids.size() == 1 && ids[0] == "all");
  for (const auto& c : registry)
    if (everything || std::find(ids.begin(), ids.end(), c.info.id) != ids.end()) selected.push_back(&c);
  for (const auto& id : ids) {
    if (id == "all") continue;
    if (std::none_of(registry.begin(), registry.end(), [&](const Check& c) { return c.info.id == id; }))
      throw Error(ErrorKind::kInvalidArgument, "unknown check " + id);
  }

  std::vector<std::unique_ptr<Context>> contexts;
  for (const auto& s : subjects) contexts.push_back(std::make_unique<Context>(s));

  const std::size_t total = subjects.size() * selected.size();
  std::vector<std::optional<CheckResult>> slots(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < total; t = next++) {
      Context& ctx = *contexts[t / selected.size()];
      const Check& check = *selected[t % selected.size()];
      std::optional<Outcome> o;
      try {
        o = check.run(ctx);
      } catch (const CapExceeded& e) {
        o = vacuous(std::string("skipped: ") + e.what());
      } catch (const std::exception& e) {
        o = failed(std::string("error: ") + e.what(), nullptr);
      }
      if (!o) continue;
      slots[t] = CheckResult{ctx.subject.name, check.info.id, o->status, std::move(o->detail), std::move(o->witness)};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CheckResult> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace grl
