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

#include "gradedringlab/cleanness.hpp"

#include <algorithm>

#include "gradedringlab/constructions.hpp"
#include "gradedringlab/limits.hpp"
#include "gradedringlab/rings.hpp"

namespace grl {
namespace {

void require_homogeneous(const GradedRing& gr, Elem x) {
  if (!gr.is_homogeneous(x))
    throw Error(ErrorKind::kNotHomogeneous, "element is not homogeneous",
                Json{{"element", gr.ring().literal(x)}});
}

template <typename Pred>
Verdict quantify(const std::vector<Elem>& elems, Pred ok) {
  Verdict v;
  for (Elem x : elems) {
    ++v.checked;
    if (!ok(x)) {
      v.holds = false;
      v.witness = x;
      return v;
    }
  }
  return v;
}

template <typename Pred>
std::optional<Elem> first_failure(const Ring& r, Pred ok) {
  for (Elem x = 0; x < r.size(); ++x)
    if (!ok(x)) return x;
  return std::nullopt;
}

}  // namespace

std::vector<NilCleanDecomposition> nil_clean_decompositions(const Ring& r, Elem x) {
  std::vector<NilCleanDecomposition> out;
  for (Elem f : r.classification().idempotents) {
    const Elem b = r.sub(x, f);
    if (r.is_nilpotent(b)) out.push_back({f, b, r.commute(f, b)});
  }
  return out;
}

std::vector<NilCleanDecomposition> strongly_nil_clean_decompositions(const Ring& r, Elem x) {
  std::vector<NilCleanDecomposition> out = nil_clean_decompositions(r, x);
  std::erase_if(out, [](const NilCleanDecomposition& d) { return !d.commuting; });
  return out;
}

std::vector<CleanDecomposition> clean_decompositions(const Ring& r, Elem x) {
  std::vector<CleanDecomposition> out;
  for (Elem f : r.classification().idempotents) {
    const Elem u = r.sub(x, f);
    if (r.is_unit(u)) out.push_back({f, u});
  }
  return out;
}

std::optional<Elem> nil_clean_failure(const Ring& r) {
  const auto& ids = r.classification().idempotents;
  return first_failure(r, [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) { return r.is_nilpotent(r.sub(x, f)); });
  });
}

std::optional<Elem> strongly_nil_clean_failure(const Ring& r) {
  const auto& ids = r.classification().idempotents;
  return first_failure(r, [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) {
      return r.commute(f, x) && r.is_nilpotent(r.sub(x, f));
    });
  });
}

std::optional<Elem> clean_failure(const Ring& r) {
  const auto& ids = r.classification().idempotents;
  return first_failure(r, [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) { return r.is_unit(r.sub(x, f)); });
  });
}

std::vector<NilCleanDecomposition> graded_nil_clean_element(const GradedRing& gr, Elem x) {
  require_homogeneous(gr, x);
  const Ring& r = gr.ring();
  std::vector<NilCleanDecomposition> out;
  for (Elem f : gr.homogeneous_idempotents()) {
    const Elem b = r.sub(x, f);
    if (gr.is_homogeneous(b) && r.is_nilpotent(b)) out.push_back({f, b, r.commute(f, b)});
  }
  return out;
}

std::vector<NilCleanDecomposition> graded_strongly_nil_clean_element(const GradedRing& gr, Elem x) {
  std::vector<NilCleanDecomposition> out = graded_nil_clean_element(gr, x);
  std::erase_if(out, [](const NilCleanDecomposition& d) { return !d.commuting; });
  return out;
}

std::vector<CleanDecomposition> graded_clean_element(const GradedRing& gr, Elem x) {
  require_homogeneous(gr, x);
  const Ring& r = gr.ring();
  std::vector<CleanDecomposition> out;
  for (Elem f : gr.homogeneous_idempotents()) {
    const Elem u = r.sub(x, f);
    if (gr.is_homogeneous(u) && r.is_unit(u)) out.push_back({f, u});
  }
  return out;
}

Verdict is_graded_nil_clean(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const auto& ids = gr.homogeneous_idempotents();
  return quantify(gr.homogeneous(), [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) {
      const Elem b = r.sub(x, f);
      return gr.is_homogeneous(b) && r.is_nilpotent(b);
    });
  });
}

Verdict is_graded_strongly_nil_clean(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const auto& ids = gr.homogeneous_idempotents();
  return quantify(gr.homogeneous(), [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) {
      const Elem b = r.sub(x, f);
      return gr.is_homogeneous(b) && r.commute(f, b) && r.is_nilpotent(b);
    });
  });
}

Verdict is_graded_clean(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const auto& ids = gr.homogeneous_idempotents();
  return quantify(gr.homogeneous(), [&](Elem x) {
    return std::any_of(ids.begin(), ids.end(), [&](Elem f) {
      const Elem u = r.sub(x, f);
      return gr.is_homogeneous(u) && r.is_unit(u);
    });
  });
}

Verdict is_graded_2_nil_clean(const GradedRing& gr) {
  const Ring& r = gr.ring();
  const auto& nil = gr.homogeneous_nilpotents();
  const auto& ids = gr.homogeneous_idempotents();
  // Sums of two homogeneous nilpotents, built once.
  const std::size_t pair_cost = nil.size() * nil.size();
  const std::size_t scan_cost = r.size() * ids.size() * nil.size();
  const std::size_t budget = std::size_t{1} << 28;
  if (std::min(pair_cost, scan_cost) > budget)
    throw CapExceeded("graded 2-nil-clean search exceeds its work budget");
  std::vector<Elem> all(r.size());
  for (Elem x = 0; x < r.size(); ++x) all[x] = x;
  if (pair_cost <= scan_cost) {
    ElementSet sums(r.size());
    for (Elem a : nil)
      for (Elem b : nil) sums.insert(r.add(a, b));
    return quantify(all, [&](Elem x) {
      return std::any_of(ids.begin(), ids.end(), [&](Elem f) { return sums.contains(r.sub(x, f)); });
    });
  }
  ElementSet nil_set(r.size(), nil);
  return quantify(all, [&](Elem x) {
    for (Elem f : ids) {
      const Elem y = r.sub(x, f);
      for (Elem a : nil)
        if (nil_set.contains(r.sub(y, a))) return true;
    }
    return false;
  });
}

GsprResult gspr_decompositions(const GradedRing& gr, Elem a) {
  require_homogeneous(gr, a);
  const Ring& r = gr.ring();
  GsprResult out;
  for (Elem f : gr.homogeneous_idempotents()) {
    const Elem u = r.sub(a, f);
    if (!gr.is_homogeneous(u) || !r.is_unit(u)) continue;
    if (!r.commute(f, a)) continue;
    if (!r.is_nilpotent(r.mul(r.mul(f, a), f))) continue;
    out.decompositions.push_back({f, u});
  }
  out.unique = out.decompositions.size() <= 1;
  return out;
}

bool check_nilpotency_criterion(const GradedRing& gr, Elem a) {
  const GsprResult gspr = gspr_decompositions(gr, a);
  if (gspr.decompositions.empty())
    throw Error(ErrorKind::kNoDecomposition, "element has no graded strongly pi-regular decomposition",
                Json{{"element", gr.ring().literal(a)}});
  const Ring& r = gr.ring();
  const auto [f, u] = gspr.decompositions.front();
  const Elem t = r.add(r.sub(r.times(f, 2), r.one()), u);
  return r.is_nilpotent(t) && gr.in_identity_component(u);
}

IdempotentLift lift_idempotent(const GradedRing& gr, const GradedQuotient& q, Elem abar,
                               bool exhaustive) {
  const Ring& r = gr.ring();
  const Ring& qr = q.quotient.ring;
  const std::vector<Elem>& proj = q.quotient.projection;
  if (abar >= qr.size() || !qr.is_idempotent(abar) || !q.graded.in_identity_component(abar))
    throw Error(ErrorKind::kNotIdempotentModI, "class is not an idempotent of (R/I)_e",
                Json{{"class", abar < qr.size() ? qr.literal(abar) : Json(abar)}});
  const ElementSet& re = gr.component(gr.identity_label());
  std::optional<Elem> start;
  for (Elem x : re.sorted())
    if (proj[x] == abar) {
      start = x;
      break;
    }
  if (!start) throw Error(ErrorKind::kVerification, "identity component does not cover (R/I)_e");

  IdempotentLift out;
  // t^2 - t lies in I cap R_e, which is nil; each step raises its nilpotency
  // order, so the iteration reaches an idempotent in log-many steps.
  Elem t = *start;
  for (int step = 0; !r.is_idempotent(t); ++step) {
    if (step > 64) throw Error(ErrorKind::kVerification, "idempotent lifting did not converge; I is not nil on R_e");
    const Elem t2 = r.mul(t, t);
    t = r.sub(r.times(t2, 3), r.times(r.mul(t2, t), 2));
  }
  if (proj[t] != abar || !re.contains(t))
    throw Error(ErrorKind::kVerification, "lifted idempotent left the class or R_e");
  out.fast = t;
  if (exhaustive) {
    out.exhaustive_ran = true;
    for (Elem e : gr.homogeneous_idempotents())
      if (re.contains(e) && proj[e] == abar) out.exhaustive.push_back(e);
    out.agree = std::find(out.exhaustive.begin(), out.exhaustive.end(), t) != out.exhaustive.end();
  }
  return out;
}

GradedProperty homogeneous_nilpotent_property() {
  return {"homogeneous-nilpotent", [](const GradedRing& gr, Elem x) {
            return gr.is_homogeneous(x) && gr.ring().is_nilpotent(x);
          }};
}

GradedProperty homogeneous_unit_property() {
  return {"homogeneous-unit", [](const GradedRing& gr, Elem x) {
            return gr.is_homogeneous(x) && gr.ring().is_unit(x);
          }};
}

AbabReport check_abab_conditions(const GradedProperty& p, const GradedRing& gr) {
  const Ring& r = gr.ring();
  AbabReport report;
  report.property = p.name;
  for (Elem a : gr.homogeneous()) {
    if (!p.holds(gr, a)) continue;
    ++report.negation.checked;
    if (!p.holds(gr, r.neg(a))) {
      report.negation.holds = false;
      report.negation.witness = Json{{"a", r.literal(a)}};
      break;
    }
  }

  struct Corner {
    GradedRing graded;
    std::vector<Elem> local;
  };
  auto make_corner = [&](Elem f) {
    GradedRing c = corner_ring(gr, f);
    std::vector<Elem> local(r.size(), kNoElem);
    const auto info = subset_info(c.ring());
    for (Elem i = 0; i < info->members.size(); ++i) local[info->members[i]] = i;
    return Corner{std::move(c), std::move(local)};
  };

  for (Elem f : gr.homogeneous_idempotents()) {
    if (!gr.in_identity_component(f)) continue;
    const Elem fbar = r.sub(r.one(), f);
    const Corner cf = make_corner(f);
    const Corner cfbar = make_corner(fbar);
    for (Elem a : gr.homogeneous()) {
      if (!r.commute(a, f)) continue;
      const Elem faf = r.mul(r.mul(f, a), f);
      const Elem fbar_a = r.mul(r.mul(fbar, a), fbar);
      const bool pa = p.holds(gr, a);
      const bool p_corner = p.holds(cf.graded, cf.local[faf]);
      if (pa && report.corner.holds) {
        ++report.corner.checked;
        if (!p_corner) {
          report.corner.holds = false;
          report.corner.witness = Json{{"a", r.literal(a)}, {"f", r.literal(f)}};
        }
      }
      if (p_corner && p.holds(cfbar.graded, cfbar.local[fbar_a]) && report.reassembly.holds) {
        ++report.reassembly.checked;
        if (!pa) {
          report.reassembly.holds = false;
          report.reassembly.witness = Json{{"a", r.literal(a)}, {"f", r.literal(f)}};
        }
      }
    }
  }
  return report;
}

}  // namespace grl
