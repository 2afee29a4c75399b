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

// Brute-force reference implementations for the unit tests. They use only
// the primitive ring operations (add, mul, zero, one) and bitmask subsets, so
// they share no search code with the library.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gradedringlab/graded_ring.hpp"
#include "gradedringlab/ring.hpp"

namespace oracle {

using grl::Elem;
using grl::GradedRing;
using grl::Ring;
using Mask = std::uint64_t;

inline Mask bit(Elem x) { return Mask{1} << x; }

inline std::vector<Elem> members(Mask m) {
  std::vector<Elem> out;
  for (Elem x = 0; m; ++x, m >>= 1)
    if (m & 1) out.push_back(x);
  return out;
}

inline Mask mask_of(const std::vector<Elem>& xs) {
  Mask m = 0;
  for (Elem x : xs) m |= bit(x);
  return m;
}

// Smallest k >= 1 with x^k = 0, or 0. Walks powers up to |R| + 1.
inline unsigned nil_index(const Ring& r, Elem x) {
  Elem p = x;
  for (unsigned k = 1; k <= r.size() + 1; ++k) {
    if (p == r.zero()) return k;
    p = r.mul(p, x);
  }
  return 0;
}

inline bool nilpotent(const Ring& r, Elem x) { return nil_index(r, x) != 0; }

inline std::optional<Elem> inverse(const Ring& r, Elem x) {
  for (Elem y = 0; y < r.size(); ++y)
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
  return std::nullopt;
}

inline bool idempotent(const Ring& r, Elem x) { return r.mul(x, x) == x; }

inline Mask additive_closure(const Ring& r, Mask seed) {
  Mask m = seed | bit(r.zero());
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a : members(m))
      for (Elem b : members(m)) {
        const Elem s = r.add(a, b);
        if (!(m & bit(s))) {
          m |= bit(s);
          grew = true;
        }
      }
  }
  return m;
}

// All additive subgroups, |R| <= 64: joins of cyclic subgroups until stable.
inline std::vector<Mask> additive_subgroups(const Ring& r) {
  std::set<Mask> seen{bit(r.zero())};
  std::vector<Mask> frontier{bit(r.zero())};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask m : frontier)
      for (Elem x = 0; x < r.size(); ++x) {
        if (m & bit(x)) continue;
        const Mask j = additive_closure(r, m | bit(x));
        if (seen.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Every subset of a ring with at most 16 elements that is an additive subgroup.
inline std::vector<Mask> additive_subgroups_by_subsets(const Ring& r) {
  std::vector<Mask> out;
  const Mask limit = Mask{1} << r.size();
  for (Mask m = 0; m < limit; ++m) {
    if (!(m & bit(r.zero()))) continue;
    bool ok = true;
    for (Elem a : members(m)) {
      for (Elem b : members(m))
        if (!(m & bit(r.add(a, b)))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

inline bool right_ideal(const Ring& r, Mask m) {
  for (Elem a : members(m))
    for (Elem x = 0; x < r.size(); ++x)
      if (!(m & bit(r.mul(a, x)))) return false;
  return true;
}

inline bool two_sided(const Ring& r, Mask m) {
  for (Elem a : members(m))
    for (Elem x = 0; x < r.size(); ++x)
      if (!(m & bit(r.mul(a, x))) || !(m & bit(r.mul(x, a)))) return false;
  return true;
}

inline Mask whole(const Ring& r) { return r.size() == 64 ? ~Mask{0} : (bit(r.size()) - 1); }

inline Mask intersect_maximal(const Ring& r, const std::vector<Mask>& family) {
  Mask out = whole(r);
  for (Mask m : family) {
    if (m == whole(r)) continue;
    bool maximal = true;
    for (Mask n : family)
      if (n != m && n != whole(r) && (n & m) == m) maximal = false;
    if (maximal) out &= m;
  }
  return out;
}

// Classical J as the intersection of maximal right ideals.
inline Mask jacobson(const Ring& r) {
  std::vector<Mask> ideals;
  for (Mask m : additive_subgroups(r))
    if (right_ideal(r, m)) ideals.push_back(m);
  if (r.size() == 1) return bit(r.zero());
  return intersect_maximal(r, ideals);
}

inline std::vector<Mask> component_masks(const GradedRing& gr) {
  std::vector<Mask> out;
  for (const auto& c : gr.component_lists()) out.push_back(mask_of(c));
  return out;
}

// A subgroup is homogeneous exactly when it is the sum of its intersections
// with the components, i.e. when the orders multiply out.
inline bool homogeneous_subgroup(const GradedRing& gr, Mask m) {
  std::size_t product = 1;
  for (Mask c : component_masks(gr)) product *= std::popcount(m & c);
  return product == static_cast<std::size_t>(std::popcount(m));
}

inline Mask graded_jacobson(const GradedRing& gr) {
  const Ring& r = gr.ring();
  if (r.size() == 1) return bit(r.zero());
  std::vector<Mask> ideals;
  for (Mask m : additive_subgroups(r))
    if (right_ideal(r, m) && homogeneous_subgroup(gr, m)) ideals.push_back(m);
  return intersect_maximal(r, ideals);
}

inline std::vector<Elem> homogeneous(const GradedRing& gr) {
  std::set<Elem> h;
  for (const auto& c : gr.component_lists()) h.insert(c.begin(), c.end());
  return {h.begin(), h.end()};
}

enum class Kind { kNilClean, kStronglyNilClean, kClean };

// x = f + b over homogeneous idempotents f and homogeneous b of the given kind.
inline bool graded_decomposable(const GradedRing& gr, Elem x, Kind kind) {
  const Ring& r = gr.ring();
  const auto h = homogeneous(gr);
  for (Elem f : h) {
    if (!idempotent(r, f)) continue;
    for (Elem b : h) {
      if (r.add(f, b) != x) continue;
      if (kind == Kind::kClean) {
        if (inverse(r, b)) return true;
      } else if (nilpotent(r, b) && (kind == Kind::kNilClean || r.mul(f, b) == r.mul(b, f))) {
        return true;
      }
    }
  }
  return false;
}

inline bool graded_property(const GradedRing& gr, Kind kind) {
  for (Elem x : homogeneous(gr))
    if (!graded_decomposable(gr, x, kind)) return false;
  return true;
}

inline bool nil_clean_ring(const Ring& r) {
  for (Elem x = 0; x < r.size(); ++x) {
    bool found = false;
    for (Elem f = 0; f < r.size() && !found; ++f)
      if (idempotent(r, f)) {
        Elem b = r.add(x, r.neg(f));
        found = nilpotent(r, b);
      }
    if (!found) return false;
  }
  return true;
}

// S3 acting on {0,1,2}; labels e, a=(01), b=(12), c=(02), r, r2.
inline grl::FiniteGroup symmetric3() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<grl::Label>> table(6, std::vector<grl::Label>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
      table[x][y] = static_cast<grl::Label>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return grl::FiniteGroup(table, {"e", "a", "b", "c", "r", "r2"});
}

}  // namespace oracle
