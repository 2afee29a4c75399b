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

#include "gradedringlab/hom.hpp"

#include <numeric>
#include <vector>

#include "gradedringlab/ideal.hpp"

namespace grl {
namespace {

std::vector<Elem> all_elements(const Ring& r) {
  std::vector<Elem> all(r.size());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

}  // namespace

HomReport verify_ring_hom(const Ring& r, const Ring& s, const ElementMap& f,
                          bool require_bijective) {
  HomReport report;
  const auto n = static_cast<Elem>(r.size());
  std::vector<Elem> image(n);
  std::vector<std::uint8_t> hit(s.size(), 0);
  std::size_t distinct = 0;
  for (Elem x = 0; x < n; ++x) {
    image[x] = f(x);
    if (image[x] >= s.size()) {
      report.ok = false;
      report.violation = "additive";
      report.witness = {{"element", r.literal(x)}, {"image_index", image[x]}};
      return report;
    }
    if (!hit[image[x]]) {
      hit[image[x]] = 1;
      ++distinct;
    }
  }
  report.injective = distinct == n;
  report.surjective = distinct == s.size();

  auto fail = [&](const char* what, Json witness) {
    report.ok = false;
    report.violation = what;
    report.witness = std::move(witness);
    return report;
  };

  if (image[r.one()] != s.one())
    return fail("unital", {{"one_maps_to", s.literal(image[r.one()])}});

  const std::vector<Elem> all = all_elements(r);
  const std::vector<Elem> gens = additive_generators(r, all);
  for (Elem x = 0; x < n; ++x)
    for (Elem g : gens)
      if (image[r.add(x, g)] != s.add(image[x], image[g])) {
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            if (image[r.add(a, b)] != s.add(image[a], image[b]))
              return fail("additive", {{"a", r.literal(a)}, {"b", r.literal(b)}});
      }

  for (Elem g : gens)
    for (Elem h : gens)
      if (image[r.mul(g, h)] != s.mul(image[g], image[h])) {
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            if (image[r.mul(a, b)] != s.mul(image[a], image[b]))
              return fail("multiplicative", {{"a", r.literal(a)}, {"b", r.literal(b)}});
      }

  if (require_bijective && !report.injective) return fail("injective", Json::object());
  if (require_bijective && !report.surjective) return fail("surjective", Json::object());
  return report;
}

}  // namespace grl
