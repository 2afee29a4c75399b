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

#pragma once

#include <functional>
#include <string>

#include "gradedringlab/ring.hpp"

namespace grl {

using ElementMap = std::function<Elem(Elem)>;

struct HomReport {
  bool ok = true;
  // Empty when ok; otherwise one of additive, multiplicative, unital,
  // injective, surjective, degree.
  std::string violation;
  Json witness;
  bool injective = false;
  bool surjective = false;
};

// Verifies that f : R -> S is a unital ring homomorphism. Additivity is
// checked against every additive generator and multiplicativity on generator
// pairs; a failure is re-located by exhaustive search so the witness is the
// first violating pair in index order.
HomReport verify_ring_hom(const Ring& r, const Ring& s, const ElementMap& f,
                          bool require_bijective = false);

}  // namespace grl
