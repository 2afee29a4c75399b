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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gradedringlab/element_set.hpp"
#include "json.hpp"

namespace grl {

using Json = nlohmann::ordered_json;

inline constexpr Elem kNoElem = 0xffffffffu;

// Backend of a finite unital ring. Elements are dense indices 0..size-1 and
// every operation is exact. Structured backends compute products on demand
// and expose a canonical index <-> coordinate bijection through literal().
class RingImpl {
 public:
  virtual ~RingImpl() = default;

  virtual std::size_t size() const = 0;
  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;

  // One of: table, matrix-over, upper-triangular-over, product-of,
  // quotient-by, group-ring-over, subring-of.
  virtual std::string backend() const = 0;
  virtual std::string describe() const = 0;

  // Coordinates of an element as nested JSON arrays of base literals; plain
  // integers for table rings.
  virtual Json literal(Elem a) const;
  // Inverse of literal(). Also accepts a bare index. Throws
  // Error(kInvalidArgument) on malformed or out-of-range input.
  virtual Elem from_literal(const Json& lit) const;
};

// Exhaustive element classification.
struct Classification {
  std::vector<Elem> idempotents;
  std::vector<Elem> nilpotents;
  std::vector<Elem> units;
  // Nonzero x with xy = 0 or yx = 0 for some nonzero y.
  std::vector<Elem> zero_divisors;

  // Per element: smallest k >= 1 with x^k = 0, or 0 when x is not nilpotent.
  std::vector<std::uint8_t> nil_index;
  // Per element: two-sided inverse or kNoElem.
  std::vector<Elem> inverse;
  std::vector<std::uint8_t> idempotent;
};

// Shared, immutable handle to a finite ring. Cheap to copy. Classification is
// memoized behind a once-flag, so concurrent readers observe a single result.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::shared_ptr<const RingImpl> impl);

  std::size_t size() const { return impl_->size(); }
  Elem zero() const { return impl_->zero(); }
  Elem one() const { return impl_->one(); }
  Elem add(Elem a, Elem b) const { return impl_->add(a, b); }
  Elem neg(Elem a) const { return impl_->neg(a); }
  Elem sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
  Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }
  Elem pow(Elem a, unsigned k) const;
  // k-fold sum a + ... + a, with times(a, 0) = 0.
  Elem times(Elem a, unsigned k) const;
  Elem from_int(long long k) const;

  bool is_zero_ring() const { return size() == 1; }
  bool is_idempotent(Elem a) const { return mul(a, a) == a; }
  // Smallest k with a^k = 0, or 0 when a is not nilpotent.
  unsigned nilpotency_index(Elem a) const;
  bool is_nilpotent(Elem a) const { return nilpotency_index(a) != 0; }
  std::optional<Elem> inverse(Elem a) const;
  bool is_unit(Elem a) const { return inverse(a).has_value(); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const Classification& classification() const;

  std::string backend() const { return impl_->backend(); }
  std::string describe() const { return impl_->describe(); }
  Json literal(Elem a) const { return impl_->literal(a); }
  Elem from_literal(const Json& lit) const { return impl_->from_literal(lit); }

  const RingImpl& impl() const { return *impl_; }
  const std::shared_ptr<const RingImpl>& impl_ptr() const { return impl_; }
  bool same_as(const Ring& other) const { return impl_ == other.impl_; }
  explicit operator bool() const { return impl_ != nullptr; }

 private:
  struct Memo {
    std::once_flag once;
    Classification value;
  };

  std::shared_ptr<const RingImpl> impl_;
  std::shared_ptr<Memo> memo_;
};

// Wraps a backend: tabulates small rings and classifies eagerly below 2^12
// elements. All ring constructors go through here.
Ring make_ring(std::shared_ptr<const RingImpl> impl);

// Backend behind any tabulation layer added by make_ring.
const RingImpl& underlying_impl(const Ring& r);

// Sizes at or below this are served from full operation tables.
inline constexpr std::size_t kTabulateBelow = 256;
inline constexpr std::size_t kEagerClassifyBelow = std::size_t{1} << 12;

// Two-sided inverse search by walking the power sequence of a until it hits
// one (unit) or revisits a checkpoint (not a unit).
std::optional<Elem> power_cycle_inverse(const RingImpl& r, Elem a);
unsigned power_nilpotency_index(const RingImpl& r, Elem a);

struct AxiomViolation {
  std::string law;
  std::vector<Elem> elements;
};

// Checks the unital ring axioms. Rings up to `exhaustive_below` elements are
// checked on every triple; larger ones on additive generators, which suffices
// because each law is additive in every argument once (R,+) is verified to be
// an abelian group.
std::optional<AxiomViolation> check_ring_axioms(
    const Ring& r, std::size_t exhaustive_below = 64);

}  // namespace grl
