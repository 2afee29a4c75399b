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

#include "gradedringlab/ring.hpp"

#include <bit>

#include "gradedringlab/errors.hpp"
#include "gradedringlab/ideal.hpp"

namespace grl {

Json RingImpl::literal(Elem a) const { return a; }

Elem RingImpl::from_literal(const Json& lit) const {
  if (!lit.is_number_integer())
    throw Error(ErrorKind::kInvalidArgument,
                "expected an element index, got " + lit.dump());
  const long long v = lit.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= size())
    throw Error(ErrorKind::kInvalidArgument,
                "element index " + std::to_string(v) + " out of range for " +
                    describe());
  return static_cast<Elem>(v);
}

namespace {

// Full operation tables in front of another backend. Literals and
// descriptions are forwarded so tabulation is invisible to callers.
class TabulatedImpl final : public RingImpl {
 public:
  explicit TabulatedImpl(std::shared_ptr<const RingImpl> inner)
      : inner_(std::move(inner)), n_(inner_->size()) {
    add_.resize(n_ * n_);
    mul_.resize(n_ * n_);
    neg_.resize(n_);
    for (Elem a = 0; a < n_; ++a) {
      neg_[a] = inner_->neg(a);
      for (Elem b = 0; b < n_; ++b) {
        add_[a * n_ + b] = inner_->add(a, b);
        mul_[a * n_ + b] = inner_->mul(a, b);
      }
    }
  }

  std::size_t size() const override { return n_; }
  Elem zero() const override { return inner_->zero(); }
  Elem one() const override { return inner_->one(); }
  Elem add(Elem a, Elem b) const override { return add_[a * n_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * n_ + b]; }
  std::string backend() const override { return inner_->backend(); }
  std::string describe() const override { return inner_->describe(); }
  Json literal(Elem a) const override { return inner_->literal(a); }
  Elem from_literal(const Json& lit) const override {
    return inner_->from_literal(lit);
  }
  const RingImpl& inner() const { return *inner_; }

 private:
  std::shared_ptr<const RingImpl> inner_;
  std::size_t n_;
  std::vector<Elem> add_, mul_, neg_;
};

Classification classify(const RingImpl& r) {
  const std::size_t n = r.size();
  Classification c;
  c.nil_index.assign(n, 0);
  c.inverse.assign(n, kNoElem);
  c.idempotent.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (r.mul(x, x) == x) {
      c.idempotent[x] = 1;
      c.idempotents.push_back(x);
    }
    c.nil_index[x] = static_cast<std::uint8_t>(power_nilpotency_index(r, x));
    if (c.nil_index[x] != 0) c.nilpotents.push_back(x);
    if (auto inv = power_cycle_inverse(r, x)) {
      c.inverse[x] = *inv;
      c.units.push_back(x);
    } else if (x != r.zero()) {
      // In a finite unital ring a nonzero non-unit x has injective-failing
      // left or right multiplication, so it is a zero divisor.
      c.zero_divisors.push_back(x);
    }
  }
  return c;
}

}  // namespace

unsigned power_nilpotency_index(const RingImpl& r, Elem a) {
  // If a^m = 0 with m minimal, the right ideals a^i R (0 <= i <= m) form a
  // strictly decreasing chain of additive subgroups, so 2^m <= |R|. Walking
  // bit_width(|R|) powers therefore decides nilpotency; it never exceeds the
  // |R| steps that the plain cycle bound would allow.
  const std::size_t bound = std::max<std::size_t>(1, std::bit_width(r.size()));
  Elem p = a;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == r.zero()) return k;
    p = r.mul(p, a);
  }
  return 0;
}

std::optional<Elem> power_cycle_inverse(const RingImpl& r, Elem a) {
  if (r.size() == 1) return r.zero();
  Elem prev = r.one();  // a^(k-1)
  Elem p = a;           // a^k
  Elem checkpoint = a;
  for (std::size_t k = 1; k <= r.size() + 1; ++k) {
    if (p == r.one()) {
      if (r.mul(a, prev) != r.one() || r.mul(prev, a) != r.one())
        throw Error(ErrorKind::kRingAxiom, "power inverse is not two-sided");
      return prev;
    }
    if (p == r.zero()) return std::nullopt;
    prev = p;
    p = r.mul(p, a);
    if (p == checkpoint) return std::nullopt;
    if (std::has_single_bit(k)) checkpoint = p;
  }
  return std::nullopt;
}

Ring::Ring(std::shared_ptr<const RingImpl> impl)
    : impl_(std::move(impl)), memo_(std::make_shared<Memo>()) {}

Elem Ring::pow(Elem a, unsigned k) const {
  Elem out = one();
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

Elem Ring::times(Elem a, unsigned k) const {
  Elem out = zero();
  for (unsigned i = 0; i < k; ++i) out = add(out, a);
  return out;
}

Elem Ring::from_int(long long k) const {
  Elem u = times(one(), static_cast<unsigned>(k < 0 ? -k : k));
  return k < 0 ? neg(u) : u;
}

unsigned Ring::nilpotency_index(Elem a) const {
  if (size() < kEagerClassifyBelow) return classification().nil_index[a];
  return power_nilpotency_index(*impl_, a);
}

std::optional<Elem> Ring::inverse(Elem a) const {
  if (size() < kEagerClassifyBelow) {
    Elem inv = classification().inverse[a];
    if (inv == kNoElem) return std::nullopt;
    return inv;
  }
  return power_cycle_inverse(*impl_, a);
}

const Classification& Ring::classification() const {
  std::call_once(memo_->once, [this] { memo_->value = classify(*impl_); });
  return memo_->value;
}

const RingImpl& underlying_impl(const Ring& r) {
  if (auto* t = dynamic_cast<const TabulatedImpl*>(&r.impl())) return t->inner();
  return r.impl();
}

Ring make_ring(std::shared_ptr<const RingImpl> impl) {
  if (impl->size() <= kTabulateBelow)
    impl = std::make_shared<TabulatedImpl>(std::move(impl));
  Ring r(std::move(impl));
  if (r.size() < kEagerClassifyBelow) r.classification();
  return r;
}

std::optional<AxiomViolation> check_ring_axioms(const Ring& r,
                                                std::size_t exhaustive_below) {
  const std::size_t n = r.size();
  const Elem zero = r.zero();
  const Elem one = r.one();
  auto fail = [](std::string law, std::vector<Elem> els) {
    return std::optional<AxiomViolation>(AxiomViolation{std::move(law), std::move(els)});
  };
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, zero) != a || r.add(zero, a) != a) return fail("additive identity", {a});
    if (r.add(a, r.neg(a)) != zero) return fail("additive inverse", {a});
    if (r.mul(a, one) != a || r.mul(one, a) != a) return fail("multiplicative identity", {a});
  }
  std::vector<Elem> all(n);
  for (Elem a = 0; a < n; ++a) all[a] = a;
  const bool exhaustive = n < exhaustive_below;
  const std::vector<Elem> gens = exhaustive ? all : additive_generators(r, all);
  const std::vector<Elem>& pair_range = n <= kTabulateBelow ? all : gens;
  for (Elem a : all) {
    for (Elem b : pair_range) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", {a, b});
      for (Elem c : gens)
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return fail("additive associativity", {a, b, c});
    }
  }
  const std::vector<Elem>& left = n <= kTabulateBelow ? all : gens;
  for (Elem a : left) {
    for (Elem b : all) {
      for (Elem c : gens) {
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return fail("left distributivity", {a, b, c});
        if (r.mul(r.add(b, c), a) != r.add(r.mul(b, a), r.mul(c, a)))
          return fail("right distributivity", {b, c, a});
      }
    }
  }
  for (Elem a : gens)
    for (Elem b : gens)
      for (Elem c : gens)
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return fail("multiplicative associativity", {a, b, c});
  return std::nullopt;
}

}  // namespace grl
