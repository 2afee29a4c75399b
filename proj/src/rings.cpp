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

#include "gradedringlab/rings.hpp"

#include <algorithm>
#include <array>

#include "gradedringlab/errors.hpp"
#include "gradedringlab/limits.hpp"

namespace grl {
namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::kInvalidArgument, what);
}

Elem index_literal(const RingImpl& r, const Json& lit) {
  return r.RingImpl::from_literal(lit);
}

class ZmodImpl final : public RingImpl {
 public:
  explicit ZmodImpl(unsigned n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return n_ == 1 ? 0 : 1; }
  Elem add(Elem a, Elem b) const override { return (a + b) % n_; }
  Elem neg(Elem a) const override { return a == 0 ? 0 : n_ - a; }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n_);
  }
  std::string backend() const override { return "table"; }
  std::string describe() const override { return "Z/" + std::to_string(n_); }

 private:
  unsigned n_;
};

class BooleanImpl final : public RingImpl {
 public:
  explicit BooleanImpl(unsigned k) : k_(k) {}
  std::size_t size() const override { return std::size_t{1} << k_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return static_cast<Elem>(size() - 1); }
  Elem add(Elem a, Elem b) const override { return a ^ b; }
  Elem neg(Elem a) const override { return a; }
  Elem mul(Elem a, Elem b) const override { return a & b; }
  std::string backend() const override { return "table"; }
  std::string describe() const override {
    return k_ == 1 ? "F2" : "F2^" + std::to_string(k_);
  }
  Json literal(Elem a) const override {
    if (k_ == 1) return a;
    Json out = Json::array();
    for (unsigned i = 0; i < k_; ++i) out.push_back((a >> (k_ - 1 - i)) & 1u);
    return out;
  }
  Elem from_literal(const Json& lit) const override {
    if (!lit.is_array()) return index_literal(*this, lit);
    require(lit.size() == k_, "Boolean literal needs " + std::to_string(k_) + " bits");
    Elem a = 0;
    for (const auto& bit : lit) {
      require(bit.is_number_integer() && (bit == 0 || bit == 1),
              "Boolean literal entries must be 0 or 1");
      a = (a << 1) | bit.get<Elem>();
    }
    return a;
  }

 private:
  unsigned k_;
};

class ZeroImpl final : public RingImpl {
 public:
  std::size_t size() const override { return 1; }
  Elem zero() const override { return 0; }
  Elem one() const override { return 0; }
  Elem add(Elem, Elem) const override { return 0; }
  Elem neg(Elem) const override { return 0; }
  Elem mul(Elem, Elem) const override { return 0; }
  std::string backend() const override { return "table"; }
  std::string describe() const override { return "0"; }
};

constexpr std::size_t kMaxCoords = 36;
using Coords = std::array<Elem, kMaxCoords>;

// Mixed-radix index with the first coordinate most significant.
class CoordinateCodec {
 public:
  CoordinateCodec() = default;
  explicit CoordinateCodec(std::vector<std::size_t> radices)
      : radices_(std::move(radices)) {
    require(radices_.size() <= kMaxCoords, "too many coordinates");
  }
  std::size_t count() const { return radices_.size(); }
  std::size_t radix(std::size_t i) const { return radices_[i]; }
  void decode(Elem a, Coords& out) const {
    for (std::size_t i = radices_.size(); i-- > 0;) {
      out[i] = static_cast<Elem>(a % radices_[i]);
      a /= static_cast<Elem>(radices_[i]);
    }
  }
  Elem encode(const Coords& c) const {
    std::size_t a = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) a = a * radices_[i] + c[i];
    return static_cast<Elem>(a);
  }
  Elem encode(std::span<const Elem> c) const {
    std::size_t a = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) a = a * radices_[i] + c[i];
    return static_cast<Elem>(a);
  }

 private:
  std::vector<std::size_t> radices_;
};

class TruncPolyImpl final : public RingImpl {
 public:
  TruncPolyImpl(Ring base, unsigned k, std::size_t size)
      : base_(std::move(base)), k_(k), size_(size),
        codec_(std::vector<std::size_t>(k, base_.size())) {}
  std::size_t size() const override { return size_; }
  Elem zero() const override { return 0; }
  Elem one() const override {
    Coords c{};
    c.fill(base_.zero());
    c[0] = base_.one();
    return codec_.encode(c);
  }
  Elem add(Elem a, Elem b) const override {
    Coords x, y;
    codec_.decode(a, x);
    codec_.decode(b, y);
    for (unsigned i = 0; i < k_; ++i) x[i] = base_.add(x[i], y[i]);
    return codec_.encode(x);
  }
  Elem neg(Elem a) const override {
    Coords x;
    codec_.decode(a, x);
    for (unsigned i = 0; i < k_; ++i) x[i] = base_.neg(x[i]);
    return codec_.encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    Coords x, y, z;
    codec_.decode(a, x);
    codec_.decode(b, y);
    z.fill(base_.zero());
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; i + j < k_; ++j)
        z[i + j] = base_.add(z[i + j], base_.mul(x[i], y[j]));
    return codec_.encode(z);
  }
  std::string backend() const override { return "table"; }
  std::string describe() const override {
    return base_.describe() + "[x]/(x^" + std::to_string(k_) + ")";
  }
  Json literal(Elem a) const override {
    Coords x;
    codec_.decode(a, x);
    Json out = Json::array();
    for (unsigned i = 0; i < k_; ++i) out.push_back(base_.literal(x[i]));
    return out;
  }
  Elem from_literal(const Json& lit) const override {
    if (!lit.is_array()) return index_literal(*this, lit);
    require(lit.size() == k_, "polynomial literal needs " + std::to_string(k_) + " coefficients");
    Coords x{};
    for (unsigned i = 0; i < k_; ++i) x[i] = base_.from_literal(lit[i]);
    return codec_.encode(x);
  }

 private:
  Ring base_;
  unsigned k_;
  std::size_t size_;
  CoordinateCodec codec_;
};

class MatrixImpl final : public RingImpl {
 public:
  MatrixImpl(Ring base, unsigned n, bool triangular, std::size_t size)
      : base_(std::move(base)), n_(n), triangular_(triangular), size_(size) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = triangular ? i : 0; j < n; ++j) positions_.push_back(i * n + j);
    codec_ = CoordinateCodec(std::vector<std::size_t>(positions_.size(), base_.size()));
  }

  std::size_t size() const override { return size_; }
  Elem zero() const override { return 0; }
  Elem one() const override {
    Coords full;
    full.fill(base_.zero());
    for (unsigned i = 0; i < n_; ++i) full[i * n_ + i] = base_.one();
    return pack(full);
  }
  Elem add(Elem a, Elem b) const override {
    Coords x, y;
    codec_.decode(a, x);
    codec_.decode(b, y);
    for (std::size_t i = 0; i < positions_.size(); ++i) x[i] = base_.add(x[i], y[i]);
    return codec_.encode(x);
  }
  Elem neg(Elem a) const override {
    Coords x;
    codec_.decode(a, x);
    for (std::size_t i = 0; i < positions_.size(); ++i) x[i] = base_.neg(x[i]);
    return codec_.encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    Coords x, y, z;
    unpack(a, x);
    unpack(b, y);
    const Elem zero = base_.zero();
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) {
        Elem acc = zero;
        for (unsigned k = 0; k < n_; ++k) {
          const Elem u = x[i * n_ + k];
          const Elem v = y[k * n_ + j];
          if (u != zero && v != zero) acc = base_.add(acc, base_.mul(u, v));
        }
        z[i * n_ + j] = acc;
      }
    }
    return pack(z);
  }
  std::string backend() const override {
    return triangular_ ? "upper-triangular-over" : "matrix-over";
  }
  std::string describe() const override {
    return std::string(triangular_ ? "T" : "M") + std::to_string(n_) + "(" +
           base_.describe() + ")";
  }
  Json literal(Elem a) const override {
    Coords full;
    unpack(a, full);
    Json rows = Json::array();
    for (unsigned i = 0; i < n_; ++i) {
      Json row = Json::array();
      for (unsigned j = 0; j < n_; ++j) row.push_back(base_.literal(full[i * n_ + j]));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  Elem from_literal(const Json& lit) const override {
    if (!lit.is_array()) return index_literal(*this, lit);
    Coords full;
    full.fill(base_.zero());
    if (lit.size() == n_ && lit[0].is_array() && lit[0].size() == n_) {
      for (unsigned i = 0; i < n_; ++i) {
        require(lit[i].is_array() && lit[i].size() == n_, "matrix literal rows must have " + std::to_string(n_) + " entries");
        for (unsigned j = 0; j < n_; ++j) full[i * n_ + j] = base_.from_literal(lit[i][j]);
      }
    } else if (lit.size() == n_ * n_) {
      for (unsigned k = 0; k < n_ * n_; ++k) full[k] = base_.from_literal(lit[k]);
    } else {
      throw Error(ErrorKind::kInvalidArgument,
                  "matrix literal must be " + std::to_string(n_) + " rows: " + lit.dump());
    }
    if (triangular_) {
      for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < i; ++j)
          require(full[i * n_ + j] == base_.zero(),
                  "triangular literal has a nonzero entry below the diagonal");
    }
    return pack(full);
  }

  const Ring& base() const { return base_; }
  unsigned n() const { return n_; }
  bool triangular() const { return triangular_; }

  void unpack(Elem a, Coords& full) const {
    Coords x;
    codec_.decode(a, x);
    full.fill(base_.zero());
    for (std::size_t i = 0; i < positions_.size(); ++i) full[positions_[i]] = x[i];
  }
  Elem pack(const Coords& full) const {
    Coords x;
    for (std::size_t i = 0; i < positions_.size(); ++i) x[i] = full[positions_[i]];
    return codec_.encode(x);
  }

 private:
  Ring base_;
  unsigned n_;
  bool triangular_;
  std::size_t size_;
  std::vector<unsigned> positions_;
  CoordinateCodec codec_;
};

class ProductImpl final : public RingImpl {
 public:
  ProductImpl(std::vector<Ring> factors, std::size_t size)
      : factors_(std::move(factors)), size_(size) {
    std::vector<std::size_t> radices;
    for (const auto& f : factors_) radices.push_back(f.size());
    codec_ = CoordinateCodec(std::move(radices));
  }
  std::size_t size() const override { return size_; }
  Elem zero() const override {
    Coords c;
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].zero();
    return codec_.encode(c);
  }
  Elem one() const override {
    Coords c;
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].one();
    return codec_.encode(c);
  }
  Elem add(Elem a, Elem b) const override { return apply(a, b, [](const Ring& r, Elem x, Elem y) { return r.add(x, y); }); }
  Elem mul(Elem a, Elem b) const override { return apply(a, b, [](const Ring& r, Elem x, Elem y) { return r.mul(x, y); }); }
  Elem neg(Elem a) const override {
    Coords x;
    codec_.decode(a, x);
    for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = factors_[i].neg(x[i]);
    return codec_.encode(x);
  }
  std::string backend() const override { return "product-of"; }
  std::string describe() const override {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out += (i ? " x " : "") + factors_[i].describe();
    return "(" + out + ")";
  }
  Json literal(Elem a) const override {
    Coords x;
    codec_.decode(a, x);
    Json out = Json::array();
    for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i].literal(x[i]));
    return out;
  }
  Elem from_literal(const Json& lit) const override {
    if (!lit.is_array()) return index_literal(*this, lit);
    require(lit.size() == factors_.size(), "product literal needs one entry per factor");
    Coords x;
    for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = factors_[i].from_literal(lit[i]);
    return codec_.encode(x);
  }

  const std::vector<Ring>& factors() const { return factors_; }
  std::vector<Elem> coordinates(Elem a) const {
    Coords x;
    codec_.decode(a, x);
    return {x.begin(), x.begin() + factors_.size()};
  }
  Elem encode(std::span<const Elem> c) const { return codec_.encode(c); }

 private:
  template <typename Op>
  Elem apply(Elem a, Elem b, Op op) const {
    Coords x, y;
    codec_.decode(a, x);
    codec_.decode(b, y);
    for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = op(factors_[i], x[i], y[i]);
    return codec_.encode(x);
  }

  std::vector<Ring> factors_;
  std::size_t size_;
  CoordinateCodec codec_;
};

class SubsetImpl final : public RingImpl {
 public:
  SubsetImpl(Ring parent, std::vector<Elem> members, Elem one, std::string description)
      : parent_(std::move(parent)), members_(std::move(members)),
        local_(parent_.size(), kNoElem), description_(std::move(description)) {
    for (Elem i = 0; i < members_.size(); ++i) local_[members_[i]] = i;
    require(local_[parent_.zero()] != kNoElem, "subset ring must contain zero");
    require(local_[one] != kNoElem, "subset ring must contain its identity");
    one_ = local_[one];
    zero_ = local_[parent_.zero()];
    for (Elem a : members_) {
      require(local_[parent_.neg(a)] != kNoElem, "subset is not closed under negation");
      require(parent_.mul(one, a) == a && parent_.mul(a, one) == a,
              "given identity does not act as identity on the subset");
      for (Elem b : members_) {
        require(local_[parent_.add(a, b)] != kNoElem, "subset is not closed under addition");
        require(local_[parent_.mul(a, b)] != kNoElem, "subset is not closed under multiplication");
      }
    }
  }
  std::size_t size() const override { return members_.size(); }
  Elem zero() const override { return zero_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return local_[parent_.add(members_[a], members_[b])]; }
  Elem neg(Elem a) const override { return local_[parent_.neg(members_[a])]; }
  Elem mul(Elem a, Elem b) const override { return local_[parent_.mul(members_[a], members_[b])]; }
  std::string backend() const override { return "subring-of"; }
  std::string describe() const override { return description_; }
  Json literal(Elem a) const override { return parent_.literal(members_[a]); }
  Elem from_literal(const Json& lit) const override {
    const Elem p = parent_.from_literal(lit);
    require(local_[p] != kNoElem, "element " + lit.dump() + " is not in " + description_);
    return local_[p];
  }

  const Ring& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }

 private:
  Ring parent_;
  std::vector<Elem> members_;
  std::vector<Elem> local_;
  Elem zero_ = 0, one_ = 0;
  std::string description_;
};

}  // namespace

Ring ring_zmod(unsigned n) {
  require(n >= 1, "Z/n needs n >= 1");
  require_under_cap(n, limits().max_elements, "Z/" + std::to_string(n));
  return make_ring(std::make_shared<ZmodImpl>(n));
}

Ring ring_boolean(unsigned k) {
  require(k >= 1, "Boolean ring needs k >= 1");
  checked_power(2, k, limits().max_elements, "F2^" + std::to_string(k));
  return make_ring(std::make_shared<BooleanImpl>(k));
}

Ring zero_ring() { return make_ring(std::make_shared<ZeroImpl>()); }

Ring truncated_polynomial_ring(const Ring& base, unsigned k) {
  require(k >= 1 && k <= kMaxCoords, "truncation degree out of range");
  const std::size_t size = checked_power(base.size(), k, limits().max_elements,
                                         base.describe() + "[x]/(x^" + std::to_string(k) + ")");
  return make_ring(std::make_shared<TruncPolyImpl>(base, k, size));
}

Ring matrix_ring(const Ring& base, unsigned n) {
  require(n >= 1 && n * n <= kMaxCoords, "matrix size out of range");
  const std::size_t size = checked_power(base.size(), n * n, limits().max_elements,
                                         "M" + std::to_string(n) + "(" + base.describe() + ")");
  return make_ring(std::make_shared<MatrixImpl>(base, n, false, size));
}

Ring triangular_ring(const Ring& base, unsigned n) {
  require(n >= 1 && n * n <= kMaxCoords, "matrix size out of range");
  const std::size_t size = checked_power(base.size(), n * (n + 1) / 2, limits().max_elements,
                                         "T" + std::to_string(n) + "(" + base.describe() + ")");
  return make_ring(std::make_shared<MatrixImpl>(base, n, true, size));
}

Ring product_ring(std::span<const Ring> factors) {
  require(!factors.empty() && factors.size() <= kMaxCoords, "product needs 1..36 factors");
  std::size_t size = 1;
  for (const auto& f : factors) {
    if (size > limits().max_elements / f.size())
      throw CapExceeded("product ring exceeds the enumeration cap");
    size *= f.size();
  }
  require_under_cap(size, limits().max_elements, "product ring");
  return make_ring(std::make_shared<ProductImpl>(
      std::vector<Ring>(factors.begin(), factors.end()), size));
}

Ring product_ring(const Ring& a, const Ring& b) {
  const Ring both[] = {a, b};
  return product_ring(both);
}

Ring subset_ring(const Ring& parent, std::span<const Elem> members, Elem one,
                 std::string description) {
  std::vector<Elem> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return make_ring(std::make_shared<SubsetImpl>(parent, std::move(sorted), one,
                                                std::move(description)));
}

std::optional<MatrixShape> matrix_shape(const Ring& r) {
  if (auto* m = dynamic_cast<const MatrixImpl*>(&underlying_impl(r)))
    return MatrixShape{m->base(), m->n(), m->triangular()};
  return std::nullopt;
}

std::vector<Elem> matrix_entries(const Ring& r, Elem a) {
  auto* m = dynamic_cast<const MatrixImpl*>(&underlying_impl(r));
  require(m != nullptr, "not a matrix ring");
  Coords full;
  m->unpack(a, full);
  return {full.begin(), full.begin() + m->n() * m->n()};
}

Elem matrix_from_entries(const Ring& r, std::span<const Elem> entries) {
  auto* m = dynamic_cast<const MatrixImpl*>(&underlying_impl(r));
  require(m != nullptr, "not a matrix ring");
  require(entries.size() == m->n() * m->n(), "wrong number of matrix entries");
  Coords full;
  std::copy(entries.begin(), entries.end(), full.begin());
  return m->pack(full);
}

std::vector<Ring> product_factors(const Ring& r) {
  auto* p = dynamic_cast<const ProductImpl*>(&underlying_impl(r));
  require(p != nullptr, "not a product ring");
  return p->factors();
}

std::vector<Elem> product_coordinates(const Ring& r, Elem a) {
  auto* p = dynamic_cast<const ProductImpl*>(&underlying_impl(r));
  require(p != nullptr, "not a product ring");
  return p->coordinates(a);
}

Elem product_from_coordinates(const Ring& r, std::span<const Elem> coords) {
  auto* p = dynamic_cast<const ProductImpl*>(&underlying_impl(r));
  require(p != nullptr, "not a product ring");
  require(coords.size() == p->factors().size(), "wrong number of coordinates");
  return p->encode(coords);
}

std::optional<SubsetInfo> subset_info(const Ring& r) {
  if (auto* s = dynamic_cast<const SubsetImpl*>(&underlying_impl(r)))
    return SubsetInfo{s->parent(), s->members()};
  return std::nullopt;
}

}  // namespace grl
