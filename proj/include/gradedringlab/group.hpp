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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grl {

// Group elements and groupoid labels are dense indices 0..order-1.
using Label = int;

// Finite group given by a full operation table. The constructor checks the
// group axioms exhaustively and throws Error(kInvalidArgument) on failure.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<Label>> table,
              std::vector<std::string> names);

  int order() const { return static_cast<int>(table_.size()); }
  Label op(Label a, Label b) const { return table_[a][b]; }
  Label identity() const { return identity_; }
  Label inverse(Label a) const { return inverse_[a]; }
  Label power(Label a, int k) const;
  int element_order(Label a) const;
  bool is_abelian() const;

  const std::string& name(Label a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Label> find(std::string_view name) const;

  bool is_subgroup(std::span<const Label> h) const;
  bool is_normal_subgroup(std::span<const Label> h) const;
  bool is_two_group() const;
  // All normal subgroups, each as a sorted label list, ordered by size then
  // lexicographically.
  std::vector<std::vector<Label>> normal_subgroups() const;

  const std::vector<std::vector<Label>>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<Label>> table_;
  std::vector<std::string> names_;
  std::vector<Label> inverse_;
  Label identity_ = 0;
};

// Cyclic group of order n with generator 1; elements named e, g, g2, g3, ...
FiniteGroup cyclic_group(int n);

// Cyclic group of order 2r+1 whose elements are named -r..r, used as a
// finite window onto a Z-grading whose support stays well inside the window.
FiniteGroup integer_window(int radius);

struct QuotientGroup {
  FiniteGroup group;
  // coset_of[g] is the coset label of g in `group`.
  std::vector<Label> coset_of;
  // Smallest label of each coset.
  std::vector<Label> representative;
};

// G/H for a normal subgroup H. Throws Error(kNotNormal) when H is not normal
// and Error(kInvalidArgument) when H is not a subgroup.
QuotientGroup quotient_group(const FiniteGroup& g, std::span<const Label> h);

// Set with a partial binary operation; undefined products are nullopt.
class PartialGroupoid {
 public:
  PartialGroupoid(std::vector<std::vector<std::optional<Label>>> table,
                  std::vector<std::string> names);
  static PartialGroupoid from_group(const FiniteGroup& g);

  int order() const { return static_cast<int>(table_.size()); }
  std::optional<Label> op(Label a, Label b) const { return table_[a][b]; }
  bool defined(Label a, Label b) const { return table_[a][b].has_value(); }

  const std::string& name(Label a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Label> find(std::string_view name) const;

  // st = st' implies t = t' and ts = t's implies t = t', over defined products.
  bool is_cancellative() const;
  std::vector<Label> idempotents() const;

  const std::vector<std::vector<std::optional<Label>>>& table() const {
    return table_;
  }

 private:
  std::vector<std::vector<std::optional<Label>>> table_;
  std::vector<std::string> names_;
};

// Matrix-unit groupoid on n objects: labels e11..enn with eij*ekl = eil
// defined exactly when j = k.
PartialGroupoid brandt_groupoid(int n);

}  // namespace grl
