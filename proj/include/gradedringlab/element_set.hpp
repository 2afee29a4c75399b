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
#include <span>
#include <vector>

namespace grl {

using Elem = std::uint32_t;

// Set of ring elements over a fixed universe 0..universe-1. Keeps a bitmap
// for membership and an insertion-ordered member list; `sorted()` gives the
// canonical order used in reports and witnesses.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Elem x) const {
    return x < universe_ && ((bits_[x >> 6] >> (x & 63)) & 1u) != 0;
  }
  // Returns true when x was not already present.
  bool insert(Elem x);

  const std::vector<Elem>& members() const { return members_; }
  std::vector<Elem> sorted() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  std::size_t hash() const;
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> members_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grl
