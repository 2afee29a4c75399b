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

#include "gradedringlab/element_set.hpp"

#include <algorithm>

namespace grl {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members)
    : ElementSet(universe) {
  for (Elem x : members) insert(x);
}

bool ElementSet::insert(Elem x) {
  std::uint64_t& word = bits_[x >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (word & mask) return false;
  word |= mask;
  members_.push_back(x);
  return true;
}

std::vector<Elem> ElementSet::sorted() const {
  std::vector<Elem> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe_);
  for (Elem x : sorted()) {
    if (other.contains(x)) out.insert(x);
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : bits_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grl
