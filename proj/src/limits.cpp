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

#include "gradedringlab/limits.hpp"

#include "gradedringlab/errors.hpp"

namespace grl {
namespace {

Limits& mutable_limits() {
  static Limits instance;
  return instance;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

ScopedLimits::ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }

ScopedLimits::~ScopedLimits() { set_limits(saved_); }

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap,
                          const std::string& what) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) {
      throw CapExceeded(what + " exceeds the enumeration cap of " +
                        std::to_string(cap) + " elements");
    }
    result *= base;
  }
  require_under_cap(result, cap, what);
  return result;
}

void require_under_cap(std::size_t size, std::size_t cap,
                       const std::string& what) {
  if (size > cap) {
    throw CapExceeded(what + " has " + std::to_string(size) +
                      " elements, over the cap of " + std::to_string(cap));
  }
}

}  // namespace grl
