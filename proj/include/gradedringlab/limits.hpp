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
#include <string>

namespace grl {

// Enumeration caps. Every exhaustive claim made by the library holds only for
// inputs under these bounds; exceeding one raises CapExceeded.
struct Limits {
  std::size_t max_elements = std::size_t{1} << 20;
  std::size_t max_homogeneous = std::size_t{1} << 10;
  std::size_t max_ideals = std::size_t{1} << 12;
  std::size_t max_search = 16;
};

// Process-wide caps. Set once before starting work; reads are unsynchronized.
const Limits& limits();
void set_limits(const Limits& l);

// RAII override used by tests and the CLI.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

// Multiplies `base` by itself `exp` times, throwing CapExceeded as soon as the
// running product passes `cap`. `what` names the object for the message.
std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap,
                          const std::string& what);

void require_under_cap(std::size_t size, std::size_t cap,
                       const std::string& what);

}  // namespace grl
