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

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace grl {

enum class ErrorKind {
  kCapExceeded,
  kNotNormal,
  kNotSubgroup,
  kNotDirectSum,
  kProductLeak,
  kIdentityNotInE,
  kConditionTwo,
  kNotHomogeneous,
  kNotIdempotent,
  kNotDegreeE,
  kNotIdempotentModI,
  kNoDecomposition,
  kGroupMismatch,
  kAssociativityFailure,
  kRingAxiom,
  kInvalidArgument,
  kVerification,
  kParse,
};

const char* error_kind_name(ErrorKind kind);

// Base of every error raised by the library. `witness()` carries the first
// offending data found in canonical index order, or null.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        nlohmann::ordered_json witness = nullptr)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::ordered_json& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  nlohmann::ordered_json witness_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what)
      : Error(ErrorKind::kCapExceeded, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace grl
