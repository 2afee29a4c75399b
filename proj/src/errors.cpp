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

#include "gradedringlab/errors.hpp"

namespace grl {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotSubgroup: return "NotSubgroup";
    case ErrorKind::kNotDirectSum: return "NotDirectSum";
    case ErrorKind::kProductLeak: return "ProductLeak";
    case ErrorKind::kIdentityNotInE: return "IdentityNotInE";
    case ErrorKind::kConditionTwo: return "UndefinedProductNonzero";
    case ErrorKind::kNotHomogeneous: return "NotHomogeneous";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kNotDegreeE: return "NotDegreeE";
    case ErrorKind::kNotIdempotentModI: return "NotIdempotentModI";
    case ErrorKind::kNoDecomposition: return "NoDecomposition";
    case ErrorKind::kGroupMismatch: return "GroupMismatch";
    case ErrorKind::kAssociativityFailure: return "AssociativityFailure";
    case ErrorKind::kRingAxiom: return "RingAxiomViolation";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kVerification: return "VerificationFailure";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace grl
