// Copyright 2026 The lozenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lozenge/error.hpp"

namespace lozenge {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInfiniteIndex: return "InfiniteIndex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::kNotFaithful: return "NotFaithful";
    case ErrorCode::kInvalidType: return "InvalidType";
    case ErrorCode::kBadExponentSum: return "BadExponentSum";
    case ErrorCode::kInvalidTiling: return "InvalidTiling";
    case ErrorCode::kInvalidCut: return "InvalidCut";
    case ErrorCode::kNotInLattice: return "NotInLattice";
    case ErrorCode::kNotFlippable: return "NotFlippable";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kNonPositiveType: return "NonPositiveType";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace lozenge
