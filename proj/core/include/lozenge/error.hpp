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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lozenge {

enum class ErrorCode {
  kSingularMatrix,
  kOutOfRange,
  kInfiniteIndex,
  kParseError,
  kDeterminantNotOne,
  kNotFaithful,
  kInvalidType,
  kBadExponentSum,
  kInvalidTiling,
  kInvalidCut,
  kNotInLattice,
  kNotFlippable,
  kTypeMismatch,
  kNonPositiveType,
  kBoundExceeded,
  kSchemaError,
};

std::string_view error_name(ErrorCode code);

/// Every domain failure in the library is reported as a LozengeError whose
/// code names the failing case; the message carries the specifics.
class LozengeError : public std::runtime_error {
 public:
  LozengeError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lozenge
