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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

/// Flips applied in order to a start tiling; each step is a coset index
/// that must be a source or sink at the time it is applied.
struct FlipSequence {
  Tiling start;
  std::vector<std::size_t> steps;

  /// Replays the steps. Throws kNotFlippable if a step is not mutable.
  Tiling apply() const;
};

/// Sum of |(h_a - h_b) / 3| over the coset representatives. Both tilings
/// must share matrix and type.
std::int64_t height_distance(const Tiling& a, const Tiling& b);

/// Explicit flip sequence taking `from` to `to` for tilings of the same
/// all-positive type. The sequence length is at most height_distance().
/// Throws kTypeMismatch, kNonPositiveType or kInvalidTiling.
FlipSequence flip_connect(const Tiling& from, const Tiling& to);

/// All tilings reachable from t by flips, sorted.
std::vector<Tiling> flip_class(const Tiling& t);

}  // namespace lozenge
