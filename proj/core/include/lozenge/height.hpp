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

#include <cstdint>
#include <vector>

#include "lozenge/cut_type.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

/// Height change along the arrow p -> p + d: +1 when the arrow is a tile
/// edge, -2 when it is removed.
int step_increment(const Tiling& t, LatticePoint p, Direction d);

/// Height function of a periodic tiling, normalised by h(0) = 0.
///
/// Stores h on the coset representatives plus its values on the two
/// columns of B. Since h(x + y) = h(x) + h(y) for y in L1, that determines
/// h everywhere. Both parts are computed by walking arrows of the tiling,
/// so the closed form in lattice_height() is a checkable consequence rather
/// than an input.
class HeightFunction {
 public:
  /// Throws kInvalidTiling.
  explicit HeightFunction(const Tiling& t);

  const Tiling& tiling() const { return tiling_; }
  std::int64_t base(std::size_t index) const { return base_[index]; }
  const std::vector<std::int64_t>& base_values() const { return base_; }

  /// h restricted to L1; y must lie in L1.
  std::int64_t linear_part(LatticePoint y) const;

  std::int64_t at(LatticePoint p) const;

 private:
  Tiling tiling_;
  std::int64_t column1_height_ = 0;
  std::int64_t column2_height_ = 0;
  std::vector<std::int64_t> base_;
};

inline std::int64_t height_at(const HeightFunction& h, LatticePoint p) { return h.at(p); }

/// y1 + y2 - 3 (g1*y1 + g2*y2) / n for y in L1. Throws kNotInLattice, or
/// kInvalidType if gamma is not a type of B.
std::int64_t lattice_height(const PeriodicityMatrix& b, const CutType& gamma, LatticePoint y);

}  // namespace lozenge
