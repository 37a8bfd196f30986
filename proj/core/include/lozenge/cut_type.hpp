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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lozenge/lattice.hpp"

namespace lozenge {

/// Letter counts (gamma1, gamma2, gamma3) of a periodic tiling, equivalently
/// the number of removed u-, v- and w-arrows of a cut. Compared as plain
/// ordered triples; no coordinate symmetry is implied.
struct CutType {
  std::int64_t g1 = 0;
  std::int64_t g2 = 0;
  std::int64_t g3 = 0;

  std::int64_t n() const { return g1 + g2 + g3; }
  bool positive() const { return g1 > 0 && g2 > 0 && g3 > 0; }
  std::int64_t min() const;

  friend auto operator<=>(const CutType&, const CutType&) = default;
};

/// All triples with entries >= 0 summing to n that satisfy
/// (g1, g2) * B == 0 (mod n) componentwise, sorted lexicographically.
/// Without include_boundary only the all-positive triples are kept.
std::vector<CutType> valid_types(const PeriodicityMatrix& b, bool include_boundary);

bool is_valid_type(const PeriodicityMatrix& b, const CutType& gamma);

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// gamma2*u - gamma1*v in the real plane with u = (1, 0) and
/// v = -(1/2, sqrt(3)/2).
PlanePoint simplex_projection(const CutType& gamma);

/// The same point in (u, v) coordinates: (gamma2, -gamma1). A sum-n triple
/// is a valid type exactly when this point lies in L1.
LatticePoint simplex_lattice_point(const CutType& gamma);

/// Parses "g1,g2,g3".
CutType parse_cut_type(std::string_view text);
std::string format_cut_type(const CutType& gamma);

}  // namespace lozenge
