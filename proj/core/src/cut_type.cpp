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

#include "lozenge/cut_type.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "lozenge/error.hpp"

namespace lozenge {

std::int64_t CutType::min() const { return std::min({g1, g2, g3}); }

bool is_valid_type(const PeriodicityMatrix& b, const CutType& gamma) {
  const std::int64_t n = b.n();
  if (gamma.g1 < 0 || gamma.g2 < 0 || gamma.g3 < 0 || gamma.n() != n) return false;
  const std::int64_t first = gamma.g1 * b.a1() + gamma.g2 * b.a2();
  const std::int64_t second = gamma.g1 * b.b1() + gamma.g2 * b.b2();
  return first % n == 0 && second % n == 0;
}

std::vector<CutType> valid_types(const PeriodicityMatrix& b, bool include_boundary) {
  const std::int64_t n = b.n();
  std::vector<CutType> out;
  for (std::int64_t g1 = 0; g1 <= n; ++g1) {
    // First condition only involves g1 since a2 = 0.
    if ((g1 * b.a1()) % n != 0) continue;
    for (std::int64_t g2 = 0; g1 + g2 <= n; ++g2) {
      const CutType gamma{g1, g2, n - g1 - g2};
      if (!include_boundary && !gamma.positive()) continue;
      if ((g1 * b.b1() + g2 * b.b2()) % n == 0) out.push_back(gamma);
    }
  }
  return out;
}

PlanePoint simplex_projection(const CutType& gamma) {
  const double g1 = static_cast<double>(gamma.g1);
  const double g2 = static_cast<double>(gamma.g2);
  return {g2 + 0.5 * g1, 0.5 * std::sqrt(3.0) * g1};
}

LatticePoint simplex_lattice_point(const CutType& gamma) { return {gamma.g2, -gamma.g1}; }

CutType parse_cut_type(std::string_view text) {
  std::int64_t v[3] = {0, 0, 0};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  auto fail = [&] {
    throw LozengeError(ErrorCode::kParseError,
                       "type '" + std::string(text) + "' is not of the form g1,g2,g3");
  };
  for (int i = 0; i < 3; ++i) {
    while (p < end && *p == ' ') ++p;
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc() || next == p) fail();
    p = next;
    while (p < end && *p == ' ') ++p;
    if (i < 2) {
      if (p == end || *p != ',') fail();
      ++p;
    }
  }
  if (p != end) fail();
  if (v[0] < 0 || v[1] < 0 || v[2] < 0) {
    throw LozengeError(ErrorCode::kInvalidType, "type '" + std::string(text) + "' has a negative entry");
  }
  return {v[0], v[1], v[2]};
}

std::string format_cut_type(const CutType& gamma) {
  return std::to_string(gamma.g1) + "," + std::to_string(gamma.g2) + "," + std::to_string(gamma.g3);
}

}  // namespace lozenge
