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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lozenge/lattice.hpp"

namespace lozenge {

/// diag(z^e1, z^e2, z^e3) for a primitive order-th root of unity z, written
/// 1/order(e1,e2,e3). Exponents are kept reduced into [0, order).
struct DiagonalGenerator {
  std::int64_t order = 1;
  std::array<std::int64_t, 3> exponents{0, 0, 0};

  friend bool operator==(const DiagonalGenerator&, const DiagonalGenerator&) = default;
};

/// A finite abelian subgroup of diagonal SL3 together with its three
/// coordinate characters rho1, rho2, rho3 and the periodicity matrix of the
/// relations between rho1 and rho2.
class GroupEmbedding {
 public:
  /// Closes the generated subgroup and validates it. Throws
  /// kDeterminantNotOne, kNotFaithful or kOutOfRange.
  static GroupEmbedding from_generators(std::vector<DiagonalGenerator> generators);

  const std::vector<DiagonalGenerator>& generators() const { return generators_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const PeriodicityMatrix& matrix() const { return matrix_; }

  /// Group elements as exponent triples over the common denominator
  /// exponent_modulus(), sorted.
  const std::vector<std::array<std::int64_t, 3>>& elements() const { return elements_; }
  std::int64_t exponent_modulus() const { return modulus_; }

  /// True when the character rho_j (j in {0,1,2}) is trivial on G.
  bool character_trivial(int j) const;

 private:
  GroupEmbedding(std::vector<DiagonalGenerator> generators,
                 std::vector<std::array<std::int64_t, 3>> elements, std::int64_t modulus,
                 PeriodicityMatrix matrix)
      : generators_(std::move(generators)),
        elements_(std::move(elements)),
        modulus_(modulus),
        matrix_(matrix) {}

  std::vector<DiagonalGenerator> generators_;
  std::vector<std::array<std::int64_t, 3>> elements_;
  std::int64_t modulus_;
  PeriodicityMatrix matrix_;
};

/// Grammar: gen (";" gen)* with gen := "1/" INT "(" INT "," INT "," INT ")";
/// whitespace is ignored.
GroupEmbedding parse_group(std::string_view spec);
std::string format_group(const GroupEmbedding& g);

bool has_trivial_character(const GroupEmbedding& g);

/// G is the Klein four-group: order 4 and every element squares to 1.
bool is_klein_four(const GroupEmbedding& g);

/// Group-theoretic criterion: not the Klein four-group and no trivial
/// coordinate character.
bool admits_cut_group_form(const GroupEmbedding& g);

/// Lattice criterion: some all-positive triple satisfies the divisibility
/// condition for B.
bool admits_cut_matrix_form(const PeriodicityMatrix& b);

}  // namespace lozenge
