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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lozenge/cut_type.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

/// Lozenge letter placed at the up-triangle x, x+u, x-v. The letter names
/// the direction of the arrow removed from that triangle: U removes x->x+u,
/// V removes x-v->x, W removes x+u->x-v.
enum class Lozenge : std::uint8_t { U = 0, V = 1, W = 2 };

/// Arrow directions of the covering quiver: x->x+u, x->x+v, x->x+w.
enum class Direction : std::uint8_t { U = 0, V = 1, W = 2 };

inline constexpr std::array<Direction, 3> kDirections{Direction::U, Direction::V, Direction::W};

char to_char(Lozenge l);
Lozenge lozenge_from_char(char c);  // throws kParseError
char to_char(Direction d);
LatticePoint step(Direction d);

/// An L1-periodic assignment of letters, stored on the coset
/// representatives of L0 / L1. Construction does not check compatibility;
/// use validate().
class Tiling {
 public:
  Tiling(PeriodicityMatrix matrix, std::vector<Lozenge> letters);

  const QuotientIndex& quotient() const { return quotient_; }
  const PeriodicityMatrix& matrix() const { return quotient_.matrix(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Lozenge>& letters() const { return letters_; }

  Lozenge at(std::size_t index) const { return letters_[index]; }
  Lozenge at(LatticePoint p) const { return letters_[quotient_.index_of(p)]; }

  /// Letters in index order as a string over {U, V, W}.
  std::string key() const;

  /// True when the arrow p -> p + d is removed, i.e. interior to a lozenge.
  bool removed(LatticePoint p, Direction d) const;
  bool removed(std::size_t index, Direction d) const { return removed(quotient_.rep(index), d); }

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.matrix() == b.matrix() && a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Tiling& a, const Tiling& b) {
    if (auto c = a.matrix() <=> b.matrix(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  QuotientIndex quotient_;
  std::vector<Lozenge> letters_;
};

Tiling constant_tiling(const PeriodicityMatrix& b, Lozenge letter);

/// Compatibility at every coset x: exactly one of T(x) = W, T(x+u) = V,
/// T(x-v) = U.
bool validate(const Tiling& t);

/// Letter counts (U, V, W). Throws kInvalidTiling for an incompatible map.
CutType type_of(const Tiling& t);

/// Level-set tiling of xi(x) = (g1*x1 + g2*x2) mod n: V on [0, g2), W on
/// [g2, g2+g3), U on [g2+g3, n). Throws kInvalidType.
Tiling canonical_tiling(const PeriodicityMatrix& b, const CutType& gamma);

/// Wrap-around (AIR) tiling for phi(x) = (e1*x1 + e2*x2) mod det(B):
/// V where phi(x-v) > phi(x), W where phi(x+u) > phi(x-v), U where
/// phi(x) > phi(x+u). B must satisfy e1*col1 + e2*col2 == 0 mod n for both
/// columns; the result has type (e1, e2, e3). Throws kBadExponentSum or
/// kInvalidType.
Tiling air_tiling(const PeriodicityMatrix& b, const std::array<std::int64_t, 3>& e);

/// Same construction on the cyclic quotient cut out by e1*x1 + e2*x2 == 0
/// (mod n). That quotient has order n / gcd(e1, e2, n), and the tiling has
/// type e / gcd(e1, e2, n).
Tiling air_tiling(std::int64_t n, const std::array<std::int64_t, 3>& e);

/// One arrow of the quotient quiver: source coset and direction.
struct Arrow {
  std::size_t source = 0;
  Direction direction = Direction::U;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A set of removed arrows on L0 / L1. Arrows are kept sorted and unique.
class Cut {
 public:
  Cut(PeriodicityMatrix matrix, std::vector<Arrow> removed);

  const QuotientIndex& quotient() const { return quotient_; }
  const PeriodicityMatrix& matrix() const { return quotient_.matrix(); }
  const std::vector<Arrow>& removed() const { return removed_; }
  bool contains(const Arrow& a) const;
  std::size_t target(const Arrow& a) const;

  friend bool operator==(const Cut& a, const Cut& b) {
    return a.matrix() == b.matrix() && a.removed_ == b.removed_;
  }

 private:
  QuotientIndex quotient_;
  std::vector<Arrow> removed_;
};

/// Every up-triangle and every down-triangle of the quotient has exactly
/// one removed arrow.
bool is_valid_cut(const Cut& c);

Cut to_cut(const Tiling& t);

/// Throws kInvalidCut unless is_valid_cut(c).
Tiling from_cut(const Cut& c);

/// Valid cut whose removed arrows use all three directions.
bool is_higher_preprojective(const Cut& c);

/// The quotient quiver with the cut removed has no directed cycle.
/// Throws kInvalidCut.
bool is_acyclic(const Cut& c);

/// Cut-side mutation at a source or sink of the cut quiver. Throws
/// kNotFlippable.
Cut mutate(const Cut& c, std::size_t vertex);

struct Extremes {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
};

/// Sources and sinks of the cut quiver, as sorted coset indices. Throws
/// kInvalidTiling.
Extremes sources_and_sinks(const Tiling& t);

bool is_source(const Tiling& t, std::size_t index);
bool is_sink(const Tiling& t, std::size_t index);

/// Exchanges the three lozenges meeting at a source for the sink
/// configuration and vice versa. Throws kNotFlippable.
Tiling flip(const Tiling& t, std::size_t index);

}  // namespace lozenge
