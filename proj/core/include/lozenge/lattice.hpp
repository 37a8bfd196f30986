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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lozenge {

/// A point x1*u + x2*v of the triangular lattice L0, stored by its
/// coefficients. The third step direction is w = -(u + v).
struct LatticePoint {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;

  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.x1 + b.x1, a.x2 + b.x2};
  }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
    return {a.x1 - b.x1, a.x2 - b.x2};
  }
  friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.x1, -a.x2}; }
  friend constexpr LatticePoint operator*(std::int64_t k, LatticePoint a) {
    return {k * a.x1, k * a.x2};
  }
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline constexpr LatticePoint kStepU{1, 0};
inline constexpr LatticePoint kStepV{0, 1};
inline constexpr LatticePoint kStepW{-1, -1};

/// Raw 2x2 integer matrix, row-major: [[a1, b1], [a2, b2]]. Columns are
/// (a1, a2) and (b1, b2).
struct Matrix2 {
  std::int64_t a1 = 0;
  std::int64_t b1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b2 = 0;

  friend constexpr bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Entry bound |entry| < 2^31 and index bound n <= 10^6 accepted by every
/// lattice operation.
inline constexpr std::int64_t kMaxEntry = (std::int64_t{1} << 31) - 1;
inline constexpr std::int64_t kMaxIndex = 1'000'000;

/// Periodicity matrix in reduced Hermite form: a2 = 0, a1 > 0, b2 > 0 and
/// 0 <= b1 < a1. Its columns span the sublattice L1 of index n = a1 * b2.
/// Only obtainable through canonicalize() or kernel_lattice().
class PeriodicityMatrix {
 public:
  std::int64_t a1() const { return a1_; }
  std::int64_t b1() const { return b1_; }
  std::int64_t a2() const { return 0; }
  std::int64_t b2() const { return b2_; }
  std::int64_t n() const { return a1_ * b2_; }

  LatticePoint column1() const { return {a1_, 0}; }
  LatticePoint column2() const { return {b1_, b2_}; }
  Matrix2 raw() const { return {a1_, b1_, 0, b2_}; }

  friend bool operator==(const PeriodicityMatrix&, const PeriodicityMatrix&) = default;
  friend auto operator<=>(const PeriodicityMatrix&, const PeriodicityMatrix&) = default;

 private:
  friend PeriodicityMatrix canonicalize(const Matrix2& raw);
  PeriodicityMatrix(std::int64_t a1, std::int64_t b1, std::int64_t b2)
      : a1_(a1), b1_(b1), b2_(b2) {}

  std::int64_t a1_;
  std::int64_t b1_;
  std::int64_t b2_;
};

/// Reduces an arbitrary nonsingular matrix to the unique reduced form with
/// the same column lattice. A negative determinant is fixed by negating the
/// second column. Throws kSingularMatrix or kOutOfRange.
PeriodicityMatrix canonicalize(const Matrix2& raw);

/// Integer coefficients c with B * c = p, if they exist.
std::optional<LatticePoint> lattice_coordinates(LatticePoint p, const PeriodicityMatrix& b);

bool in_lattice(LatticePoint p, const PeriodicityMatrix& b);

/// Fundamental domain of L0 / L1. Coset representatives are the points
/// (x1, x2) with 0 <= x1 < a1 and 0 <= x2 < b2, indexed row-major as
/// x2 * a1 + x1.
class QuotientIndex {
 public:
  explicit QuotientIndex(PeriodicityMatrix matrix) : matrix_(matrix) {}

  const PeriodicityMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return static_cast<std::size_t>(matrix_.n()); }

  LatticePoint reduce(LatticePoint p) const;
  std::size_t index_of(LatticePoint p) const;
  LatticePoint rep(std::size_t index) const;
  std::vector<LatticePoint> reps() const;

  /// Index of reduce(rep(index) + step).
  std::size_t shifted(std::size_t index, LatticePoint step) const {
    return index_of(rep(index) + step);
  }

  friend bool operator==(const QuotientIndex&, const QuotientIndex&) = default;

 private:
  PeriodicityMatrix matrix_;
};

inline LatticePoint reduce(LatticePoint p, const QuotientIndex& q) { return q.reduce(p); }

/// One congruence c1*x1 + c2*x2 == 0 (mod modulus).
struct Relation {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t modulus = 1;
};

/// Canonical basis of { x in Z^2 : every relation holds }. Throws
/// kInfiniteIndex when a relation has modulus 0 (an exact linear equation)
/// and kOutOfRange past the index bound.
PeriodicityMatrix kernel_lattice(std::span<const Relation> relations);

/// Parses "a1 b1 / a2 b2".
Matrix2 parse_matrix(std::string_view text);
std::string format_matrix(const PeriodicityMatrix& b);
std::string format_point(LatticePoint p);

/// Floor division and nonnegative remainder for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return a - floor_div(a, m) * m; }

}  // namespace lozenge
