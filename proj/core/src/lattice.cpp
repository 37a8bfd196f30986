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

#include "lozenge/lattice.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>

#include "lozenge/error.hpp"

namespace lozenge {
namespace {

__extension__ typedef __int128 Wide;

struct Bezout {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};

// g = gcd(a, b) >= 0 with s*a + t*b = g.
Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void check_entry(std::int64_t v) {
  if (v > kMaxEntry || v < -kMaxEntry) {
    throw LozengeError(ErrorCode::kOutOfRange,
                       "matrix entry " + std::to_string(v) + " exceeds 2^31 bound");
  }
}

std::int64_t narrow_mod(Wide value, std::int64_t m) {
  Wide r = value % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

PeriodicityMatrix canonicalize(const Matrix2& raw) {
  check_entry(raw.a1);
  check_entry(raw.b1);
  check_entry(raw.a2);
  check_entry(raw.b2);

  Wide det = Wide{raw.a1} * raw.b2 - Wide{raw.a2} * raw.b1;
  if (det == 0) throw LozengeError(ErrorCode::kSingularMatrix, "determinant is zero");

  std::int64_t a1 = raw.a1, a2 = raw.a2, b1 = raw.b1, b2 = raw.b2;
  if (det < 0) {
    b1 = -b1;
    b2 = -b2;
    det = -det;
  }
  if (det > kMaxIndex) {
    throw LozengeError(ErrorCode::kOutOfRange, "index exceeds 10^6");
  }

  // Column operation by [[b2/g, s], [-a2/g, t]] (determinant one) clears a2.
  const Bezout bz = extended_gcd(a2, b2);
  const std::int64_t g = bz.g;
  const Wide new_a1 = (Wide{a1} * (b2 / g)) - (Wide{b1} * (a2 / g));
  const Wide new_b1 = Wide{a1} * bz.s + Wide{b1} * bz.t;
  const auto n = static_cast<std::int64_t>(det);
  const auto top = static_cast<std::int64_t>(new_a1);
  if (top * g != n) {
    throw LozengeError(ErrorCode::kSingularMatrix, "internal reduction lost the determinant");
  }
  return PeriodicityMatrix(top, narrow_mod(new_b1, top), g);
}

std::optional<LatticePoint> lattice_coordinates(LatticePoint p, const PeriodicityMatrix& b) {
  if (p.x2 % b.b2() != 0) return std::nullopt;
  const std::int64_t c2 = p.x2 / b.b2();
  const std::int64_t rest = p.x1 - c2 * b.b1();
  if (rest % b.a1() != 0) return std::nullopt;
  return LatticePoint{rest / b.a1(), c2};
}

bool in_lattice(LatticePoint p, const PeriodicityMatrix& b) {
  return lattice_coordinates(p, b).has_value();
}

LatticePoint QuotientIndex::reduce(LatticePoint p) const {
  const std::int64_t k = floor_div(p.x2, matrix_.b2());
  const std::int64_t x2 = p.x2 - k * matrix_.b2();
  const std::int64_t x1 = mod_floor(p.x1 - k * matrix_.b1(), matrix_.a1());
  return {x1, x2};
}

std::size_t QuotientIndex::index_of(LatticePoint p) const {
  const LatticePoint r = reduce(p);
  return static_cast<std::size_t>(r.x2 * matrix_.a1() + r.x1);
}

LatticePoint QuotientIndex::rep(std::size_t index) const {
  const auto i = static_cast<std::int64_t>(index);
  return {i % matrix_.a1(), i / matrix_.a1()};
}

std::vector<LatticePoint> QuotientIndex::reps() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(rep(i));
  return out;
}

PeriodicityMatrix kernel_lattice(std::span<const Relation> relations) {
  PeriodicityMatrix current = canonicalize({1, 0, 0, 1});
  for (const Relation& rel : relations) {
    if (rel.modulus < 0) {
      throw LozengeError(ErrorCode::kParseError, "negative modulus");
    }
    if (rel.modulus == 0) {
      if (rel.c1 == 0 && rel.c2 == 0) continue;
      throw LozengeError(ErrorCode::kInfiniteIndex,
                         "relation without modulus cuts out a rank-one lattice");
    }
    const std::int64_t m = rel.modulus;
    // In coordinates (s, t) w.r.t. the current basis the relation reads
    // p*s + q*t == 0 (mod m).
    const std::int64_t p = narrow_mod(Wide{rel.c1} * current.a1(), m);
    const std::int64_t q = narrow_mod(Wide{rel.c1} * current.b1() + Wide{rel.c2} * current.b2(), m);
    const std::int64_t gp = std::gcd(p, m);
    const std::int64_t s_step = m / gp;
    const std::int64_t t0 = gp / std::gcd(gp, q);
    // Solve p*s == -q*t0 (mod m); gp divides q*t0.
    std::int64_t s0 = 0;
    const std::int64_t reduced_m = m / gp;
    if (reduced_m > 1) {
      const std::int64_t rhs = narrow_mod(-(Wide{q} * t0) / gp, reduced_m);
      const Bezout inv = extended_gcd(mod_floor(p / gp, reduced_m), reduced_m);
      s0 = narrow_mod(Wide{rhs} * inv.s, reduced_m);
    }
    const Wide index = Wide{current.n()} * s_step * t0;
    if (index > kMaxIndex) throw LozengeError(ErrorCode::kOutOfRange, "index exceeds 10^6");
    const std::int64_t col1_x1 = s_step * current.a1();
    const std::int64_t col2_x1 =
        narrow_mod(Wide{s0} * current.a1() + Wide{t0} * current.b1(), col1_x1);
    const std::int64_t col2_x2 = t0 * current.b2();
    current = canonicalize({col1_x1, col2_x1, 0, col2_x2});
  }
  return current;
}

Matrix2 parse_matrix(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t slash_count = 0;
  std::size_t slash_after = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw LozengeError(ErrorCode::kParseError,
                       "matrix '" + std::string(text) + "': " + why + " (expected \"a1 b1 / a2 b2\")");
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/') {
      ++slash_count;
      slash_after = values.size();
      ++i;
    } else {
      std::int64_t v = 0;
      const char* begin = text.data() + i;
      const char* end = text.data() + text.size();
      if (*begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr == begin) fail("unexpected character");
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  }
  if (values.size() != 4 || slash_count != 1 || slash_after != 2) fail("malformed");
  return {values[0], values[1], values[2], values[3]};
}

std::string format_matrix(const PeriodicityMatrix& b) {
  return std::to_string(b.a1()) + " " + std::to_string(b.b1()) + " / " + std::to_string(b.a2()) +
         " " + std::to_string(b.b2());
}

std::string format_point(LatticePoint p) {
  return std::to_string(p.x1) + "," + std::to_string(p.x2);
}

}  // namespace lozenge
