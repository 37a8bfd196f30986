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

#include <random>
#include <vector>

#include "doctest.h"
#include "lozenge/cut_type.hpp"
#include "lozenge/error.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/tiling.hpp"
#include "naive.hpp"

using namespace lozenge;

namespace {

const PeriodicityMatrix kB12 = canonicalize({6, 4, 0, 2});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LozengeError& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kSchemaError;
}

// Arrow set read off the letters by the three-case rule.
Cut naive_cut(const PeriodicityMatrix& b, const naive::Letters& letters) {
  const naive::Torus q = naive::torus(b);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < q.n(); ++i) {
    for (int d = 0; d < 3; ++d) {
      if (naive::removed(q, letters, q.rep(i), d)) arrows.push_back({i, static_cast<Direction>(d)});
    }
  }
  return Cut(b, arrows);
}

}  // namespace

TEST_SUITE("tiling") {
  TEST_CASE("validate") {
    CHECK(validate(constant_tiling(kB12, Lozenge::U)));
    CHECK(validate(constant_tiling(kB12, Lozenge::V)));
    CHECK(validate(constant_tiling(kB12, Lozenge::W)));
    std::vector<Lozenge> letters(12, Lozenge::U);
    letters[5] = Lozenge::V;
    CHECK_FALSE(validate(Tiling(kB12, letters)));
    for (const CutType& g : valid_types(kB12, true)) CHECK(validate(canonical_tiling(kB12, g)));
    CHECK(code_of([] { Tiling(kB12, std::vector<Lozenge>(5, Lozenge::U)); }) ==
          ErrorCode::kInvalidTiling);
  }

  TEST_CASE("validate agrees with the naive rule on random assignments") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> letter(0, 2);
    for (const PeriodicityMatrix& b : canonical_matrices(8)) {
      const naive::Torus q = naive::torus(b);
      for (int trial = 0; trial < 50; ++trial) {
        naive::Letters l(q.n());
        for (auto& x : l) x = static_cast<Lozenge>(letter(rng));
        CHECK(validate(Tiling(b, l)) == naive::compatible(q, l));
      }
    }
  }

  TEST_CASE("type_of") {
    CHECK(type_of(constant_tiling(kB12, Lozenge::U)) == CutType{12, 0, 0});
    CHECK(type_of(canonical_tiling(kB12, {4, 4, 4})) == CutType{4, 4, 4});
    std::vector<Lozenge> letters(12, Lozenge::U);
    letters[0] = Lozenge::W;
    CHECK(code_of([&] { type_of(Tiling(kB12, letters)); }) == ErrorCode::kInvalidTiling);
  }

  TEST_CASE("canonical tiling") {
    const Tiling t = canonical_tiling(kB12, {2, 2, 8});
    CHECK(t.at(LatticePoint{0, 0}) == Lozenge::V);
    CHECK(t.at(LatticePoint{1, 0}) == Lozenge::W);
    CHECK(canonical_tiling(kB12, {12, 0, 0}) == constant_tiling(kB12, Lozenge::U));
    CHECK(canonical_tiling(kB12, {0, 12, 0}) == constant_tiling(kB12, Lozenge::V));
    CHECK(code_of([] { canonical_tiling(kB12, {6, 3, 3}); }) == ErrorCode::kInvalidType);
    for (const PeriodicityMatrix& b : canonical_matrices(20)) {
      for (const CutType& g : valid_types(b, true)) {
        const Tiling c = canonical_tiling(b, g);
        CHECK(naive::compatible(naive::torus(b), c.letters()));
        CHECK(type_of(c) == g);
      }
    }
  }

  TEST_CASE("AIR tilings") {
    const Tiling c3 = air_tiling(3, {1, 1, 1});
    CHECK(c3.matrix().raw() == Matrix2{3, 2, 0, 1});
    CHECK(type_of(c3) == CutType{1, 1, 1});
    // Degree one arrows are exactly the three arrows out of vertex 2.
    const Cut cut = to_cut(c3);
    const std::vector<Arrow> out2{{2, Direction::U}, {2, Direction::V}, {2, Direction::W}};
    CHECK(cut.removed() == out2);
    for (const Arrow& a : cut.removed()) CHECK(cut.target(a) == 0);
    CHECK(from_cut(Cut(c3.matrix(), out2)) == c3);

    CHECK(type_of(air_tiling(kB12, {2, 2, 8})) == CutType{2, 2, 8});
    CHECK(type_of(air_tiling(12, {2, 2, 8})) == CutType{1, 1, 4});
    CHECK(air_tiling(2, {2, 0, 0}) == constant_tiling(air_tiling(2, {2, 0, 0}).matrix(), Lozenge::U));
    CHECK(code_of([] { air_tiling(12, {2, 2, 7}); }) == ErrorCode::kBadExponentSum);
    CHECK(code_of([] { air_tiling(kB12, {1, 1, 10}); }) == ErrorCode::kInvalidType);
  }

  TEST_CASE("AIR and canonical tilings coincide") {
    for (const PeriodicityMatrix& b : canonical_matrices(20)) {
      for (const CutType& g : valid_types(b, true)) {
        CHECK(air_tiling(b, {g.g1, g.g2, g.g3}) == canonical_tiling(b, g));
      }
    }
  }

  TEST_CASE("cuts") {
    const Cut u = to_cut(constant_tiling(kB12, Lozenge::U));
    CHECK(u.removed().size() == 12);
    for (const Arrow& a : u.removed()) CHECK(a.direction == Direction::U);
    CHECK_FALSE(is_higher_preprojective(u));
    CHECK_FALSE(is_acyclic(u));
    CHECK(is_higher_preprojective(to_cut(canonical_tiling(kB12, {4, 4, 4}))));
    for (const Tiling& t : enumerate_all_tilings(canonicalize({2, 0, 0, 2}))) {
      CHECK_FALSE(is_higher_preprojective(to_cut(t)));
    }
    const Cut empty(kB12, {});
    CHECK_FALSE(is_valid_cut(empty));
    CHECK(code_of([&] { from_cut(empty); }) == ErrorCode::kInvalidCut);
    CHECK(code_of([&] { is_acyclic(empty); }) == ErrorCode::kInvalidCut);
  }

  TEST_CASE("single vertex") {
    const PeriodicityMatrix one = canonicalize({1, 0, 0, 1});
    for (Lozenge l : {Lozenge::U, Lozenge::V, Lozenge::W}) {
      const Tiling t = constant_tiling(one, l);
      CHECK(validate(t));
      CHECK_FALSE(is_acyclic(to_cut(t)));
      CHECK(from_cut(to_cut(t)) == t);
    }
  }

  TEST_CASE("compatibility is cut validity, exhaustively") {
    for (const PeriodicityMatrix& b : canonical_matrices(7)) {
      const naive::Torus q = naive::torus(b);
      std::size_t total = 1;
      for (std::size_t i = 0; i < q.n(); ++i) total *= 3;
      naive::Letters l(q.n());
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& x : l) {
          x = static_cast<Lozenge>(c % 3);
          c /= 3;
        }
        const bool ok = naive::compatible(q, l);
        CHECK(is_valid_cut(naive_cut(b, l)) == ok);
        if (ok) {
          const Tiling t(b, l);
          CHECK(to_cut(t) == naive_cut(b, l));
          CHECK(from_cut(to_cut(t)) == t);
        }
      }
    }
  }

  TEST_CASE("every valid arrow set comes from a tiling") {
    for (const PeriodicityMatrix& b : canonical_matrices(3)) {
      const std::size_t arrows = 3 * static_cast<std::size_t>(b.n());
      std::size_t valid = 0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << arrows); ++mask) {
        std::vector<Arrow> set;
        for (std::size_t k = 0; k < arrows; ++k) {
          if (mask >> k & 1) set.push_back({k / 3, static_cast<Direction>(k % 3)});
        }
        const Cut c(b, set);
        if (!is_valid_cut(c)) continue;
        ++valid;
        CHECK(to_cut(from_cut(c)) == c);
      }
      CHECK(valid == enumerate_all_tilings(b).size());
    }
  }

  TEST_CASE("sources, sinks and flips") {
    const Extremes none = sources_and_sinks(constant_tiling(kB12, Lozenge::U));
    CHECK(none.sources.empty());
    CHECK(none.sinks.empty());
    const Extremes e228 = sources_and_sinks(canonical_tiling(kB12, {2, 2, 8}));
    CHECK(e228.sources.size() == 2);
    CHECK(e228.sinks.size() == 2);
    const Extremes e444 = sources_and_sinks(canonical_tiling(kB12, {4, 4, 4}));
    CHECK(e444.sources.size() == 4);
    CHECK(e444.sinks.size() == 4);

    for (const Tiling& t : enumerate_all_tilings(kB12)) {
      const CutType g = type_of(t);
      const Extremes ex = sources_and_sinks(t);
      CHECK(static_cast<std::int64_t>(ex.sources.size()) <= g.min());
      CHECK(static_cast<std::int64_t>(ex.sinks.size()) <= g.min());
      for (std::size_t i = 0; i < t.size(); ++i) {
        const bool flippable = is_source(t, i) || is_sink(t, i);
        if (!flippable) {
          CHECK(code_of([&] { flip(t, i); }) == ErrorCode::kNotFlippable);
          CHECK(code_of([&] { mutate(to_cut(t), i); }) == ErrorCode::kNotFlippable);
          continue;
        }
        const Tiling f = flip(t, i);
        CHECK(validate(f));
        CHECK(type_of(f) == g);
        CHECK(flip(f, i) == t);
        CHECK(is_source(f, i) == is_sink(t, i));
        CHECK(mutate(to_cut(t), i) == to_cut(f));
        // Only the three cells around the vertex change.
        std::size_t changed = 0;
        for (std::size_t j = 0; j < t.size(); ++j) changed += t.at(j) != f.at(j) ? 1 : 0;
        CHECK(changed <= 3);
      }
    }
  }
}
