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

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "lozenge/error.hpp"
#include "lozenge/height.hpp"
#include "lozenge/io.hpp"
#include "lozenge/mutation.hpp"
#include "lozenge/oracle.hpp"

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

// Replays a sequence, checking every intermediate step.
void check_replay(const FlipSequence& seq, const Tiling& target) {
  Tiling t = seq.start;
  const CutType g = type_of(t);
  for (std::size_t s : seq.steps) {
    REQUIRE((is_source(t, s) || is_sink(t, s)));
    t = flip(t, s);
    CHECK(validate(t));
    CHECK(type_of(t) == g);
  }
  CHECK(t == target);
  CHECK(seq.apply() == target);
}

std::map<CutType, std::vector<Tiling>> by_type(const PeriodicityMatrix& b) {
  std::map<CutType, std::vector<Tiling>> out;
  for (const Tiling& t : enumerate_all_tilings(b)) out[type_of(t)].push_back(t);
  return out;
}

}  // namespace

TEST_SUITE("mutation") {
  TEST_CASE("trivial connections") {
    const Tiling t = canonical_tiling(kB12, {4, 4, 4});
    CHECK(flip_connect(t, t).steps.empty());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!is_source(t, i) && !is_sink(t, i)) continue;
      const Tiling f = flip(t, i);
      const FlipSequence seq = flip_connect(t, f);
      CHECK(!seq.steps.empty());
      check_replay(seq, f);
    }
  }

  TEST_CASE("golden tiling against the canonical one") {
    const Tiling gold = decode_tiling_json(read_file(LOZENGE_TEST_DATA "/golden_2_2_8.json"));
    const Tiling can = canonical_tiling(kB12, {2, 2, 8});
    check_replay(flip_connect(can, gold), gold);
    check_replay(flip_connect(gold, can), can);
  }

  TEST_CASE("errors") {
    const Tiling a = canonical_tiling(kB12, {4, 4, 4});
    const Tiling b = canonical_tiling(kB12, {2, 2, 8});
    CHECK(code_of([&] { flip_connect(a, b); }) == ErrorCode::kTypeMismatch);
    const Tiling c = canonical_tiling(canonicalize({12, 11, 0, 1}), {4, 4, 4});
    CHECK(code_of([&] { flip_connect(a, c); }) == ErrorCode::kTypeMismatch);
    const Tiling u = constant_tiling(kB12, Lozenge::U);
    CHECK(code_of([&] { flip_connect(u, u); }) == ErrorCode::kNonPositiveType);
    const auto boundary = by_type(kB12).at({6, 6, 0});
    REQUIRE(boundary.size() == 2);
    CHECK(code_of([&] { flip_connect(boundary[0], boundary[1]); }) == ErrorCode::kNonPositiveType);
  }

  TEST_CASE("flip classes") {
    const Tiling u = constant_tiling(kB12, Lozenge::U);
    CHECK(flip_class(u) == std::vector<Tiling>{u});
    const PeriodicityMatrix c3 = canonicalize({3, 2, 0, 1});
    CHECK(flip_class(canonical_tiling(c3, {1, 1, 1})).size() == 3);

    const auto types = by_type(kB12);
    for (const CutType& g : valid_types(kB12, false)) {
      CHECK(flip_class(canonical_tiling(kB12, g)) == types.at(g));
    }
    // Boundary classes stay inside their type.
    for (const auto& [g, tilings] : types) {
      for (const Tiling& t : flip_class(tilings.front())) CHECK(type_of(t) == g);
    }
  }

  TEST_CASE("all same-type pairs connect within the height bound") {
    for (const PeriodicityMatrix& b : canonical_matrices(9)) {
      for (const auto& [g, tilings] : by_type(b)) {
        if (!g.positive()) continue;
        for (const Tiling& x : tilings) {
          for (const Tiling& y : tilings) {
            const FlipSequence seq = flip_connect(x, y);
            CHECK(static_cast<std::int64_t>(seq.steps.size()) <= height_distance(x, y));
            check_replay(seq, y);
          }
        }
      }
    }
  }

  TEST_CASE("deterministic output") {
    const Tiling gold = decode_tiling_json(read_file(LOZENGE_TEST_DATA "/golden_2_2_8.json"));
    const auto cls = flip_class(gold);
    const Tiling far = cls.back();
    CHECK(flip_connect(gold, far).steps == flip_connect(gold, far).steps);
    CHECK(std::is_sorted(cls.begin(), cls.end()));
  }
}
