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
#include <set>
#include <vector>

#include "doctest.h"
#include "lozenge/error.hpp"
#include "lozenge/group.hpp"
#include "lozenge/oracle.hpp"
#include "naive.hpp"

using namespace lozenge;

namespace {

std::set<CutType> census(const PeriodicityMatrix& b) {
  std::set<CutType> out;
  for (const Tiling& t : enumerate_all_tilings(b)) out.insert(type_of(t));
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("matches the naive filter for n <= 9") {
    for (const PeriodicityMatrix& b : canonical_matrices(9)) {
      INFO(format_matrix(b));
      const auto fast = enumerate_all_tilings(b);
      std::vector<naive::Letters> slow = naive::all_tilings(naive::torus(b));
      std::sort(slow.begin(), slow.end());
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].letters() == slow[i]);
    }
  }

  TEST_CASE("canonical matrices") {
    // One upper triangular form per sublattice: sum of divisors of n.
    std::size_t expected = 0;
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t d = 1; d <= n; ++d) expected += n % d == 0 ? static_cast<std::size_t>(d) : 0;
    }
    const auto all = canonical_matrices(12);
    CHECK(all.size() == expected);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const PeriodicityMatrix& a, const PeriodicityMatrix& b) {
      return a.n() < b.n();
    }));
    CHECK(std::set<PeriodicityMatrix>(all.begin(), all.end()).size() == all.size());
  }

  TEST_CASE("small censuses") {
    const PeriodicityMatrix one = canonicalize({1, 0, 0, 1});
    CHECK(enumerate_all_tilings(one).size() == 3);

    const PeriodicityMatrix c3 = canonicalize({3, 2, 0, 1});
    const auto t3 = enumerate_all_tilings(c3);
    CHECK(t3.size() == 6);
    CHECK(std::count_if(t3.begin(), t3.end(),
                        [](const Tiling& t) { return type_of(t) == CutType{1, 1, 1}; }) == 3);
    CHECK(census(c3) == std::set<CutType>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});

    const PeriodicityMatrix klein = canonicalize({2, 0, 0, 2});
    CHECK(census(klein) ==
          std::set<CutType>{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
    CHECK_FALSE(find_full_tiling(klein, 16).has_value());
    CHECK(find_full_tiling(c3, 16).has_value());

    const PeriodicityMatrix b12 = canonicalize({6, 4, 0, 2});
    CHECK(census(b12).size() == 10);
  }

  TEST_CASE("bound") {
    const PeriodicityMatrix big = canonicalize({17, 0, 0, 1});
    CHECK_THROWS_AS(enumerate_all_tilings(big), LozengeError);
    try {
      enumerate_all_tilings(big, 16);
    } catch (const LozengeError& e) {
      CHECK(e.code() == ErrorCode::kBoundExceeded);
    }
    CHECK(enumerate_all_tilings(big, 17).size() >= 3);
  }

  TEST_CASE("reports") {
    const PeriodicityMatrix b12 = canonicalize({6, 4, 0, 2});
    const Report types = verify_type_theorem(b12, 16);
    CHECK(types.passed());
    CHECK(!types.checks.empty());
    const Report flips = verify_mutation_theorem(b12, 16);
    CHECK(flips.passed());
    const Report cls = verify_classification(12);
    CHECK(cls.passed());
    const std::string text = cls.format();
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.rfind("PASS", 0) == 0);
  }

  TEST_CASE("sweep") {
    const auto groups = sweep_groups(12);
    CHECK(std::any_of(groups.begin(), groups.end(), [](const GroupEmbedding& g) { return is_klein_four(g); }));
    for (const GroupEmbedding& g : groups) CHECK(g.order() <= 12);
  }
}
