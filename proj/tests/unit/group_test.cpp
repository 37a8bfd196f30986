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

#include <numeric>

#include "doctest.h"
#include "lozenge/error.hpp"
#include "lozenge/group.hpp"
#include "lozenge/oracle.hpp"
#include "naive.hpp"

using namespace lozenge;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LozengeError& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kSchemaError;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("parse and embed") {
    const GroupEmbedding g12 = parse_group("1/2(1,1,0); 1/6(1,4,1)");
    CHECK(g12.order() == 12);
    CHECK(g12.matrix().raw() == Matrix2{6, 4, 0, 2});

    const GroupEmbedding c3 = parse_group("1/3(1,1,1)");
    CHECK(c3.order() == 3);
    CHECK(c3.matrix().raw() == Matrix2{3, 2, 0, 1});

    const GroupEmbedding klein = parse_group("1/2(1,1,0); 1/2(1,0,1)");
    CHECK(klein.order() == 4);
    CHECK(klein.matrix().raw() == Matrix2{2, 0, 0, 2});
    CHECK(is_klein_four(klein));
    CHECK_FALSE(is_klein_four(parse_group("1/4(1,1,2)")));
  }

  TEST_CASE("exponents are normalized") {
    const GroupEmbedding g = parse_group(" 1/5( -1 , 6 , 0 ) ");
    CHECK(format_group(g) == "1/5(4,1,0)");
    CHECK(g.order() == 5);
  }

  TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_group(""); }) == ErrorCode::kParseError);
    CHECK(code_of([] { parse_group("1/3(1,1)"); }) == ErrorCode::kParseError);
    CHECK(code_of([] { parse_group("2/3(1,1,1)"); }) == ErrorCode::kParseError);
    CHECK(code_of([] { parse_group("1/3(1,1,1);"); }) == ErrorCode::kParseError);
    CHECK(code_of([] { parse_group("1/0(0,0,0)"); }) == ErrorCode::kParseError);
    CHECK(code_of([] { parse_group("1/3(1,1,0)"); }) == ErrorCode::kDeterminantNotOne);
  }

  TEST_CASE("trivial characters") {
    CHECK(has_trivial_character(parse_group("1/4(0,1,3)")));
    CHECK_FALSE(has_trivial_character(parse_group("1/3(1,1,1)")));
    CHECK_FALSE(has_trivial_character(parse_group("1/2(1,1,0); 1/6(1,4,1)")));
  }

  TEST_CASE("group form") {
    CHECK_FALSE(admits_cut_group_form(parse_group("1/2(1,1,0); 1/2(1,0,1)")));
    CHECK(admits_cut_group_form(parse_group("1/3(1,1,1)")));
    CHECK_FALSE(admits_cut_group_form(parse_group("1/4(0,1,3)")));
  }

  TEST_CASE("matrix form") {
    CHECK(admits_cut_matrix_form(canonicalize({6, 4, 0, 2})));
    CHECK_FALSE(admits_cut_matrix_form(canonicalize({2, 0, 0, 2})));
    CHECK_FALSE(admits_cut_matrix_form(canonicalize({1, 0, 0, 5})));
  }

  TEST_CASE("cyclic orders match the gcd formula") {
    for (std::int64_t n = 1; n <= 30; ++n) {
      for (std::int64_t e1 = 0; e1 < n; ++e1) {
        for (std::int64_t e2 = 0; e2 < n; ++e2) {
          const std::int64_t e3 = naive::fmod(-e1 - e2, n);
          const GroupEmbedding g = GroupEmbedding::from_generators({{n, {e1, e2, e3}}});
          const std::int64_t expected = n / std::gcd(n, std::gcd(e1, std::gcd(e2, e3)));
          CHECK(g.order() == expected);
          CHECK(g.matrix().n() == expected);
          // The generator acts trivially on every column of B.
          for (LatticePoint c : {g.matrix().column1(), g.matrix().column2()}) {
            CHECK(naive::fmod(e1 * c.x1 + e2 * c.x2, n) == 0);
          }
        }
      }
    }
  }

  TEST_CASE("group and matrix forms agree on the sweep") {
    for (const GroupEmbedding& g : sweep_groups(24)) {
      INFO(format_group(g));
      CHECK(admits_cut_group_form(g) == admits_cut_matrix_form(g.matrix()));
    }
  }
}
