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

#include <string>

#include "doctest.h"
#include "lozenge/error.hpp"
#include "lozenge/io.hpp"
#include "lozenge/oracle.hpp"

using namespace lozenge;

namespace {

const PeriodicityMatrix kB12 = canonicalize({6, 4, 0, 2});

ErrorCode decode_error(const std::string& text) {
  try {
    decode_tiling_json(text);
  } catch (const LozengeError& e) {
    return e.code();
  }
  FAIL("decoded: " << text);
  return ErrorCode::kSingularMatrix;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

void replace_once(std::string& s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("round trip on every oracle tiling") {
    for (const PeriodicityMatrix& b : canonical_matrices(12)) {
      for (const Tiling& t : enumerate_all_tilings(b)) {
        const std::string text = encode_tiling_json(t);
        CHECK(decode_tiling_json(text) == t);
        CHECK(encode_tiling_json(decode_tiling_json(text)) == text);
      }
    }
  }

  TEST_CASE("golden file is the canonical encoding") {
    const std::string text = read_file(LOZENGE_TEST_DATA "/golden_2_2_8.json");
    CHECK(encode_tiling_json(canonical_tiling(kB12, {2, 2, 8})) == text);
  }

  TEST_CASE("schema errors") {
    const std::string good = encode_tiling_json(canonical_tiling(kB12, {2, 2, 8}));
    std::string missing = good;
    replace_once(missing, "    \"5,1\": \"V\"\n", "");
    replace_once(missing, "\"U\",\n  }", "\"U\"\n  }");
    CHECK(decode_error(missing) == ErrorCode::kSchemaError);

    std::string renamed = good;
    replace_once(renamed, "\"5,1\"", "\"6,1\"");
    CHECK(decode_error(renamed) == ErrorCode::kSchemaError);

    std::string letter = good;
    replace_once(letter, "\"5,1\": \"V\"", "\"5,1\": \"X\"");
    CHECK(decode_error(letter) == ErrorCode::kSchemaError);

    CHECK(decode_error("{") == ErrorCode::kSchemaError);
    CHECK(decode_error("[]") == ErrorCode::kSchemaError);
    CHECK(decode_error(R"({"matrix": [[1, 0], [0, 1]]})") == ErrorCode::kSchemaError);
    CHECK(decode_error(R"({"matrix": [[1, 0]], "assignment": {"0,0": "U"}})") ==
          ErrorCode::kSchemaError);
    CHECK(decode_error(R"({"matrix": [[1, 2], [1, 2]], "assignment": {"0,0": "U"}})") ==
          ErrorCode::kSchemaError);
    CHECK(decode_error(R"({"matrix": [[1, 0], [0, 1]], "assignment": {"0,0": 3}})") ==
          ErrorCode::kSchemaError);
  }

  TEST_CASE("compatibility is checked") {
    std::string bad = encode_tiling_json(canonical_tiling(kB12, {2, 2, 8}));
    replace_once(bad, "\"0,0\": \"V\"", "\"0,0\": \"U\"");
    CHECK(decode_error(bad) == ErrorCode::kInvalidTiling);
  }

  TEST_CASE("matrices are canonicalized on input") {
    const Tiling t = decode_tiling_json(
        R"({"matrix": [[1, 0], [1, 3]], "assignment": {"0,0": "U", "1,0": "U", "2,0": "U"}})");
    CHECK(t.matrix().raw() == Matrix2{3, 1, 0, 1});
    CHECK(t == constant_tiling(t.matrix(), Lozenge::U));
  }

  TEST_CASE("ascii") {
    CHECK(render_ascii(canonical_tiling(kB12, {2, 2, 8})) == "VWWWWU\nWWWWUV\n");
  }

  TEST_CASE("svg") {
    const Tiling t = canonical_tiling(kB12, {2, 2, 8});
    const std::string svg = render_tiling_svg(t);
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<polygon") == 8 * 4);
    std::size_t v = 0;
    for (std::int64_t x2 = -1; x2 <= 2; ++x2) {
      for (std::int64_t x1 = -1; x1 <= 6; ++x1) v += t.at(LatticePoint{x1, x2}) == Lozenge::V ? 1 : 0;
    }
    CHECK(count(svg, std::string(kColorV)) == v);
    CHECK(svg == render_tiling_svg(canonical_tiling(kB12, {2, 2, 8})));

    const std::string types = render_types_svg(kB12, valid_types(kB12, true));
    CHECK(count(types, "<circle") == 10);
    CHECK(count(types, "#d62728") == 4);
  }
}
