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

#include <string>
#include <string_view>
#include <vector>

#include "lozenge/cut_type.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

/// {"matrix":[[a1,b1],[a2,b2]],"assignment":{"x1,x2":"U", ...}} with keys
/// in coset index order. Output is byte-stable.
std::string encode_tiling_json(const Tiling& t);

/// Throws kSchemaError for malformed documents or a wrong key set, and
/// kInvalidTiling when the letters violate compatibility.
Tiling decode_tiling_json(std::string_view text);

/// Letter grid over the fundamental domain: one line per x2 from 0 to
/// b2 - 1, one character per x1 from 0 to a1 - 1.
std::string render_ascii(const Tiling& t);

/// Fill colours of the three lozenge letters in SVG output (also listed in
/// docs/tiling.schema.json).
inline constexpr std::string_view kColorU = "#4e79a7";
inline constexpr std::string_view kColorV = "#f28e2b";
inline constexpr std::string_view kColorW = "#59a14f";

/// Lozenges of the fundamental domain plus a one-cell periodic border.
std::string render_tiling_svg(const Tiling& t);

/// The simplex of sum-n triples with the given types marked: positive
/// types in red, boundary types in black.
std::string render_types_svg(const PeriodicityMatrix& b, const std::vector<CutType>& types);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace lozenge
