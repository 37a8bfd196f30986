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

#include "lozenge/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lozenge/error.hpp"

namespace lozenge {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& why) {
  throw LozengeError(ErrorCode::kSchemaError, why);
}

std::int64_t entry(const ordered_json& value, const char* what) {
  if (!value.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

struct ScreenPoint {
  double x;
  double y;
};

constexpr double kSqrt3Half = 0.8660254037844386;

// Screen coordinates (y down) of a lattice point: u = (1, 0) and
// v = -(1/2, sqrt(3)/2) in the usual orientation.
ScreenPoint to_screen(LatticePoint p, double scale) {
  return {scale * (static_cast<double>(p.x1) - 0.5 * static_cast<double>(p.x2)),
          scale * (kSqrt3Half * static_cast<double>(p.x2))};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string_view color(Lozenge l) {
  switch (l) {
    case Lozenge::U: return kColorU;
    case Lozenge::V: return kColorV;
    case Lozenge::W: return kColorW;
  }
  return "#000000";
}

// Corners of the lozenge whose up-triangle sits at x.
std::array<LatticePoint, 4> lozenge_corners(LatticePoint x, Lozenge l) {
  switch (l) {
    case Lozenge::U: return {x, x + kStepU + kStepV, x + kStepU, x - kStepV};
    case Lozenge::V: return {x, x + kStepU, x - kStepV, x - kStepU - kStepV};
    case Lozenge::W: return {x, x + kStepU, x + kStepU - kStepV, x - kStepV};
  }
  return {};
}

}  // namespace

std::string encode_tiling_json(const Tiling& t) {
  const PeriodicityMatrix& b = t.matrix();
  std::ostringstream out;
  out << "{\n  \"matrix\": [[" << b.a1() << ", " << b.b1() << "], [" << b.a2() << ", " << b.b2()
      << "]],\n  \"assignment\": {\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "    " << ordered_json(format_point(t.quotient().rep(i))).dump() << ": \""
        << to_char(t.at(i)) << "\"" << (i + 1 < t.size() ? "," : "") << "\n";
  }
  out << "  }\n}\n";
  return out.str();
}

Tiling decode_tiling_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc.contains("assignment")) {
    schema_error("expected an object with \"matrix\" and \"assignment\"");
  }
  const ordered_json& m = doc["matrix"];
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
      m[1].size() != 2) {
    schema_error("\"matrix\" must be [[a1,b1],[a2,b2]]");
  }
  PeriodicityMatrix b = [&] {
    try {
      return canonicalize({entry(m[0][0], "a1"), entry(m[0][1], "b1"), entry(m[1][0], "a2"),
                           entry(m[1][1], "b2")});
    } catch (const LozengeError& e) {
      schema_error(std::string("bad matrix: ") + e.what());
    }
  }();

  const ordered_json& a = doc["assignment"];
  if (!a.is_object()) schema_error("\"assignment\" must be an object");
  const QuotientIndex q(b);
  if (a.size() != q.size()) {
    schema_error("expected " + std::to_string(q.size()) + " cosets, found " + std::to_string(a.size()));
  }
  std::vector<Lozenge> letters(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::string key = format_point(q.rep(i));
    const auto it = a.find(key);
    if (it == a.end()) schema_error("missing coset key \"" + key + "\"");
    if (!it->is_string() || it->get<std::string>().size() != 1) {
      schema_error("coset \"" + key + "\" must map to one of \"U\", \"V\", \"W\"");
    }
    const char c = it->get<std::string>()[0];
    if (c != 'U' && c != 'V' && c != 'W') {
      schema_error("coset \"" + key + "\" has unknown letter");
    }
    letters[i] = lozenge_from_char(c);
  }
  Tiling t(b, std::move(letters));
  if (!validate(t)) throw LozengeError(ErrorCode::kInvalidTiling, "assignment violates compatibility");
  return t;
}

std::string render_ascii(const Tiling& t) {
  const PeriodicityMatrix& b = t.matrix();
  std::string out;
  for (std::int64_t x2 = 0; x2 < b.b2(); ++x2) {
    for (std::int64_t x1 = 0; x1 < b.a1(); ++x1) out.push_back(to_char(t.at(LatticePoint{x1, x2})));
    out.push_back('\n');
  }
  return out;
}

std::string render_tiling_svg(const Tiling& t) {
  const PeriodicityMatrix& b = t.matrix();
  constexpr double kScale = 40.0;
  constexpr double kMargin = 2.0 * kScale;

  std::vector<LatticePoint> anchors;
  for (std::int64_t x2 = -1; x2 <= b.b2(); ++x2) {
    for (std::int64_t x1 = -1; x1 <= b.a1(); ++x1) anchors.push_back({x1, x2});
  }
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const LatticePoint& a : anchors) {
    for (const LatticePoint& c : lozenge_corners(a, t.at(a))) {
      const ScreenPoint s = to_screen(c, kScale);
      if (first) {
        min_x = max_x = s.x;
        min_y = max_y = s.y;
        first = false;
      }
      min_x = std::min(min_x, s.x);
      max_x = std::max(max_x, s.x);
      min_y = std::min(min_y, s.y);
      max_y = std::max(max_y, s.y);
    }
  }
  const double width = max_x - min_x + 2 * kMargin;
  const double height = max_y - min_y + 2 * kMargin;
  auto shift = [&](ScreenPoint s) {
    return ScreenPoint{s.x - min_x + kMargin, s.y - min_y + kMargin};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  svg << "<title>periodic lozenge tiling, B = " << format_matrix(b) << "</title>\n";
  for (const LatticePoint& a : anchors) {
    const bool border = a.x1 < 0 || a.x2 < 0 || a.x1 >= b.a1() || a.x2 >= b.b2();
    const Lozenge l = t.at(a);
    svg << "<polygon points=\"";
    bool lead = true;
    for (const LatticePoint& c : lozenge_corners(a, l)) {
      const ScreenPoint s = shift(to_screen(c, kScale));
      svg << (lead ? "" : " ") << num(s.x) << "," << num(s.y);
      lead = false;
    }
    svg << "\" fill=\"" << color(l) << "\" fill-opacity=\"" << (border ? "0.35" : "1")
        << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  }
  // Points of L1 inside the drawn window.
  for (const LatticePoint& a : anchors) {
    if (!in_lattice(a, b)) continue;
    const ScreenPoint s = shift(to_screen(a, kScale));
    svg << "<circle cx=\"" << num(s.x) << "\" cy=\"" << num(s.y)
        << "\" r=\"4\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_types_svg(const PeriodicityMatrix& b, const std::vector<CutType>& types) {
  constexpr double kScale = 30.0;
  constexpr double kMargin = 40.0;
  const std::int64_t n = b.n();
  const double side = kScale * static_cast<double>(n);
  const double width = side + 2 * kMargin;
  const double height = side * kSqrt3Half + 2 * kMargin;
  // simplex_projection places (0,0,n) at the origin, (0,n,0) at n*u and
  // (n,0,0) at -n*v; flip y for screen coordinates.
  auto place = [&](const CutType& g) {
    const PlanePoint p = simplex_projection(g);
    return ScreenPoint{kMargin + kScale * p.x, height - kMargin - kScale * p.y};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  svg << "<title>cut types for B = " << format_matrix(b) << "</title>\n";
  // Grid lines parallel to the three sides.
  for (std::int64_t k = 0; k <= n; ++k) {
    const std::array<std::pair<CutType, CutType>, 3> lines{{
        {CutType{k, 0, n - k}, CutType{k, n - k, 0}},
        {CutType{0, k, n - k}, CutType{n - k, k, 0}},
        {CutType{0, n - k, k}, CutType{n - k, 0, k}},
    }};
    for (const auto& [from, to] : lines) {
      const ScreenPoint p = place(from);
      const ScreenPoint q = place(to);
      svg << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x)
          << "\" y2=\"" << num(q.y) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  }
  for (const CutType& g : types) {
    const ScreenPoint p = place(g);
    svg << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"5\" fill=\""
        << (g.positive() ? "#d62728" : "#000000") << "\"><title>(" << format_cut_type(g)
        << ")</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LozengeError(ErrorCode::kSchemaError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LozengeError(ErrorCode::kSchemaError, "cannot write " + path);
  out << contents;
}

}  // namespace lozenge
