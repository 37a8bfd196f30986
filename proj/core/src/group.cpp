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

#include "lozenge/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "lozenge/cut_type.hpp"
#include "lozenge/error.hpp"

namespace lozenge {
namespace {

using Element = std::array<std::int64_t, 3>;

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  std::vector<DiagonalGenerator> parse() {
    std::vector<DiagonalGenerator> out;
    out.push_back(generator());
    while (skip_space(), pos_ < text_.size()) {
      expect(';');
      out.push_back(generator());
    }
    return out;
  }

 private:
  DiagonalGenerator generator() {
    expect('1');
    expect('/');
    DiagonalGenerator g;
    g.order = integer();
    expect('(');
    g.exponents[0] = integer();
    expect(',');
    g.exponents[1] = integer();
    expect(',');
    g.exponents[2] = integer();
    expect(')');
    return g;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw LozengeError(ErrorCode::kParseError, "group spec '" + std::string(text_) + "' at offset " +
                                                   std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupEmbedding GroupEmbedding::from_generators(std::vector<DiagonalGenerator> generators) {
  if (generators.empty()) {
    throw LozengeError(ErrorCode::kParseError, "a group needs at least one generator");
  }
  std::int64_t modulus = 1;
  for (DiagonalGenerator& g : generators) {
    if (g.order <= 0) throw LozengeError(ErrorCode::kParseError, "generator order must be positive");
    if (g.order > kMaxIndex) throw LozengeError(ErrorCode::kOutOfRange, "generator order too large");
    for (auto& e : g.exponents) e = mod_floor(e, g.order);
    if ((g.exponents[0] + g.exponents[1] + g.exponents[2]) % g.order != 0) {
      throw LozengeError(ErrorCode::kDeterminantNotOne,
                         "exponents of 1/" + std::to_string(g.order) + "(...) do not sum to 0 mod " +
                             std::to_string(g.order));
    }
    modulus = std::lcm(modulus, g.order);
    if (modulus > kMaxIndex) throw LozengeError(ErrorCode::kOutOfRange, "group exponent too large");
  }

  // Close the subgroup of (Q/Z)^3 spanned by the exponent vectors.
  std::vector<Element> steps;
  for (const DiagonalGenerator& g : generators) {
    const std::int64_t scale = modulus / g.order;
    steps.push_back({g.exponents[0] * scale, g.exponents[1] * scale, g.exponents[2] * scale});
  }
  std::set<Element> seen{{0, 0, 0}};
  std::deque<Element> frontier{{0, 0, 0}};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (const Element& s : steps) {
      Element y{(x[0] + s[0]) % modulus, (x[1] + s[1]) % modulus, (x[2] + s[2]) % modulus};
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(seen.size()) > kMaxIndex) {
          throw LozengeError(ErrorCode::kOutOfRange, "group order exceeds 10^6");
        }
        frontier.push_back(y);
      }
    }
  }

  std::vector<Relation> relations;
  for (const DiagonalGenerator& g : generators) {
    relations.push_back({g.exponents[0], g.exponents[1], g.order});
  }
  const PeriodicityMatrix matrix = kernel_lattice(relations);
  if (matrix.n() != static_cast<std::int64_t>(seen.size())) {
    throw LozengeError(ErrorCode::kNotFaithful,
                       "rho1 and rho2 generate a character group of order " +
                           std::to_string(matrix.n()) + " but |G| = " + std::to_string(seen.size()));
  }
  return GroupEmbedding(std::move(generators), {seen.begin(), seen.end()}, modulus, matrix);
}

bool GroupEmbedding::character_trivial(int j) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [j](const DiagonalGenerator& g) { return g.exponents[j] == 0; });
}

GroupEmbedding parse_group(std::string_view spec) {
  return GroupEmbedding::from_generators(GroupParser(spec).parse());
}

std::string format_group(const GroupEmbedding& g) {
  std::string out;
  for (const DiagonalGenerator& gen : g.generators()) {
    if (!out.empty()) out += "; ";
    out += "1/" + std::to_string(gen.order) + "(" + std::to_string(gen.exponents[0]) + "," +
           std::to_string(gen.exponents[1]) + "," + std::to_string(gen.exponents[2]) + ")";
  }
  return out;
}

bool has_trivial_character(const GroupEmbedding& g) {
  return g.character_trivial(0) || g.character_trivial(1) || g.character_trivial(2);
}

bool is_klein_four(const GroupEmbedding& g) {
  if (g.order() != 4) return false;
  const std::int64_t m = g.exponent_modulus();
  return std::all_of(g.elements().begin(), g.elements().end(), [m](const Element& x) {
    return (2 * x[0]) % m == 0 && (2 * x[1]) % m == 0 && (2 * x[2]) % m == 0;
  });
}

bool admits_cut_group_form(const GroupEmbedding& g) {
  return !is_klein_four(g) && !has_trivial_character(g);
}

bool admits_cut_matrix_form(const PeriodicityMatrix& b) {
  return !valid_types(b, /*include_boundary=*/false).empty();
}

}  // namespace lozenge
