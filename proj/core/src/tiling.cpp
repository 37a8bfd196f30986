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

#include "lozenge/tiling.hpp"

#include <algorithm>
#include <numeric>

#include "lozenge/error.hpp"

namespace lozenge {

char to_char(Lozenge l) {
  switch (l) {
    case Lozenge::U: return 'U';
    case Lozenge::V: return 'V';
    case Lozenge::W: return 'W';
  }
  return '?';
}

Lozenge lozenge_from_char(char c) {
  switch (c) {
    case 'U': return Lozenge::U;
    case 'V': return Lozenge::V;
    case 'W': return Lozenge::W;
    default: break;
  }
  throw LozengeError(ErrorCode::kParseError, std::string("unknown lozenge letter '") + c + "'");
}

char to_char(Direction d) {
  switch (d) {
    case Direction::U: return 'u';
    case Direction::V: return 'v';
    case Direction::W: return 'w';
  }
  return '?';
}

LatticePoint step(Direction d) {
  switch (d) {
    case Direction::U: return kStepU;
    case Direction::V: return kStepV;
    case Direction::W: return kStepW;
  }
  return {};
}

Tiling::Tiling(PeriodicityMatrix matrix, std::vector<Lozenge> letters)
    : quotient_(matrix), letters_(std::move(letters)) {
  if (letters_.size() != quotient_.size()) {
    throw LozengeError(ErrorCode::kInvalidTiling,
                       "assignment has " + std::to_string(letters_.size()) + " letters for " +
                           std::to_string(quotient_.size()) + " cosets");
  }
}

std::string Tiling::key() const {
  std::string out;
  out.reserve(letters_.size());
  for (Lozenge l : letters_) out.push_back(to_char(l));
  return out;
}

bool Tiling::removed(LatticePoint p, Direction d) const {
  switch (d) {
    case Direction::U: return at(p) == Lozenge::U;
    case Direction::V: return at(p + kStepV) == Lozenge::V;
    case Direction::W: return at(p - kStepU) == Lozenge::W;
  }
  return false;
}

Tiling constant_tiling(const PeriodicityMatrix& b, Lozenge letter) {
  return Tiling(b, std::vector<Lozenge>(static_cast<std::size_t>(b.n()), letter));
}

bool validate(const Tiling& t) {
  const QuotientIndex& q = t.quotient();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const LatticePoint x = q.rep(i);
    const int hits = (t.at(x) == Lozenge::W) + (t.at(x + kStepU) == Lozenge::V) +
                     (t.at(x - kStepV) == Lozenge::U);
    if (hits != 1) return false;
  }
  return true;
}

CutType type_of(const Tiling& t) {
  if (!validate(t)) throw LozengeError(ErrorCode::kInvalidTiling, "compatibility fails");
  CutType out;
  for (Lozenge l : t.letters()) {
    switch (l) {
      case Lozenge::U: ++out.g1; break;
      case Lozenge::V: ++out.g2; break;
      case Lozenge::W: ++out.g3; break;
    }
  }
  return out;
}

Tiling canonical_tiling(const PeriodicityMatrix& b, const CutType& gamma) {
  if (!is_valid_type(b, gamma)) {
    throw LozengeError(ErrorCode::kInvalidType,
                       "(" + format_cut_type(gamma) + ") is not a type for " + format_matrix(b));
  }
  const QuotientIndex q(b);
  const std::int64_t n = b.n();
  std::vector<Lozenge> letters(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const LatticePoint x = q.rep(i);
    const std::int64_t xi = mod_floor(gamma.g1 * x.x1 + gamma.g2 * x.x2, n);
    if (xi < gamma.g2) {
      letters[i] = Lozenge::V;
    } else if (xi < gamma.g2 + gamma.g3) {
      letters[i] = Lozenge::W;
    } else {
      letters[i] = Lozenge::U;
    }
  }
  return Tiling(b, std::move(letters));
}

Tiling air_tiling(const PeriodicityMatrix& b, const std::array<std::int64_t, 3>& e) {
  const std::int64_t n = b.n();
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != n) {
    throw LozengeError(ErrorCode::kBadExponentSum,
                       "exponents must be nonnegative and sum to " + std::to_string(n));
  }
  auto phi = [&](LatticePoint p) { return mod_floor(e[0] * p.x1 + e[1] * p.x2, n); };
  if (phi(b.column1()) != 0 || phi(b.column2()) != 0) {
    throw LozengeError(ErrorCode::kInvalidType,
                       "the matrix " + format_matrix(b) + " is not in the kernel of the exponents");
  }
  for (int j = 0; j < 3; ++j) {
    if (e[j] == n) return constant_tiling(b, static_cast<Lozenge>(j));
  }
  const QuotientIndex q(b);
  std::vector<Lozenge> letters(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const LatticePoint x = q.rep(i);
    const std::int64_t here = phi(x);
    const std::int64_t below = phi(x - kStepV);
    const std::int64_t right = phi(x + kStepU);
    // The three steps x -> x+u -> x-v -> x advance by e1, e3, e2 and wrap
    // around Z/n exactly once.
    if (below > here) {
      letters[i] = Lozenge::V;
    } else if (right > below) {
      letters[i] = Lozenge::W;
    } else {
      letters[i] = Lozenge::U;
    }
  }
  return Tiling(b, std::move(letters));
}

Tiling air_tiling(std::int64_t n, const std::array<std::int64_t, 3>& e) {
  if (n <= 0 || e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != n) {
    throw LozengeError(ErrorCode::kBadExponentSum,
                       "exponents must be nonnegative and sum to n = " + std::to_string(n));
  }
  const Relation rel{e[0], e[1], n};
  const PeriodicityMatrix b = kernel_lattice(std::span<const Relation>(&rel, 1));
  const std::int64_t d = n / b.n();
  return air_tiling(b, {e[0] / d, e[1] / d, e[2] / d});
}

Cut::Cut(PeriodicityMatrix matrix, std::vector<Arrow> removed)
    : quotient_(matrix), removed_(std::move(removed)) {
  std::sort(removed_.begin(), removed_.end());
  removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
  for (const Arrow& a : removed_) {
    if (a.source >= quotient_.size()) {
      throw LozengeError(ErrorCode::kInvalidCut, "arrow source outside the quotient");
    }
  }
}

bool Cut::contains(const Arrow& a) const {
  return std::binary_search(removed_.begin(), removed_.end(), a);
}

std::size_t Cut::target(const Arrow& a) const {
  return quotient_.shifted(a.source, step(a.direction));
}

namespace {

std::size_t slot(const Arrow& a) {
  return a.source * 3 + static_cast<std::size_t>(a.direction);
}

std::vector<bool> removed_mask(const Cut& c) {
  std::vector<bool> mask(c.quotient().size() * 3, false);
  for (const Arrow& a : c.removed()) mask[slot(a)] = true;
  return mask;
}

// Arrows of the up-triangle x -> x+u -> x-v -> x and of the down-triangle
// x-v -> x-v+u -> x+u -> x-v.
std::array<Arrow, 3> up_triangle(const QuotientIndex& q, LatticePoint x) {
  return {Arrow{q.index_of(x), Direction::U}, Arrow{q.index_of(x + kStepU), Direction::W},
          Arrow{q.index_of(x - kStepV), Direction::V}};
}

std::array<Arrow, 3> down_triangle(const QuotientIndex& q, LatticePoint x) {
  return {Arrow{q.index_of(x - kStepV), Direction::U},
          Arrow{q.index_of(x + kStepU - kStepV), Direction::V},
          Arrow{q.index_of(x + kStepU), Direction::W}};
}

std::array<Arrow, 3> incoming(const QuotientIndex& q, std::size_t v) {
  const LatticePoint x = q.rep(v);
  return {Arrow{q.index_of(x - kStepU), Direction::U}, Arrow{q.index_of(x - kStepV), Direction::V},
          Arrow{q.index_of(x - kStepW), Direction::W}};
}

std::array<Arrow, 3> outgoing(std::size_t v) {
  return {Arrow{v, Direction::U}, Arrow{v, Direction::V}, Arrow{v, Direction::W}};
}

}  // namespace

bool is_valid_cut(const Cut& c) {
  const QuotientIndex& q = c.quotient();
  const std::vector<bool> mask = removed_mask(c);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const LatticePoint x = q.rep(i);
    for (const auto& tri : {up_triangle(q, x), down_triangle(q, x)}) {
      int hits = 0;
      for (const Arrow& a : tri) hits += mask[slot(a)] ? 1 : 0;
      if (hits != 1) return false;
    }
  }
  return true;
}

Cut to_cut(const Tiling& t) {
  const QuotientIndex& q = t.quotient();
  std::vector<Arrow> arrows;
  arrows.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto tri = up_triangle(q, q.rep(i));
    switch (t.at(i)) {
      case Lozenge::U: arrows.push_back(tri[0]); break;
      case Lozenge::W: arrows.push_back(tri[1]); break;
      case Lozenge::V: arrows.push_back(tri[2]); break;
    }
  }
  return Cut(t.matrix(), std::move(arrows));
}

Tiling from_cut(const Cut& c) {
  if (!is_valid_cut(c)) {
    throw LozengeError(ErrorCode::kInvalidCut, "some unit triangle does not lose exactly one arrow");
  }
  const QuotientIndex& q = c.quotient();
  const std::vector<bool> mask = removed_mask(c);
  std::vector<Lozenge> letters(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto tri = up_triangle(q, q.rep(i));
    if (mask[slot(tri[0])]) {
      letters[i] = Lozenge::U;
    } else if (mask[slot(tri[1])]) {
      letters[i] = Lozenge::W;
    } else {
      letters[i] = Lozenge::V;
    }
  }
  return Tiling(c.matrix(), std::move(letters));
}

bool is_higher_preprojective(const Cut& c) {
  if (!is_valid_cut(c)) return false;
  bool seen[3] = {false, false, false};
  for (const Arrow& a : c.removed()) seen[static_cast<int>(a.direction)] = true;
  return seen[0] && seen[1] && seen[2];
}

bool is_acyclic(const Cut& c) {
  if (!is_valid_cut(c)) throw LozengeError(ErrorCode::kInvalidCut, "not a valid cut");
  const QuotientIndex& q = c.quotient();
  const std::vector<bool> mask = removed_mask(c);
  const std::size_t n = q.size();
  // Iterative three-colour depth-first search.
  enum class Mark : std::uint8_t { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<std::pair<std::size_t, int>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::kNew) continue;
    stack.push_back({root, 0});
    mark[root] = Mark::kActive;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == 3) {
        mark[v] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const Arrow a{v, kDirections[static_cast<std::size_t>(next++)]};
      if (mask[slot(a)]) continue;
      const std::size_t w = c.target(a);
      if (mark[w] == Mark::kActive) return false;
      if (mark[w] == Mark::kNew) {
        mark[w] = Mark::kActive;
        stack.push_back({w, 0});
      }
    }
  }
  return true;
}

Cut mutate(const Cut& c, std::size_t vertex) {
  const QuotientIndex& q = c.quotient();
  if (vertex >= q.size()) throw LozengeError(ErrorCode::kNotFlippable, "vertex outside the quotient");
  const auto in = incoming(q, vertex);
  const auto out = outgoing(vertex);
  const auto all_in = [&c](const std::array<Arrow, 3>& arrows) {
    return std::all_of(arrows.begin(), arrows.end(), [&c](const Arrow& a) { return c.contains(a); });
  };
  std::vector<Arrow> next;
  if (all_in(in)) {
    for (const Arrow& a : c.removed()) {
      if (c.target(a) != vertex) next.push_back(a);
    }
    next.insert(next.end(), out.begin(), out.end());
  } else if (all_in(out)) {
    for (const Arrow& a : c.removed()) {
      if (a.source != vertex) next.push_back(a);
    }
    next.insert(next.end(), in.begin(), in.end());
  } else {
    throw LozengeError(ErrorCode::kNotFlippable,
                       "vertex " + format_point(q.rep(vertex)) + " is neither a source nor a sink");
  }
  return Cut(c.matrix(), std::move(next));
}

bool is_source(const Tiling& t, std::size_t index) {
  const LatticePoint x = t.quotient().rep(index);
  return t.at(x - kStepU) == Lozenge::U && t.at(x) == Lozenge::V && t.at(x + kStepV) == Lozenge::W;
}

bool is_sink(const Tiling& t, std::size_t index) {
  const LatticePoint x = t.quotient().rep(index);
  return t.at(x) == Lozenge::U && t.at(x - kStepU) == Lozenge::W && t.at(x + kStepV) == Lozenge::V;
}

Extremes sources_and_sinks(const Tiling& t) {
  if (!validate(t)) throw LozengeError(ErrorCode::kInvalidTiling, "compatibility fails");
  Extremes out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (is_source(t, i)) out.sources.push_back(i);
    if (is_sink(t, i)) out.sinks.push_back(i);
  }
  return out;
}

Tiling flip(const Tiling& t, std::size_t index) {
  if (index >= t.size()) throw LozengeError(ErrorCode::kNotFlippable, "coset outside the quotient");
  const QuotientIndex& q = t.quotient();
  const LatticePoint x = q.rep(index);
  const std::size_t left = q.index_of(x - kStepU);
  const std::size_t below = q.index_of(x + kStepV);
  std::vector<Lozenge> letters = t.letters();
  if (is_source(t, index)) {
    letters[left] = Lozenge::W;
    letters[index] = Lozenge::U;
    letters[below] = Lozenge::V;
  } else if (is_sink(t, index)) {
    letters[left] = Lozenge::U;
    letters[index] = Lozenge::V;
    letters[below] = Lozenge::W;
  } else {
    throw LozengeError(ErrorCode::kNotFlippable,
                       "coset " + format_point(x) + " is neither a source nor a sink");
  }
  return Tiling(t.matrix(), std::move(letters));
}

}  // namespace lozenge
