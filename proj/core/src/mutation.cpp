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

#include "lozenge/mutation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "lozenge/error.hpp"
#include "lozenge/height.hpp"

namespace lozenge {
namespace {

std::vector<std::int64_t> height_gap(const Tiling& a, const Tiling& b) {
  const HeightFunction ha(a);
  const HeightFunction hb(b);
  std::vector<std::int64_t> gap(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t diff = ha.base(i) - hb.base(i);
    if (diff % 3 != 0) {
      throw LozengeError(ErrorCode::kTypeMismatch, "height difference is not divisible by 3");
    }
    gap[i] = diff / 3;
  }
  return gap;
}

void check_same_type(const Tiling& a, const Tiling& b) {
  if (a.matrix() != b.matrix()) {
    throw LozengeError(ErrorCode::kTypeMismatch, "tilings live on different quotients");
  }
  const CutType ta = type_of(a);
  const CutType tb = type_of(b);
  if (ta != tb) {
    throw LozengeError(ErrorCode::kTypeMismatch,
                       "types (" + format_cut_type(ta) + ") and (" + format_cut_type(tb) + ") differ");
  }
}

// Follows arrows of the cut quiver from `start`, always taking the smallest
// available direction, until a sink is reached.
std::size_t descend_to_sink(const Tiling& t, std::size_t start) {
  const QuotientIndex& q = t.quotient();
  std::size_t v = start;
  for (std::size_t guard = 0; guard <= t.size(); ++guard) {
    bool moved = false;
    for (Direction d : kDirections) {
      if (!t.removed(v, d)) {
        v = q.shifted(v, step(d));
        moved = true;
        break;
      }
    }
    if (!moved) return v;
  }
  throw LozengeError(ErrorCode::kNonPositiveType, "cut quiver has a directed cycle");
}

// Lowers every positive entry of `gap` to zero by flipping `t` at sinks.
std::vector<std::size_t> drain(Tiling& t, std::vector<std::int64_t>& gap) {
  std::vector<std::size_t> steps;
  while (true) {
    const auto top = std::max_element(gap.begin(), gap.end());
    if (top == gap.end() || *top <= 0) break;
    const std::size_t sink = descend_to_sink(t, static_cast<std::size_t>(top - gap.begin()));
    t = flip(t, sink);
    --gap[sink];
    steps.push_back(sink);
  }
  return steps;
}

}  // namespace

Tiling FlipSequence::apply() const {
  Tiling t = start;
  for (std::size_t s : steps) t = flip(t, s);
  return t;
}

std::int64_t height_distance(const Tiling& a, const Tiling& b) {
  check_same_type(a, b);
  std::int64_t total = 0;
  for (std::int64_t g : height_gap(a, b)) total += g < 0 ? -g : g;
  return total;
}

FlipSequence flip_connect(const Tiling& from, const Tiling& to) {
  check_same_type(from, to);
  const CutType gamma = type_of(from);
  if (!gamma.positive()) {
    throw LozengeError(ErrorCode::kNonPositiveType,
                       "flip connectivity needs all three letters, got (" + format_cut_type(gamma) + ")");
  }
  std::vector<std::int64_t> gap = height_gap(from, to);

  Tiling forward = from;
  std::vector<std::size_t> steps = drain(forward, gap);

  // Remaining entries are <= 0: drain the mirrored gap on the target side
  // and append those flips in reverse, since every flip is an involution.
  for (auto& g : gap) g = -g;
  Tiling backward = to;
  std::vector<std::size_t> tail = drain(backward, gap);
  steps.insert(steps.end(), tail.rbegin(), tail.rend());

  return FlipSequence{from, std::move(steps)};
}

std::vector<Tiling> flip_class(const Tiling& t) {
  if (!validate(t)) throw LozengeError(ErrorCode::kInvalidTiling, "compatibility fails");
  std::unordered_set<std::string> seen{t.key()};
  std::vector<Tiling> out{t};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    const Tiling base = out[current];
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!is_source(base, i) && !is_sink(base, i)) continue;
      Tiling next = flip(base, i);
      if (seen.insert(next.key()).second) {
        out.push_back(std::move(next));
        frontier.push_back(out.size() - 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lozenge
