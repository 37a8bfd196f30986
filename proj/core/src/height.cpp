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

#include "lozenge/height.hpp"

#include <deque>

#include "lozenge/error.hpp"

namespace lozenge {

int step_increment(const Tiling& t, LatticePoint p, Direction d) {
  return t.removed(p, d) ? -2 : 1;
}

HeightFunction::HeightFunction(const Tiling& t) : tiling_(t) {
  if (!validate(t)) throw LozengeError(ErrorCode::kInvalidTiling, "compatibility fails");
  const PeriodicityMatrix& b = t.matrix();

  LatticePoint p{0, 0};
  std::int64_t h = 0;
  for (std::int64_t i = 0; i < b.a1(); ++i, p = p + kStepU) h += step_increment(t, p, Direction::U);
  column1_height_ = h;

  p = {0, 0};
  h = 0;
  for (std::int64_t i = 0; i < b.b1(); ++i, p = p + kStepU) h += step_increment(t, p, Direction::U);
  for (std::int64_t i = 0; i < b.b2(); ++i, p = p + kStepV) h += step_increment(t, p, Direction::V);
  column2_height_ = h;

  // Breadth-first spanning tree over the quotient, both arrow orientations.
  const QuotientIndex& q = t.quotient();
  base_.assign(q.size(), 0);
  std::vector<bool> known(q.size(), false);
  known[0] = true;
  std::deque<std::size_t> frontier{0};
  auto visit = [&](LatticePoint point, std::int64_t value) {
    const std::size_t j = q.index_of(point);
    if (known[j]) return;
    known[j] = true;
    base_[j] = value - linear_part(point - q.rep(j));
    frontier.push_back(j);
  };
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    const LatticePoint r = q.rep(i);
    for (Direction d : kDirections) {
      visit(r + step(d), base_[i] + step_increment(t, r, d));
      const LatticePoint back = r - step(d);
      visit(back, base_[i] - step_increment(t, back, d));
    }
  }
}

std::int64_t HeightFunction::linear_part(LatticePoint y) const {
  const auto c = lattice_coordinates(y, tiling_.matrix());
  if (!c) throw LozengeError(ErrorCode::kNotInLattice, format_point(y) + " is not in L1");
  return c->x1 * column1_height_ + c->x2 * column2_height_;
}

std::int64_t HeightFunction::at(LatticePoint p) const {
  const QuotientIndex& q = tiling_.quotient();
  const std::size_t i = q.index_of(p);
  return base_[i] + linear_part(p - q.rep(i));
}

std::int64_t lattice_height(const PeriodicityMatrix& b, const CutType& gamma, LatticePoint y) {
  if (!in_lattice(y, b)) throw LozengeError(ErrorCode::kNotInLattice, format_point(y) + " is not in L1");
  if (!is_valid_type(b, gamma)) {
    throw LozengeError(ErrorCode::kInvalidType, "(" + format_cut_type(gamma) + ") is not a type");
  }
  const std::int64_t weighted = gamma.g1 * y.x1 + gamma.g2 * y.x2;
  return y.x1 + y.x2 - 3 * (weighted / b.n());
}

}  // namespace lozenge
