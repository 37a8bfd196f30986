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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lozenge/group.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

inline constexpr std::int64_t kDefaultOracleBound = 16;

/// LOZENGE_MAX_N if set to a positive integer, else kDefaultOracleBound.
std::int64_t oracle_bound_from_env();

/// Backtracking over cosets in index order with branch order U, V, W and
/// pruning on the exactly-one rule. Visits tilings in lexicographic order
/// of their letter strings; stops early when the visitor returns false.
/// Throws kBoundExceeded when n > bound.
void for_each_tiling(const PeriodicityMatrix& b, std::int64_t bound,
                     const std::function<bool(const Tiling&)>& visit);

/// Every L1-periodic tiling, sorted and duplicate-free.
std::vector<Tiling> enumerate_all_tilings(const PeriodicityMatrix& b,
                                          std::int64_t bound = kDefaultOracleBound);

/// First tiling (in enumeration order) that uses all three letters.
std::optional<Tiling> find_full_tiling(const PeriodicityMatrix& b, std::int64_t bound);

/// All reduced periodicity matrices with index at most max_n, ordered by
/// (n, a1, b1).
std::vector<PeriodicityMatrix> canonical_matrices(std::int64_t max_n);

/// Every subgroup of diagonal SL3 of order at most max_order, once each,
/// presented by one or two generators.
std::vector<GroupEmbedding> sweep_groups(std::int64_t max_order);

struct CheckResult {
  std::string theorem;
  std::string instance;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const Report& other);
  /// One "PASS|FAIL theorem instance: detail" line per check.
  std::string format() const;
};

/// The set of types of all tilings equals valid_types(b, true).
Report verify_type_theorem(const PeriodicityMatrix& b, std::int64_t bound);

/// For each positive type the flip class of the canonical tiling is the set
/// of all tilings of that type, and flip_connect joins same-type pairs.
/// When a type has more than max_pairs ordered pairs, a fixed-seed sample
/// of max_pairs of them is checked.
Report verify_mutation_theorem(const PeriodicityMatrix& b, std::int64_t bound,
                               std::size_t max_pairs = 400);

/// Group criterion, lattice criterion and oracle existence agree for every
/// group of order at most max_order.
Report verify_classification(std::int64_t max_order);

}  // namespace lozenge
