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

#include "lozenge/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lozenge/cut_type.hpp"
#include "lozenge/error.hpp"
#include "lozenge/height.hpp"
#include "lozenge/mutation.hpp"

namespace lozenge {
namespace {

constexpr std::uint8_t kUnset = 3;

// Down-triangle at x asks for exactly one of T(x) = W, T(x+u) = V, T(x-v) = U.
struct Condition {
  std::size_t cell;
  Lozenge letter;
};
using Triangle = std::array<Condition, 3>;

class Backtracker {
 public:
  Backtracker(const PeriodicityMatrix& b, const std::function<bool(const Tiling&)>& visit)
      : matrix_(b), visit_(visit) {
    const QuotientIndex q(b);
    const std::size_t n = q.size();
    triangles_.reserve(n);
    touching_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const LatticePoint x = q.rep(i);
      const Triangle tri{Condition{i, Lozenge::W}, Condition{q.index_of(x + kStepU), Lozenge::V},
                         Condition{q.index_of(x - kStepV), Lozenge::U}};
      triangles_.push_back(tri);
      for (const Condition& c : tri) {
        auto& list = touching_[c.cell];
        if (std::find(list.begin(), list.end(), i) == list.end()) list.push_back(i);
      }
    }
    cells_.assign(n, kUnset);
  }

  void run() { descend(0); }

 private:
  bool consistent(std::size_t triangle) const {
    int satisfied = 0;
    bool complete = true;
    for (const Condition& c : triangles_[triangle]) {
      if (cells_[c.cell] == kUnset) {
        complete = false;
      } else if (cells_[c.cell] == static_cast<std::uint8_t>(c.letter)) {
        ++satisfied;
      }
    }
    return satisfied <= 1 && (!complete || satisfied == 1);
  }

  // Returns false once the visitor asked to stop.
  bool descend(std::size_t cell) {
    if (cell == cells_.size()) {
      std::vector<Lozenge> letters(cells_.size());
      for (std::size_t i = 0; i < cells_.size(); ++i) letters[i] = static_cast<Lozenge>(cells_[i]);
      return visit_(Tiling(matrix_, std::move(letters)));
    }
    for (std::uint8_t letter = 0; letter < 3; ++letter) {
      cells_[cell] = letter;
      const auto& list = touching_[cell];
      const bool ok = std::all_of(list.begin(), list.end(),
                                  [this](std::size_t tri) { return consistent(tri); });
      if (ok && !descend(cell + 1)) {
        cells_[cell] = kUnset;
        return false;
      }
    }
    cells_[cell] = kUnset;
    return true;
  }

  PeriodicityMatrix matrix_;
  const std::function<bool(const Tiling&)>& visit_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::uint8_t> cells_;
};

void check_bound(const PeriodicityMatrix& b, std::int64_t bound) {
  if (b.n() > bound) {
    throw LozengeError(ErrorCode::kBoundExceeded, "n = " + std::to_string(b.n()) +
                                                      " exceeds the oracle bound " +
                                                      std::to_string(bound));
  }
}

std::string instance_name(const PeriodicityMatrix& b) { return "B=[" + format_matrix(b) + "]"; }

std::string format_types(const std::set<CutType>& types) {
  std::string out;
  for (const CutType& t : types) {
    if (!out.empty()) out += " ";
    out += "(" + format_cut_type(t) + ")";
  }
  return out.empty() ? "{}" : out;
}

}  // namespace

std::int64_t oracle_bound_from_env() {
  const char* raw = std::getenv("LOZENGE_MAX_N");
  if (raw == nullptr) return kDefaultOracleBound;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) return kDefaultOracleBound;
  return static_cast<std::int64_t>(value);
}

void for_each_tiling(const PeriodicityMatrix& b, std::int64_t bound,
                     const std::function<bool(const Tiling&)>& visit) {
  check_bound(b, bound);
  Backtracker(b, visit).run();
}

std::vector<Tiling> enumerate_all_tilings(const PeriodicityMatrix& b, std::int64_t bound) {
  std::vector<Tiling> out;
  for_each_tiling(b, bound, [&out](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<Tiling> find_full_tiling(const PeriodicityMatrix& b, std::int64_t bound) {
  std::optional<Tiling> found;
  for_each_tiling(b, bound, [&found](const Tiling& t) {
    const auto& l = t.letters();
    const bool full = std::find(l.begin(), l.end(), Lozenge::U) != l.end() &&
                      std::find(l.begin(), l.end(), Lozenge::V) != l.end() &&
                      std::find(l.begin(), l.end(), Lozenge::W) != l.end();
    if (full) found = t;
    return !full;
  });
  return found;
}

std::vector<PeriodicityMatrix> canonical_matrices(std::int64_t max_n) {
  std::vector<PeriodicityMatrix> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t a1 = 1; a1 <= n; ++a1) {
      if (n % a1 != 0) continue;
      for (std::int64_t b1 = 0; b1 < a1; ++b1) out.push_back(canonicalize({a1, b1, 0, n / a1}));
    }
  }
  return out;
}

std::vector<GroupEmbedding> sweep_groups(std::int64_t max_order) {
  std::vector<GroupEmbedding> out;
  std::set<std::vector<std::array<std::int64_t, 3>>> seen;

  auto consider = [&](std::vector<DiagonalGenerator> gens) {
    GroupEmbedding g = GroupEmbedding::from_generators(std::move(gens));
    if (g.order() > max_order) return;
    // Rescale elements to the group exponent so that equal subgroups given
    // by different presentations compare equal.
    std::int64_t common = g.exponent_modulus();
    for (const auto& e : g.elements()) {
      for (std::int64_t c : e) common = std::gcd(common, c);
    }
    std::vector<std::array<std::int64_t, 3>> key;
    for (const auto& e : g.elements()) key.push_back({e[0] / common, e[1] / common, e[2] / common});
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
  };
  auto generators_of_order = [](std::int64_t n) {
    std::vector<DiagonalGenerator> gens;
    for (std::int64_t e1 = 0; e1 < n; ++e1) {
      for (std::int64_t e2 = 0; e2 < n; ++e2) {
        gens.push_back({n, {e1, e2, mod_floor(-e1 - e2, n)}});
      }
    }
    return gens;
  };

  for (std::int64_t n = 1; n <= max_order; ++n) {
    for (const DiagonalGenerator& g : generators_of_order(n)) consider({g});
  }
  // Non-cyclic subgroups are C_m x C_k with m | k; one generator of each
  // order suffices.
  for (std::int64_t m = 2; m * m <= max_order; ++m) {
    for (std::int64_t k = m; m * k <= max_order; k += m) {
      const auto first = generators_of_order(m);
      const auto second = generators_of_order(k);
      for (const DiagonalGenerator& g : first) {
        for (const DiagonalGenerator& h : second) consider({g, h});
      }
    }
  }
  return out;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::format() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.theorem << " " << c.instance;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

Report verify_type_theorem(const PeriodicityMatrix& b, std::int64_t bound) {
  std::set<CutType> census;
  for_each_tiling(b, bound, [&census](const Tiling& t) {
    census.insert(type_of(t));
    return true;
  });
  const auto expected_list = valid_types(b, /*include_boundary=*/true);
  const std::set<CutType> expected(expected_list.begin(), expected_list.end());
  Report report;
  CheckResult check{"type-theorem", instance_name(b), census == expected, ""};
  check.detail = check.passed ? std::to_string(census.size()) + " types"
                              : "oracle " + format_types(census) + " vs divisibility " +
                                    format_types(expected);
  report.checks.push_back(check);
  return report;
}

Report verify_mutation_theorem(const PeriodicityMatrix& b, std::int64_t bound,
                               std::size_t max_pairs) {
  std::map<CutType, std::vector<Tiling>> by_type;
  for_each_tiling(b, bound, [&by_type](const Tiling& t) {
    by_type[type_of(t)].push_back(t);
    return true;
  });

  Report report;
  std::mt19937_64 rng(0x5eed'0000ULL + static_cast<std::uint64_t>(b.n()));
  for (const auto& [gamma, tilings] : by_type) {
    const std::string instance = instance_name(b) + " type=(" + format_cut_type(gamma) + ")";
    if (!gamma.positive()) {
      if (tilings.size() < 2) continue;
      bool rejected = false;
      try {
        flip_connect(tilings.front(), tilings.back());
      } catch (const LozengeError& e) {
        rejected = e.code() == ErrorCode::kNonPositiveType;
      }
      report.checks.push_back({"boundary-rejected", instance, rejected,
                               rejected ? "" : "flip_connect accepted a boundary type"});
      continue;
    }

    const std::vector<Tiling> cls = flip_class(canonical_tiling(b, gamma));
    const bool same = cls == tilings;
    report.checks.push_back({"mutation-class", instance, same,
                             "class " + std::to_string(cls.size()) + ", oracle " +
                                 std::to_string(tilings.size())});

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t k = tilings.size();
    if (k * k <= max_pairs) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) pairs.push_back({i, j});
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      for (std::size_t s = 0; s < max_pairs; ++s) pairs.push_back({pick(rng), pick(rng)});
    }
    std::size_t failures = 0;
    std::string first_failure;
    for (const auto& [i, j] : pairs) {
      bool ok = false;
      try {
        const FlipSequence seq = flip_connect(tilings[i], tilings[j]);
        ok = seq.apply() == tilings[j] &&
             static_cast<std::int64_t>(seq.steps.size()) <= height_distance(tilings[i], tilings[j]);
      } catch (const LozengeError& e) {
        if (first_failure.empty()) first_failure = e.what();
      }
      if (!ok) ++failures;
    }
    report.checks.push_back({"flip-connect", instance, failures == 0,
                             std::to_string(pairs.size()) + " pairs" +
                                 (failures ? ", " + std::to_string(failures) + " failed " + first_failure
                                           : std::string())});
  }
  return report;
}

Report verify_classification(std::int64_t max_order) {
  Report report;
  std::map<PeriodicityMatrix, bool> oracle_cache;
  for (const GroupEmbedding& g : sweep_groups(max_order)) {
    const bool by_group = admits_cut_group_form(g);
    const bool by_matrix = admits_cut_matrix_form(g.matrix());
    auto it = oracle_cache.find(g.matrix());
    if (it == oracle_cache.end()) {
      it = oracle_cache.emplace(g.matrix(), find_full_tiling(g.matrix(), max_order).has_value()).first;
    }
    const bool by_oracle = it->second;
    const bool agree = by_group == by_matrix && by_matrix == by_oracle;
    std::string detail = std::string(by_group ? "admits" : "denies");
    if (!agree) {
      detail = std::string("group ") + (by_group ? "admits" : "denies") + ", matrix " +
               (by_matrix ? "admits" : "denies") + ", oracle " + (by_oracle ? "admits" : "denies");
    }
    report.checks.push_back({"classification",
                             "G=<" + format_group(g) + "> |G|=" + std::to_string(g.order()) + " " +
                                 instance_name(g.matrix()),
                             agree, detail});
  }
  return report;
}

}  // namespace lozenge
