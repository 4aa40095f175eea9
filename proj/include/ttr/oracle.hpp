// Copyright 2026 The ttr Authors
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
#include <string>
#include <utility>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/instance.hpp"

namespace ttr {

struct OracleOptions {
  /// Refuse to enumerate more labelings than this.
  std::uint64_t budget = std::uint64_t{1} << 26;
  /// Pin the first edge to label 1 (sound: a cyclic shift preserves every delay).
  bool fix_first_edge = true;
};

namespace detail {

/// Explicit bounds flattened to the consecutive edge pairs along each path,
/// so checking a labeling is a few array reads per constraint.
class CompiledBounds {
 public:
  explicit CompiledBounds(const TtrInstance& instance) : delta_(instance.delta()) {
    const Tree& tree = instance.tree();
    for (const BoundEntry& b : instance.bounds().explicit_entries()) {
      auto path = tree.path(b.s, b.t);
      if (path.size() < 3) continue;  // adjacent pairs always take exactly 1
      Row row;
      row.bound = b.bound;
      row.begin = turns_.size();
      for (std::size_t i = 2; i < path.size(); ++i) {
        turns_.emplace_back(tree.edge_index(path[i - 2], path[i - 1]),
                            tree.edge_index(path[i - 1], path[i]));
      }
      row.end = turns_.size();
      rows_.push_back(row);
    }
  }

  bool satisfied(const std::vector<Label>& labels) const {
    for (const Row& row : rows_) {
      Duration d = 1;
      for (std::size_t i = row.begin; i < row.end; ++i) {
        int diff = labels[turns_[i].second] - labels[turns_[i].first];
        d += diff > 0 ? diff : diff + delta_;
      }
      if (d > row.bound) return false;
    }
    return true;
  }

 private:
  struct Row {
    Duration bound;
    std::size_t begin;
    std::size_t end;
  };
  int delta_;
  std::vector<Row> rows_;
  std::vector<std::pair<int, int>> turns_;
};

inline std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

/// Visits labelings in lexicographic order (last edge varies fastest) and
/// stops as soon as `visit` returns false.
inline std::uint64_t enumerate_labelings(const TtrInstance& instance, const OracleOptions& options,
                                         const std::function<bool(const std::vector<Label>&)>& visit) {
  const int m = instance.tree().edge_count();
  const int delta = instance.delta();
  const int free_edges = (options.fix_first_edge && m > 0) ? m - 1 : m;
  std::uint64_t space = checked_power(static_cast<std::uint64_t>(delta), free_edges, options.budget);
  if (space > options.budget) {
    throw ResourceError("brute force would examine " + std::to_string(delta) + "^" +
                        std::to_string(free_edges) + " labelings, over the budget of " +
                        std::to_string(options.budget));
  }
  std::vector<Label> labels(static_cast<std::size_t>(m), 1);
  const int first_free = m - free_edges;
  std::uint64_t examined = 0;
  while (true) {
    ++examined;
    if (!visit(labels)) return examined;
    int pos = m - 1;
    while (pos >= first_free && labels[pos] == delta) labels[pos--] = 1;
    if (pos < first_free) return examined;
    ++labels[pos];
  }
}

}  // namespace detail

/// Exhaustive search over all labelings (first edge pinned). Returns the
/// lexicographically smallest satisfying labeling as the witness.
inline OracleResult brute_force_solve(const TtrInstance& instance, const OracleOptions& options = {}) {
  detail::CompiledBounds bounds(instance);
  OracleResult result;
  result.examined = detail::enumerate_labelings(instance, options, [&](const std::vector<Label>& labels) {
    if (!bounds.satisfied(labels)) return true;
    result.answer = Answer::kYes;
    result.witness = PeriodicLabeling(labels);
    return false;
  });
  return result;
}

/// Every satisfying labeling in the (pruned) search space, in lexicographic order.
inline std::vector<PeriodicLabeling> brute_force_all_witnesses(const TtrInstance& instance,
                                                               const OracleOptions& options = {}) {
  detail::CompiledBounds bounds(instance);
  std::vector<PeriodicLabeling> out;
  detail::enumerate_labelings(instance, options, [&](const std::vector<Label>& labels) {
    if (bounds.satisfied(labels)) out.emplace_back(labels);
    return true;
  });
  return out;
}

}  // namespace ttr
