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

#include <string>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/instance.hpp"
#include "ttr/tree.hpp"

namespace ttr {

/// Wait at a vertex between arriving over an edge labeled `label_in` and
/// leaving over one labeled `label_out`. Always in [1, delta]; equal labels
/// cost a full period.
inline int travel_delay(Label label_in, Label label_out, int delta) {
  if (delta < 1) throw InputError("delta must be at least 1");
  if (label_in < 1 || label_in > delta || label_out < 1 || label_out > delta) {
    throw InputError("travel_delay: labels must lie in [1," + std::to_string(delta) + "]");
  }
  int diff = label_out - label_in;
  return diff > 0 ? diff : diff + delta;
}

/// Largest possible fastest duration over a path with k edges.
inline Duration trivial_bound(int path_length, int delta) {
  if (path_length < 1 || delta < 1) {
    throw InputError("trivial_bound needs path_length >= 1 and delta >= 1");
  }
  return static_cast<Duration>(path_length - 1) * delta + 1;
}

inline std::vector<Vertex> tree_path(const Tree& tree, Vertex s, Vertex t) { return tree.path(s, t); }

/// Duration of the fastest temporal s->t path: 1 plus the travel delays at
/// every internal vertex of the unique tree path.
inline Duration path_duration(const Tree& tree, const PeriodicLabeling& labeling, int delta,
                              Vertex s, Vertex t) {
  auto path = tree.path(s, t);
  Duration d = 1;
  Label prev = labeling[tree.edge_index(path[0], path[1])];
  for (std::size_t i = 2; i < path.size(); ++i) {
    Label next = labeling[tree.edge_index(path[i - 1], path[i])];
    d += travel_delay(prev, next, delta);
    prev = next;
  }
  return d;
}

struct Violation {
  Vertex s = 0;
  Vertex t = 0;
  Duration duration = 0;
  Duration bound = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Realized fastest durations for every ordered pair, plus the pairs whose
/// duration exceeds an explicit bound (only filled in by verify_labeling).
struct DurationReport {
  int n = 0;
  std::vector<Duration> durations;  // row-major n x n, zero diagonal
  std::vector<Violation> violations;

  Duration duration(Vertex s, Vertex t) const {
    return durations.at(static_cast<std::size_t>(s) * n + t);
  }
  bool clean() const { return violations.empty(); }
};

/// O(n^2): one traversal per source carrying the running duration and the
/// label of the edge we arrived on.
inline DurationReport all_pairs_durations(const Tree& tree, const PeriodicLabeling& labeling,
                                          int delta) {
  labeling.validate(tree, delta);
  const int n = tree.vertex_count();
  DurationReport report;
  report.n = n;
  report.durations.assign(static_cast<std::size_t>(n) * n, 0);

  struct Frame {
    Vertex v;
    Vertex from;
    Label in_label;
    Duration duration;
  };
  std::vector<Frame> stack;
  for (Vertex s = 0; s < n; ++s) {
    stack.clear();
    const auto& nb = tree.neighbors(s);
    const auto& inc = tree.incident_edges(s);
    for (std::size_t i = 0; i < nb.size(); ++i) stack.push_back({nb[i], s, labeling[inc[i]], 1});
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      report.durations[static_cast<std::size_t>(s) * n + f.v] = f.duration;
      const auto& vn = tree.neighbors(f.v);
      const auto& ve = tree.incident_edges(f.v);
      for (std::size_t i = 0; i < vn.size(); ++i) {
        if (vn[i] == f.from) continue;
        Label out = labeling[ve[i]];
        stack.push_back({vn[i], f.v, out, f.duration + travel_delay(f.in_label, out, delta)});
      }
    }
  }
  return report;
}

/// All-pairs durations plus every explicit bound the labeling violates.
/// TRIVIAL entries can never be violated.
inline DurationReport verify_labeling(const TtrInstance& instance, const PeriodicLabeling& labeling) {
  DurationReport report = all_pairs_durations(instance.tree(), labeling, instance.delta());
  for (const BoundEntry& b : instance.bounds().explicit_entries()) {
    Duration d = report.duration(b.s, b.t);
    if (d > b.bound) report.violations.push_back({b.s, b.t, d, b.bound});
  }
  return report;
}

/// Adds `amount` to every label modulo delta. Travel delays, and therefore
/// all durations, are unchanged.
inline PeriodicLabeling cyclic_shift(const PeriodicLabeling& labeling, int delta, int amount) {
  if (amount < 0 || amount >= delta) {
    throw InputError("shift amount must lie in [0, delta)");
  }
  std::vector<Label> out(labeling.labels());
  for (Label& l : out) l = ((l - 1 + amount) % delta) + 1;
  return PeriodicLabeling(std::move(out));
}

}  // namespace ttr
