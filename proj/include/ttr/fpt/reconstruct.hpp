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
#include <deque>
#include <string>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/fpt/model.hpp"

namespace ttr::fpt {

/// Solved travel delays. x[v] is the delay at a degree-2 vertex from its
/// smaller neighbor to its larger one; y[v] is a degree x degree matrix over
/// neighbor slots, y[v][a * deg + b] = delay from neighbor a to neighbor b.
struct DelayAssignment {
  std::vector<std::int64_t> x;
  std::vector<std::vector<std::int64_t>> y;

  std::int64_t delay(const Tree& tree, int delta, Vertex v, Vertex from, Vertex to) const {
    if (tree.degree(v) == 2) return from < to ? x.at(v) : delta - x.at(v);
    const int deg = tree.degree(v);
    return y.at(v).at(static_cast<std::size_t>(detail::neighbor_slot(tree, v, from)) * deg +
                      detail::neighbor_slot(tree, v, to));
  }
};

namespace detail {

inline std::int64_t integral_value(const RationalVector& solution, int var, const std::string& what) {
  const Rational& r = solution.at(var);
  if (!r.is_integer()) throw InternalError(what + " has non-integral value " + r.to_string());
  return r.num();
}

}  // namespace detail

inline DelayAssignment delays_from_full(const Tree& tree, const FullMilp& milp, const RationalVector& solution) {
  DelayAssignment d;
  d.x.assign(static_cast<std::size_t>(tree.vertex_count()), 0);
  d.y.resize(static_cast<std::size_t>(tree.vertex_count()));
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (milp.x[v] >= 0) d.x[v] = detail::integral_value(solution, milp.x[v], "x" + std::to_string(v));
  }
  for (const auto& [key, var] : milp.y) {
    const auto [v, u, w] = key;
    const int deg = tree.degree(v);
    d.y[v].resize(static_cast<std::size_t>(deg) * deg, 0);
    d.y[v][static_cast<std::size_t>(detail::neighbor_slot(tree, v, u)) * deg + detail::neighbor_slot(tree, v, w)] =
        detail::integral_value(solution, var, "y" + std::to_string(v));
  }
  return d;
}

inline DelayAssignment delays_from_compact(const TtrInstance& instance, const VertexClasses& classes,
                                           const CompactMilp& milp, const RationalVector& solution) {
  const Tree& tree = instance.tree();
  const int delta = instance.delta();
  DelayAssignment d;
  d.x.assign(static_cast<std::size_t>(tree.vertex_count()), 0);
  d.y.resize(static_cast<std::size_t>(tree.vertex_count()));
  for (Vertex v : classes.degree_two) d.x[v] = detail::integral_value(solution, milp.x[v], "x" + std::to_string(v));
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) {
    const Vertex v = classes.high_degree[i];
    const int deg = tree.degree(v);
    const LocalConfiguration& conf = milp.sigma.local[i];
    d.y[v].assign(static_cast<std::size_t>(deg) * deg, 0);
    for (int a = 0; a < deg; ++a) {
      for (int b = 0; b < deg; ++b) {
        if (a == b) continue;
        std::int64_t value = delta;
        if (conf.rank[a] != conf.rank[b]) {
          const std::int64_t za = detail::integral_value(solution, milp.part[i][conf.rank[a]], "z");
          const std::int64_t zb = detail::integral_value(solution, milp.part[i][conf.rank[b]], "z");
          value = zb - za + (conf.rank[a] > conf.rank[b] ? delta : 0);
        }
        d.y[v][static_cast<std::size_t>(a) * deg + b] = value;
      }
    }
  }
  return d;
}

/// Labels the lexicographically smallest edge 1 and propagates outward so
/// that every realized delay equals the solved one; then checks every vertex
/// and ordered neighbor pair.
inline PeriodicLabeling reconstruct_labeling(const Tree& tree, int delta, const DelayAssignment& delays) {
  const int m = tree.edge_count();
  std::vector<Label> labels(static_cast<std::size_t>(m), 0);
  if (m == 0) return PeriodicLabeling(labels);
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const auto& nb = tree.neighbors(v);
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a == b) continue;
        const std::int64_t t = delays.delay(tree, delta, v, a, b);
        if (t < 1 || t > delta) {
          throw InternalError("solved delay " + std::to_string(t) + " out of range at vertex " + std::to_string(v));
        }
      }
    }
  }
  labels[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    const Edge& ed = tree.edge(e);
    for (Vertex v : {ed.u, ed.v}) {
      const Vertex from = ed.other(v);
      const auto& nb = tree.neighbors(v);
      const auto& inc = tree.incident_edges(v);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        const int f = inc[j];
        if (labels[f] != 0) continue;
        const std::int64_t t = delays.delay(tree, delta, v, from, nb[j]);
        labels[f] = static_cast<Label>((labels[e] - 1 + t) % delta) + 1;
        queue.push_back(f);
      }
    }
  }
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const auto& nb = tree.neighbors(v);
    const auto& inc = tree.incident_edges(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = 0; b < nb.size(); ++b) {
        if (a == b) continue;
        if (travel_delay(labels[inc[a]], labels[inc[b]], delta) != delays.delay(tree, delta, v, nb[a], nb[b])) {
          throw InternalError("solved delays are inconsistent at vertex " + std::to_string(v));
        }
      }
    }
  }
  return PeriodicLabeling(std::move(labels));
}

}  // namespace ttr::fpt
