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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/instance.hpp"

namespace ttr::reductions {

/// Simple undirected graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique

  static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing vertex");
      }
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph{n, std::move(edges)};
  }
};

using Coloring = std::vector<int>;  // color in [1, colors] per vertex

/// Star with center 0 and leaf i + 1 for graph vertex i.
inline Vertex coloring_leaf(int graph_vertex) { return graph_vertex + 1; }

inline TtrInstance from_coloring(const SimpleGraph& g, int delta) {
  if (delta < 3) throw InputError("coloring reduction needs delta >= 3, got " + std::to_string(delta));
  if (g.n < 1) throw InputError("coloring reduction needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < g.n; ++v) edges.emplace_back(0, coloring_leaf(v));
  Tree tree = Tree::from_edges(g.n + 1, edges);
  BoundMatrix bounds(g.n + 1);
  for (int v = 0; v < g.n; ++v) bounds.set_symmetric(0, coloring_leaf(v), 1);
  for (const auto& [u, v] : g.edges) bounds.set_symmetric(coloring_leaf(u), coloring_leaf(v), delta);
  return TtrInstance(std::move(tree), delta, std::move(bounds));
}

namespace detail {

inline void check_proper(const SimpleGraph& g, const Coloring& c, int colors) {
  if (static_cast<int>(c.size()) != g.n) {
    throw ValidationError("coloring has " + std::to_string(c.size()) + " entries, expected " + std::to_string(g.n));
  }
  for (int v = 0; v < g.n; ++v) {
    if (c[v] < 1 || c[v] > colors) {
      throw ValidationError("vertex " + std::to_string(v) + " has color " + std::to_string(c[v]) + " outside [1," +
                            std::to_string(colors) + "]");
    }
  }
  for (const auto& [u, v] : g.edges) {
    if (c[u] == c[v]) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has both ends colored " +
                            std::to_string(c[u]));
    }
  }
}

}  // namespace detail

/// λ({c, v}) := χ(v).
inline PeriodicLabeling coloring_to_labeling(const SimpleGraph& g, int delta, const Coloring& coloring) {
  detail::check_proper(g, coloring, delta);
  const TtrInstance star = from_coloring(g, delta);
  std::vector<Label> labels(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) labels[star.tree().edge_index(0, coloring_leaf(v))] = coloring[v];
  return PeriodicLabeling(std::move(labels));
}

/// χ(v) := λ({c, v}); throws ValidationError when the result is improper.
inline Coloring labeling_to_coloring(const SimpleGraph& g, int delta, const PeriodicLabeling& labeling) {
  const TtrInstance star = from_coloring(g, delta);
  labeling.validate(star.tree(), delta);
  Coloring c(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) c[v] = labeling[star.tree().edge_index(0, coloring_leaf(v))];
  for (const auto& [u, v] : g.edges) {
    if (c[u] == c[v]) {
      throw ValidationError("pair (" + std::to_string(coloring_leaf(u)) + "," + std::to_string(coloring_leaf(v)) +
                            ") has duration " + std::to_string(delta + 1) + " > bound " + std::to_string(delta) +
                            ": edge (" + std::to_string(u) + "," + std::to_string(v) + ") is monochromatic");
    }
  }
  return c;
}

}  // namespace ttr::reductions
