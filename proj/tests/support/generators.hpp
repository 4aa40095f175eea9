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
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/instance.hpp"

namespace ttr::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniform labeled tree on n vertices from a random Prüfer sequence.
inline Tree random_tree(int n, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = uniform(rng, 0, n - 1);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    for (int c : code) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(leaf, c);
      if (--degree[c] == 1) leaves.insert(c);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
  }
  return Tree::from_edges(n, edges);
}

inline PeriodicLabeling random_labeling(const Tree& tree, int delta, Rng& rng) {
  std::vector<Label> labels(static_cast<std::size_t>(tree.edge_count()));
  for (Label& l : labels) l = uniform(rng, 1, delta);
  return PeriodicLabeling(std::move(labels));
}

/// Bounds around the durations of a hidden random labeling: each ordered pair
/// at distance >= 2 is explicit with probability `density`, set to the
/// hidden duration plus a slack in [-1, 2]. Mixes YES and NO instances.
inline TtrInstance random_instance(const Tree& tree, int delta, double density, Rng& rng) {
  const PeriodicLabeling hidden = random_labeling(tree, delta, rng);
  const DurationReport d = all_pairs_durations(tree, hidden, delta);
  BoundMatrix bounds(tree.vertex_count());
  std::bernoulli_distribution pick(density);
  for (Vertex s = 0; s < tree.vertex_count(); ++s) {
    for (Vertex t = 0; t < tree.vertex_count(); ++t) {
      if (s == t || tree.distance(s, t) < 2 || !pick(rng)) continue;
      const Duration b = d.duration(s, t) + uniform(rng, -1, 2);
      bounds.set(s, t, std::max<Duration>(b, 1));
    }
  }
  return TtrInstance(tree, delta, std::move(bounds));
}

/// Bounds drawn independently of any labeling, between the distance and
/// the trivial bound.
inline TtrInstance random_free_instance(const Tree& tree, int delta, double density, Rng& rng) {
  BoundMatrix bounds(tree.vertex_count());
  std::bernoulli_distribution pick(density);
  for (Vertex s = 0; s < tree.vertex_count(); ++s) {
    for (Vertex t = 0; t < tree.vertex_count(); ++t) {
      if (s == t) continue;
      const int k = tree.distance(s, t);
      if (k < 2 || !pick(rng)) continue;
      bounds.set(s, t, uniform(rng, k, static_cast<int>(trivial_bound(k, delta))));
    }
  }
  return TtrInstance(tree, delta, std::move(bounds));
}

}  // namespace ttr::testing
