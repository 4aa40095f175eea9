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
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"

namespace ttr {

using Vertex = int;

/// Undirected tree edge in canonical orientation (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex-indexed undirected tree. Vertex order is index order; edges are
/// stored sorted lexicographically and addressed by that index everywhere
/// (labelings, files, configurations).
class Tree {
 public:
  Tree() = default;

  /// Validates and builds. Throws InputError on self-loops, out-of-range
  /// endpoints, duplicates, or anything that is not a spanning tree.
  static Tree from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n < 1) throw InputError("tree must have at least one vertex");
    Tree t;
    t.n_ = n;
    t.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a == b) {
        throw InputError("self-loop at vertex " + std::to_string(a));
      }
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") references a vertex outside 0.." + std::to_string(n - 1));
      }
      t.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(t.edges_.begin(), t.edges_.end());
    for (std::size_t i = 1; i < t.edges_.size(); ++i) {
      if (t.edges_[i] == t.edges_[i - 1]) {
        throw InputError("duplicate edge (" + std::to_string(t.edges_[i].u) + "," +
                         std::to_string(t.edges_[i].v) + ")");
      }
    }
    if (static_cast<int>(t.edges_.size()) != n - 1) throw InputError("not a tree");

    t.adjacency_.assign(n, {});
    for (const Edge& e : t.edges_) {
      t.adjacency_[e.u].push_back(e.v);
      t.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nb : t.adjacency_) std::sort(nb.begin(), nb.end());
    t.incident_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : t.adjacency_[v]) t.incident_[v].push_back(t.find_edge(v, w));
    }
    t.root_at_zero();
    return t;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Edge indices aligned with neighbors(v).
  const std::vector<int>& incident_edges(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  /// Index of edge {a,b}; throws InputError if a and b are not adjacent.
  int edge_index(Vertex a, Vertex b) const {
    int e = find_edge(a, b);
    if (e < 0) {
      throw InputError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    return e;
  }
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b) >= 0; }

  int distance(Vertex s, Vertex t) const {
    check_vertex(s);
    check_vertex(t);
    int d = 0;
    while (s != t) {
      if (depth_[s] >= depth_[t]) {
        s = parent_[s];
      } else {
        t = parent_[t];
      }
      ++d;
    }
    return d;
  }

  /// The unique s->t path, s first and t last. Throws InputError for s == t.
  std::vector<Vertex> path(Vertex s, Vertex t) const {
    check_vertex(s);
    check_vertex(t);
    if (s == t) throw InputError("path endpoints must differ");
    std::vector<Vertex> front{s};
    std::vector<Vertex> back{t};
    while (s != t) {
      if (depth_[s] >= depth_[t]) {
        s = parent_[s];
        front.push_back(s);
      } else {
        t = parent_[t];
        back.push_back(t);
      }
    }
    // The meeting vertex sits at the end of both halves.
    back.pop_back();
    front.insert(front.end(), back.rbegin(), back.rend());
    return front;
  }

  /// Longest shortest-path length (two BFS sweeps).
  int diameter() const {
    if (n_ == 1) return 0;
    auto far = farthest_from(0);
    return farthest_from(far.first).second;
  }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) == 1) out.push_back(v);
    }
    return out;
  }

  std::string describe_edge(int index) const {
    std::ostringstream os;
    os << "{" << edges_.at(index).u << "," << edges_.at(index).v << "}";
    return os.str();
  }

 private:
  int find_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return -1;
    const auto& nb = adjacency_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    if (!incident_.empty() && incident_[a].size() == nb.size()) {
      return incident_[a][static_cast<std::size_t>(it - nb.begin())];
    }
    Edge key{std::min(a, b), std::max(a, b)};
    auto e = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<int>(e - edges_.begin());
  }

  void check_vertex(Vertex v) const {
    if (!contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the tree");
  }

  void root_at_zero() {
    parent_.assign(n_, -1);
    depth_.assign(n_, -1);
    std::vector<Vertex> stack{0};
    depth_[0] = 0;
    int seen = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[v]) {
        if (depth_[w] >= 0) continue;
        depth_[w] = depth_[v] + 1;
        parent_[w] = v;
        ++seen;
        stack.push_back(w);
      }
    }
    // n-1 edges plus connectivity rules out cycles.
    if (seen != n_) throw InputError("not a tree");
  }

  std::pair<Vertex, int> farthest_from(Vertex src) const {
    std::vector<int> dist(n_, -1);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    Vertex best = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      if (dist[v] > dist[best]) best = v;
      for (Vertex w : adjacency_[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return {best, dist[best]};
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

}  // namespace ttr
