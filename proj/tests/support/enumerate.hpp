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
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ttr/reductions/coloring.hpp"
#include "ttr/reductions/nae.hpp"
#include "ttr/tree.hpp"

namespace ttr::testing {

namespace detail {

inline std::string rooted_code(const Tree& tree, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : tree.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(tree, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<Vertex> centers(const Tree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace detail

/// Isomorphism-invariant code of an unrooted tree.
inline std::string tree_code(const Tree& tree) {
  std::string best;
  for (Vertex c : detail::centers(tree)) {
    std::string code = detail::rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// One representative per isomorphism class of trees on n vertices, found by
/// walking every Prüfer sequence.
inline std::vector<Tree> all_trees(int n) {
  std::vector<Tree> out;
  if (n == 1) return {Tree::from_edges(1, {})};
  if (n == 2) {
    std::vector<std::pair<Vertex, Vertex>> e{{0, 1}};
    return {Tree::from_edges(2, e)};
  }
  std::set<std::string> seen;
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int c : code) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(leaf, c);
      if (--degree[c] == 1) leaves.insert(c);
    }
    edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    Tree t = Tree::from_edges(n, edges);
    if (seen.insert(tree_code(t)).second) out.push_back(std::move(t));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
    if (i == 0) break;
    ++code[i - 1];
  }
  return out;
}

/// One representative per isomorphism class of simple graphs on n <= 6
/// vertices (canonical form: least edge mask over all relabelings).
inline std::vector<reductions::SimpleGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint32_t> seen;
  std::vector<reductions::SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        const int a = q[slots[i].first];
        const int b = q[slots[i].second];
        m |= 1u << slot_of[{std::min(a, b), std::max(a, b)}];
      }
      best = std::min(best, m);
    }
    if (!seen.insert(best).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (best >> i & 1) edges.push_back(slots[i]);
    }
    out.push_back(reductions::SimpleGraph::make(n, std::move(edges)));
  }
  return out;
}

inline bool colorable(const reductions::SimpleGraph& g, int colors) {
  std::vector<int> c(static_cast<std::size_t>(g.n), 0);
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges) ok = ok && c[u] != c[v];
    if (ok) return true;
    int i = g.n - 1;
    while (i >= 0 && c[i] == colors - 1) c[i--] = 0;
    if (i < 0) return false;
    ++c[i];
  }
}

inline std::vector<std::vector<bool>> nae_solutions(const reductions::Nae3SatInstance& f) {
  std::vector<std::vector<bool>> out;
  for (std::uint32_t m = 0; m < (1u << f.variables); ++m) {
    std::vector<bool> a(static_cast<std::size_t>(f.variables));
    for (int x = 0; x < f.variables; ++x) a[x] = m >> x & 1;
    if (f.satisfied_by(a)) out.push_back(std::move(a));
  }
  return out;
}

/// Every formula over exactly `variables` variables with `clauses` ordered
/// clauses of ordered (possibly repeating) triples.
inline std::vector<reductions::Nae3SatInstance> all_formulas(int variables, int clauses) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < variables; ++a) {
    for (int b = 0; b < variables; ++b) {
      for (int c = 0; c < variables; ++c) triples.push_back({a, b, c});
    }
  }
  std::vector<reductions::Nae3SatInstance> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(clauses), 0);
  while (true) {
    std::vector<std::array<int, 3>> cs;
    for (std::size_t i : pick) cs.push_back(triples[i]);
    out.push_back(reductions::Nae3SatInstance::make(variables, std::move(cs)));
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == triples.size() - 1) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

}  // namespace ttr::testing
