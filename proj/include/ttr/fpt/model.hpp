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
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/fpt/configuration.hpp"
#include "ttr/instance.hpp"
#include "ttr/milp.hpp"

namespace ttr::fpt {

using milp::RationalVector;

/// Internal vertices of the s-t path split by degree class. A degree-2 vertex
/// is forward when its s-side neighbor precedes its t-side neighbor.
struct PathDecomposition {
  Vertex s = 0;
  Vertex t = 0;
  int length = 0;  // edges
  std::vector<Vertex> internal;
  std::vector<Vertex> forward;
  std::vector<Vertex> backward;
  std::vector<Vertex> high;
  std::vector<std::pair<Vertex, Vertex>> high_neighbors;  // (u, w) per high vertex: s-side, t-side
};

inline PathDecomposition decompose_path(const Tree& tree, Vertex s, Vertex t) {
  PathDecomposition d;
  d.s = s;
  d.t = t;
  const std::vector<Vertex> path = tree.path(s, t);
  d.length = static_cast<int>(path.size()) - 1;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const Vertex v = path[i];
    d.internal.push_back(v);
    if (tree.degree(v) == 2) {
      (path[i - 1] < path[i + 1] ? d.forward : d.backward).push_back(v);
    } else {
      d.high.push_back(v);
      d.high_neighbors.emplace_back(path[i - 1], path[i + 1]);
    }
  }
  return d;
}

namespace detail {

inline int neighbor_slot(const Tree& tree, Vertex v, Vertex u) {
  const auto& nb = tree.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), u);
  if (it == nb.end() || *it != u) throw InternalError("vertex " + std::to_string(u) + " is not a neighbor");
  return static_cast<int>(it - nb.begin());
}

inline std::vector<int> high_index(const Tree& tree, const VertexClasses& classes) {
  std::vector<int> idx(static_cast<std::size_t>(tree.vertex_count()), -1);
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) idx[classes.high_degree[i]] = static_cast<int>(i);
  return idx;
}

inline std::string vname(Vertex v) { return std::to_string(v); }

}  // namespace detail

/// Variable handles of the model built straight from the constraint list.
struct FullMilp {
  milp::Model model;
  std::vector<int> x;                         // per vertex, -1 unless degree 2
  std::map<std::tuple<Vertex, Vertex, Vertex>, int> y;  // (v, u, w)
  std::vector<int> z;                         // per edge, -1 unless it touches a high-degree vertex
};

/// I_sigma with every variable and constraint kind present: x, y, z, rows
/// (1), (2), (4), (5), (8), boxes (3), (6), (7), (9). Rows are tagged with
/// their kind.
inline FullMilp build_milp(const TtrInstance& instance, const GlobalLabelConfiguration& sigma) {
  using milp::Relation;
  using milp::Term;
  using milp::VarKind;
  const Tree& tree = instance.tree();
  const int delta = instance.delta();
  const VertexClasses classes = classify_vertices(tree);
  check_configuration(tree, classes, delta, sigma);
  FullMilp out;
  const int n = tree.vertex_count();
  out.x.assign(static_cast<std::size_t>(n), -1);
  out.z.assign(static_cast<std::size_t>(tree.edge_count()), -1);

  for (Vertex v : classes.degree_two) {
    out.x[v] = out.model.add_variable("x" + detail::vname(v), VarKind::kFractional, 1, delta - 1);
  }
  for (Vertex v : classes.high_degree) {
    for (int e : tree.incident_edges(v)) {
      if (out.z[e] >= 0) continue;
      const Edge& ed = tree.edge(e);
      out.z[e] = out.model.add_variable("z" + detail::vname(ed.u) + "_" + detail::vname(ed.v), VarKind::kInteger, 1,
                                        delta);
    }
  }
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) {
    const Vertex v = classes.high_degree[i];
    const auto& nb = tree.neighbors(v);
    const auto& inc = tree.incident_edges(v);
    const LocalConfiguration& conf = sigma.local[i];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = 0; b < nb.size(); ++b) {
        if (a == b) continue;
        const Vertex u = nb[a];
        const Vertex w = nb[b];
        const int ze = out.z[inc[a]];
        const int ze2 = out.z[inc[b]];
        const std::string at = " v" + detail::vname(v) + " (" + detail::vname(u) + "," + detail::vname(w) + ")";
        const bool same = conf.rank[a] == conf.rank[b];
        const int y = out.model.add_variable("y" + detail::vname(v) + "_" + detail::vname(u) + "_" + detail::vname(w),
                                             VarKind::kInteger, 1, same ? delta : delta - 1);
        out.y[{v, u, w}] = y;
        if (same) {
          out.model.add_constraint({Term{ze, 1}, Term{ze2, -1}}, Relation::kEqual, 0, "(4)" + at);
          out.model.add_constraint({Term{y, 1}}, Relation::kEqual, delta, "(5)" + at);
        } else if (conf.rank[a] < conf.rank[b]) {
          out.model.add_constraint({Term{y, 1}, Term{ze2, -1}, Term{ze, 1}}, Relation::kEqual, 0, "(1)" + at);
        } else {
          out.model.add_constraint({Term{y, 1}, Term{ze2, -1}, Term{ze, 1}}, Relation::kEqual, delta, "(2)" + at);
        }
      }
    }
  }
  for (const BoundEntry& b : instance.bounds().explicit_entries()) {
    if (tree.distance(b.s, b.t) < 2) continue;
    const PathDecomposition d = decompose_path(tree, b.s, b.t);
    std::vector<Term> terms;
    Rational rhs(b.bound - 1);
    for (Vertex v : d.forward) terms.push_back({out.x[v], 1});
    for (Vertex v : d.backward) {
      terms.push_back({out.x[v], -1});
      rhs -= delta;
    }
    for (std::size_t k = 0; k < d.high.size(); ++k) {
      terms.push_back({out.y.at({d.high[k], d.high_neighbors[k].first, d.high_neighbors[k].second}), 1});
    }
    out.model.add_constraint(std::move(terms), Relation::kLessEqual, rhs,
                             "(8) " + detail::vname(b.s) + "->" + detail::vname(b.t));
  }
  return out;
}

/// Same feasibility question with y eliminated and the z of each σ-part
/// contracted into one integer. Optionally pins the lowest part of the first
/// high-degree vertex to label 1.
struct CompactMilp {
  milp::Model model;
  std::vector<int> x;                    // per vertex
  std::vector<std::vector<int>> part;    // per high-degree index, per part: integer variable
  GlobalLabelConfiguration sigma;
};

struct CompactOptions {
  bool pin_first_part = true;
};

struct BuildOutcome {
  std::optional<CompactMilp> milp;
  std::string rejection;  // set when a constant row is violated
};

namespace detail {

/// Affine form sum(coef * var) + constant, accumulated sparsely.
struct Affine {
  std::map<int, std::int64_t> coef;
  std::int64_t constant = 0;

  void add(int var, std::int64_t c) {
    if ((coef[var] += c) == 0) coef.erase(var);
  }
};

}  // namespace detail

inline BuildOutcome build_compact_milp(const TtrInstance& instance, const VertexClasses& classes,
                                       const GlobalLabelConfiguration& sigma, const CompactOptions& options = {}) {
  using milp::Relation;
  using milp::Term;
  using milp::VarKind;
  const Tree& tree = instance.tree();
  const int delta = instance.delta();
  check_configuration(tree, classes, delta, sigma);
  const std::vector<int> hidx = detail::high_index(tree, classes);

  // Union-find over (vertex, part) slots; an edge between two high-degree
  // vertices ties the slots at both ends.
  std::vector<int> offset(classes.high_degree.size() + 1, 0);
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) offset[i + 1] = offset[i] + sigma.local[i].parts;
  std::vector<int> parent(static_cast<std::size_t>(offset.back()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto slot = [&](Vertex v, int nb_index) {
    const int i = hidx[v];
    return offset[i] + sigma.local[i].rank[nb_index];
  };
  for (const Edge& e : tree.edges()) {
    if (hidx[e.u] < 0 || hidx[e.v] < 0) continue;
    const int a = find(slot(e.u, detail::neighbor_slot(tree, e.u, e.v)));
    const int b = find(slot(e.v, detail::neighbor_slot(tree, e.v, e.u)));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  CompactMilp out;
  out.sigma = sigma;
  out.x.assign(static_cast<std::size_t>(tree.vertex_count()), -1);
  for (Vertex v : classes.degree_two) {
    out.x[v] = out.model.add_variable("x" + detail::vname(v), VarKind::kFractional, 1, delta - 1);
  }
  std::vector<int> slot_var(parent.size(), -1);
  out.part.resize(classes.high_degree.size());
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) {
    for (int p = 0; p < sigma.local[i].parts; ++p) {
      const int root = find(offset[i] + p);
      if (slot_var[root] < 0) {
        const bool pinned = options.pin_first_part && root == find(0);
        slot_var[root] = out.model.add_variable("z" + std::to_string(root), VarKind::kInteger, 1, pinned ? 1 : delta);
      }
      out.part[i].push_back(slot_var[root]);
    }
  }
  for (std::size_t i = 0; i < classes.high_degree.size(); ++i) {
    for (int p = 0; p + 1 < sigma.local[i].parts; ++p) {
      const int a = out.part[i][p];
      const int b = out.part[i][p + 1];
      if (a == b) throw InternalError("configuration parts collapsed at vertex " + std::to_string(classes.high_degree[i]));
      out.model.add_constraint({Term{a, 1}, Term{b, -1}}, Relation::kLessEqual, -1,
                               "order v" + detail::vname(classes.high_degree[i]));
    }
  }

  std::map<std::vector<std::pair<int, std::int64_t>>, std::pair<std::int64_t, std::string>> rows;
  for (const BoundEntry& b : instance.bounds().explicit_entries()) {
    if (tree.distance(b.s, b.t) < 2) continue;
    const PathDecomposition d = decompose_path(tree, b.s, b.t);
    detail::Affine lhs;
    for (Vertex v : d.forward) lhs.add(out.x[v], 1);
    for (Vertex v : d.backward) {
      lhs.add(out.x[v], -1);
      lhs.constant += delta;
    }
    for (std::size_t k = 0; k < d.high.size(); ++k) {
      const Vertex v = d.high[k];
      const int i = hidx[v];
      const int ra = sigma.local[i].rank[detail::neighbor_slot(tree, v, d.high_neighbors[k].first)];
      const int rb = sigma.local[i].rank[detail::neighbor_slot(tree, v, d.high_neighbors[k].second)];
      if (ra == rb) {
        lhs.constant += delta;
        continue;
      }
      lhs.add(out.part[i][rb], 1);
      lhs.add(out.part[i][ra], -1);
      if (ra > rb) lhs.constant += delta;
    }
    const std::int64_t rhs = b.bound - 1 - lhs.constant;
    const std::string tag = "(8) " + detail::vname(b.s) + "->" + detail::vname(b.t);
    if (lhs.coef.empty()) {
      if (rhs < 0) return {std::nullopt, tag + " needs " + std::to_string(lhs.constant) + " <= " + std::to_string(b.bound - 1)};
      continue;
    }
    std::vector<std::pair<int, std::int64_t>> key(lhs.coef.begin(), lhs.coef.end());
    auto [it, fresh] = rows.try_emplace(std::move(key), rhs, tag);
    if (!fresh && rhs < it->second.first) it->second = {rhs, tag};
  }
  for (const auto& [key, value] : rows) {
    std::vector<Term> terms;
    for (const auto& [var, c] : key) terms.push_back({var, Rational(c)});
    out.model.add_constraint(std::move(terms), Relation::kLessEqual, Rational(value.first), value.second);
  }
  return {std::move(out), {}};
}

/// Rows of the x-columns: every row touching an x, plus the unit rows of the
/// x boxes, duplicates removed.
inline std::vector<std::vector<int>> fractional_matrix(const milp::Model& model) {
  std::vector<int> col(static_cast<std::size_t>(model.variable_count()), -1);
  int cols = 0;
  for (int j = 0; j < model.variable_count(); ++j) {
    if (model.variable(j).kind == milp::VarKind::kFractional) col[j] = cols++;
  }
  std::vector<std::vector<int>> rows;
  for (const milp::Constraint& c : model.constraints()) {
    std::vector<int> row(static_cast<std::size_t>(cols), 0);
    bool any = false;
    for (const milp::Term& t : c.terms) {
      if (col[t.var] < 0) continue;
      if (!t.coef.is_integer()) throw InternalError("non-integral fractional coefficient in " + c.tag);
      row[col[t.var]] += static_cast<int>(t.coef.num());
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  }
  for (int j = 0; j < cols; ++j) {
    std::vector<int> row(static_cast<std::size_t>(cols), 0);
    row[j] = 1;
    rows.push_back(row);
    row[j] = -1;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

}  // namespace ttr::fpt
