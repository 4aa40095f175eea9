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
#include <optional>
#include <utility>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/instance.hpp"
#include "ttr/preprocess.hpp"
#include "ttr/twosat.hpp"

namespace ttr {

/// Edges with no leaf endpoint versus edges hanging off a leaf.
struct InternalEdgeSplit {
  std::vector<int> internal_edges;  // ascending edge index
  std::vector<int> leaf_edges;      // ascending edge index
  std::vector<Vertex> internal_vertices;
};

inline InternalEdgeSplit split_edges(const Tree& tree) {
  InternalEdgeSplit split;
  for (int e = 0; e < tree.edge_count(); ++e) {
    const Edge& edge = tree.edge(e);
    if (tree.is_leaf(edge.u) || tree.is_leaf(edge.v)) {
      split.leaf_edges.push_back(e);
    } else {
      split.internal_edges.push_back(e);
    }
  }
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) > 1) split.internal_vertices.push_back(v);
  }
  return split;
}

namespace delta2 {

/// For period 2 a path and its reverse have the same duration, so the
/// tighter of the two directed bounds is the one that matters.
inline TtrInstance symmetrize(const TtrInstance& instance) {
  BoundMatrix bounds = instance.bounds();
  const int n = instance.tree().vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      auto a = bounds.get(s, t);
      auto b = bounds.get(t, s);
      if (!a && !b) continue;
      Duration d = std::min(a.value_or(b.value_or(0)), b.value_or(a.value_or(0)));
      bounds.set_symmetric(s, t, d);
    }
  }
  return TtrInstance(instance.tree(), instance.delta(), std::move(bounds));
}

/// Everything that does not depend on the internal labeling, precomputed
/// once: the internal-pair checks and the leaf constraints of each kind.
/// Labels are passed as a full per-edge vector in which only internal edges
/// are read.
class ExtensionProblem {
 public:
  /// `instance` must be symmetric with delta 2.
  explicit ExtensionProblem(const TtrInstance& instance)
      : tree_(instance.tree()), split_(split_edges(instance.tree())) {
    leaf_var_.assign(static_cast<std::size_t>(tree_.edge_count()), -1);
    for (std::size_t i = 0; i < split_.leaf_edges.size(); ++i) {
      leaf_var_[split_.leaf_edges[i]] = static_cast<int>(i);
    }
    const int n = tree_.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        auto bound = instance.bounds().get(s, t);
        if (!bound || tree_.adjacent(s, t)) continue;
        const bool s_leaf = tree_.is_leaf(s);
        const bool t_leaf = tree_.is_leaf(t);
        if (!s_leaf && !t_leaf) {
          internal_pairs_.push_back({*bound, turns(tree_.path(s, t))});
        } else if (s_leaf != t_leaf) {
          Vertex leaf = s_leaf ? s : t;
          Vertex other = s_leaf ? t : s;
          Vertex hub = tree_.neighbors(leaf).front();
          auto path = tree_.path(other, hub);
          int inner = tree_.edge_index(path[path.size() - 2], hub);
          mixed_pairs_.push_back({*bound, turns(path), leaf_var_[tree_.edge_index(leaf, hub)], inner});
        } else {
          Vertex hs = tree_.neighbors(s).front();
          Vertex ht = tree_.neighbors(t).front();
          int vs = leaf_var_[tree_.edge_index(s, hs)];
          int vt = leaf_var_[tree_.edge_index(t, ht)];
          if (hs == ht) {
            // Duration 1 + tau_hub is 2 or 3.
            if (*bound <= 2) shared_hub_pairs_.emplace_back(vs, vt);
          } else {
            auto path = tree_.path(hs, ht);
            LeafPair lp;
            lp.bound = *bound;
            lp.turns = turns(path);
            lp.var_s = vs;
            lp.var_t = vt;
            lp.inner_s = tree_.edge_index(hs, path[1]);
            lp.inner_t = tree_.edge_index(path[path.size() - 2], ht);
            leaf_pairs_.push_back(std::move(lp));
          }
        }
      }
    }
  }

  const InternalEdgeSplit& split() const { return split_; }
  int leaf_variable(int edge) const { return leaf_var_.at(edge); }

  /// Step (i): every internal-internal pair is already fast enough.
  bool internal_pairs_ok(const std::vector<Label>& labels) const {
    for (const InternalPair& p : internal_pairs_) {
      if (duration(p.turns, labels) > p.bound) return false;
    }
    return true;
  }

  /// Step (ii): the 2-SAT formula over leaf-edge variables (true == label 1),
  /// or nullopt when some pair can be ruled out for every extension.
  std::optional<twosat::Formula> formula(const std::vector<Label>& labels) const {
    twosat::Formula f(static_cast<int>(split_.leaf_edges.size()));
    // "leaf label differs from `inner`" as a literal.
    auto differs_from = [&](int var, int inner) {
      return labels[inner] == 2 ? twosat::pos(var) : twosat::neg(var);
    };
    for (const MixedPair& p : mixed_pairs_) {
      Duration q = p.bound - duration(p.turns, labels);
      if (q <= 0) return std::nullopt;
      if (q == 1) f.add_unit(differs_from(p.var, p.inner));
    }
    for (auto [a, b] : shared_hub_pairs_) f.add_different(a, b);
    for (const LeafPair& p : leaf_pairs_) {
      Duration q = p.bound - duration(p.turns, labels);
      if (q <= 1) return std::nullopt;
      if (q == 2) {
        f.add_unit(differs_from(p.var_s, p.inner_s));
        f.add_unit(differs_from(p.var_t, p.inner_t));
      } else if (q == 3) {
        f.add(differs_from(p.var_s, p.inner_s), differs_from(p.var_t, p.inner_t));
      }
    }
    return f;
  }

  /// Full labeling from internal labels plus leaf truth values.
  PeriodicLabeling decode(const std::vector<Label>& labels, const twosat::Assignment& value) const {
    std::vector<Label> out(labels);
    for (std::size_t i = 0; i < split_.leaf_edges.size(); ++i) {
      out[split_.leaf_edges[i]] = value[i] ? 1 : 2;
    }
    return PeriodicLabeling(std::move(out));
  }

  /// Inverse of decode on the leaf edges.
  twosat::Assignment encode(const PeriodicLabeling& labeling) const {
    twosat::Assignment value(split_.leaf_edges.size());
    for (std::size_t i = 0; i < split_.leaf_edges.size(); ++i) {
      value[i] = labeling[split_.leaf_edges[i]] == 1;
    }
    return value;
  }

 private:
  using Turns = std::vector<std::pair<int, int>>;

  struct InternalPair {
    Duration bound;
    Turns turns;
  };
  struct MixedPair {
    Duration bound;
    Turns turns;  // internal vertex -> leaf's neighbor
    int var;
    int inner;    // edge entering the leaf's neighbor along the path
  };
  struct LeafPair {
    Duration bound;
    Turns turns;  // between the two leaf neighbors
    int var_s = -1;
    int var_t = -1;
    int inner_s = -1;
    int inner_t = -1;
  };

  Turns turns(const std::vector<Vertex>& path) const {
    Turns out;
    for (std::size_t i = 2; i < path.size(); ++i) {
      out.emplace_back(tree_.edge_index(path[i - 2], path[i - 1]),
                       tree_.edge_index(path[i - 1], path[i]));
    }
    return out;
  }

  static Duration duration(const Turns& turns, const std::vector<Label>& labels) {
    Duration d = 1;
    for (auto [a, b] : turns) d += labels[a] == labels[b] ? 2 : 1;
    return d;
  }

  const Tree& tree_;
  InternalEdgeSplit split_;
  std::vector<int> leaf_var_;
  std::vector<InternalPair> internal_pairs_;
  std::vector<MixedPair> mixed_pairs_;
  std::vector<std::pair<int, int>> shared_hub_pairs_;
  std::vector<LeafPair> leaf_pairs_;
};

}  // namespace delta2

/// Period-2 solver: enumerate labels of the internal edges (first one pinned
/// to 1), check internal pairs directly, and settle the leaf edges with 2-SAT.
/// `examined` counts internal labelings visited.
inline OracleResult solve_delta2(const TtrInstance& instance) {
  if (instance.delta() != 2) {
    throw InputError("the delta2 solver requires delta = 2 (got " + std::to_string(instance.delta()) + ")");
  }
  OracleResult result;
  auto pre = preprocess(instance);
  if (pre.infeasible()) return result;
  if (all_bounds_trivial(*pre.instance)) {
    result.answer = Answer::kYes;
    result.witness = PeriodicLabeling::uniform(instance.tree().edge_count());
    return result;
  }

  TtrInstance symmetric = delta2::symmetrize(*pre.instance);
  delta2::ExtensionProblem problem(symmetric);
  const auto& internal = problem.split().internal_edges;
  std::vector<Label> labels(static_cast<std::size_t>(instance.tree().edge_count()), 1);

  const std::size_t first_free = internal.empty() ? 0 : 1;
  while (true) {
    ++result.examined;
    if (problem.internal_pairs_ok(labels)) {
      if (auto formula = problem.formula(labels)) {
        if (auto value = twosat::solve(*formula)) {
          PeriodicLabeling witness = problem.decode(labels, *value);
          if (!verify_labeling(instance, witness).clean()) {
            throw InternalError("delta2 produced a witness that fails verification");
          }
          result.answer = Answer::kYes;
          result.witness = std::move(witness);
          return result;
        }
      }
    }
    // Binary odometer over internal edges, last edge fastest.
    std::size_t pos = internal.size();
    while (pos > first_free && labels[internal[pos - 1]] == 2) labels[internal[--pos]] = 1;
    if (pos == first_free) break;
    labels[internal[pos - 1]] = 2;
  }
  return result;
}

}  // namespace ttr
