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

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/instance.hpp"

namespace ttr::reductions {

/// Monotone NAE-3SAT formula over variables 0..variables-1.
struct Nae3SatInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;

  static Nae3SatInstance make(int variables, std::vector<std::array<int, 3>> clauses) {
    if (variables < 1) throw InputError("formula needs at least one variable");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (int x : clauses[c]) {
        if (x < 0 || x >= variables) {
          throw InputError("clause " + std::to_string(c) + " references unknown variable " + std::to_string(x));
        }
      }
    }
    return Nae3SatInstance{variables, std::move(clauses)};
  }

  bool satisfied_by(const std::vector<bool>& a) const {
    for (const auto& c : clauses) {
      if (a.at(c[0]) == a.at(c[1]) && a.at(c[1]) == a.at(c[2])) return false;
    }
    return true;
  }
};

enum class NaeLayout { kDiameter, kDegree };

inline const char* to_string(NaeLayout l) { return l == NaeLayout::kDiameter ? "nae-diameter" : "nae-degree"; }

struct VariableGadget {
  Vertex w = -1;        // hub in the diameter layout
  Vertex w_prime = -1;  // degree layout only
  Vertex v1 = -1;
  Vertex v2 = -1;
};

/// occurrence[l][k-1] is u_{c,x_l,k}; position l has 2(l+1) of them.
struct ClauseGadget {
  Vertex w = -1;
  Vertex w_prime = -1;
  std::array<Vertex, 3> u{-1, -1, -1};
  std::array<std::vector<Vertex>, 3> occurrence;
};

struct NaeReduction {
  NaeLayout layout = NaeLayout::kDiameter;
  Nae3SatInstance formula;
  TtrInstance instance{Tree::from_edges(1, {}), 2};
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
  std::vector<std::string> names;  // per vertex
};

namespace detail {

class NaeBuilder {
 public:
  Vertex add(std::string name) {
    names.push_back(std::move(name));
    return static_cast<Vertex>(names.size()) - 1;
  }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  void bound(Vertex a, Vertex b, Duration d) { bounds.emplace_back(a, b, d); }

  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::tuple<Vertex, Vertex, Duration>> bounds;
};

inline std::string var_name(int x) { return "x" + std::to_string(x); }

inline ClauseGadget add_clause_gadget(NaeBuilder& b, int index, const std::array<int, 3>& clause,
                                      std::optional<Vertex> hub) {
  ClauseGadget g;
  const std::string c = "c" + std::to_string(index);
  g.w = hub ? *hub : b.add("w[" + c + "]");
  for (int i = 0; i < 3; ++i) g.u[i] = b.add("u[" + c + "," + std::to_string(i + 1) + "]");
  for (int l = 0; l < 3; ++l) {
    for (int k = 1; k <= 2 * (l + 1); ++k) {
      g.occurrence[l].push_back(
          b.add("u[" + c + "," + std::to_string(l) + ":" + var_name(clause[l]) + "," + std::to_string(k) + "]"));
    }
  }
  const auto& ox = g.occurrence[0];
  const auto& oy = g.occurrence[1];
  const auto& oz = g.occurrence[2];
  b.link(g.w, g.u[0]);
  b.link(g.u[0], g.u[1]);
  b.link(g.u[1], g.u[2]);
  for (int l = 0; l < 3; ++l) {
    b.link(g.w, g.occurrence[l][0]);
    b.link(g.w, g.occurrence[l][1]);
  }
  b.link(g.u[0], oy[2]);
  b.link(g.u[0], oy[3]);
  b.link(g.u[0], oz[2]);
  b.link(g.u[0], oz[3]);
  b.link(g.u[1], oz[4]);
  b.link(g.u[1], oz[5]);
  // first set
  b.bound(ox[0], ox[1], 2);
  b.bound(oy[0], oy[1], 2);
  b.bound(oy[2], oy[3], 2);
  b.bound(oz[0], oz[1], 2);
  b.bound(oz[2], oz[3], 2);
  b.bound(oz[4], oz[5], 2);
  // second set
  b.bound(ox[1], g.u[0], 2);
  // third set
  b.bound(oy[0], oy[3], 4);
  b.bound(oy[1], oy[2], 4);
  b.bound(oy[3], g.u[1], 2);
  // fourth set
  b.bound(oz[0], oz[3], 4);
  b.bound(oz[1], oz[2], 4);
  b.bound(oz[2], oz[5], 4);
  b.bound(oz[3], oz[4], 4);
  b.bound(oz[5], g.u[2], 2);
  // fifth set
  b.bound(g.w, g.u[2], 4);
  return g;
}

inline NaeReduction finish(NaeBuilder& b, NaeReduction r) {
  const int n = static_cast<int>(b.names.size());
  Tree tree = Tree::from_edges(n, b.edges);
  BoundMatrix bounds(n);
  for (const auto& [s, t, d] : b.bounds) bounds.set_symmetric(s, t, d);
  r.instance = TtrInstance(std::move(tree), 2, std::move(bounds));
  r.names = std::move(b.names);
  return r;
}

}  // namespace detail

/// Star-of-gadgets layout: every variable and clause gadget hangs off one hub.
inline NaeReduction from_nae3sat_diameter(const Nae3SatInstance& f) {
  detail::NaeBuilder b;
  NaeReduction r;
  r.layout = NaeLayout::kDiameter;
  r.formula = f;
  const Vertex hub = b.add("w*");
  for (int x = 0; x < f.variables; ++x) {
    VariableGadget g;
    g.w = hub;
    g.v1 = b.add("v[" + detail::var_name(x) + ",1]");
    g.v2 = b.add("v[" + detail::var_name(x) + ",2]");
    b.link(hub, g.v1);
    b.link(hub, g.v2);
    b.bound(g.v1, g.v2, 2);
    r.variables.push_back(g);
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    ClauseGadget g = detail::add_clause_gadget(b, static_cast<int>(c), f.clauses[c], hub);
    for (int l = 0; l < 3; ++l) {
      const VariableGadget& v = r.variables[f.clauses[c][l]];
      b.bound(v.v1, g.occurrence[l][1], 2);
      b.bound(v.v2, g.occurrence[l][0], 2);
    }
    r.clauses.push_back(std::move(g));
  }
  return detail::finish(b, std::move(r));
}

/// Spine layout: w'_x1 - w_x1 - w'_x2 - ... - w_xn - w'_c1 - w_c1 - w'_c2 - ...
inline NaeReduction from_nae3sat_degree(const Nae3SatInstance& f) {
  detail::NaeBuilder b;
  NaeReduction r;
  r.layout = NaeLayout::kDegree;
  r.formula = f;
  const int n = f.variables;
  for (int x = 0; x < n; ++x) {
    VariableGadget g;
    const std::string name = detail::var_name(x);
    g.w = b.add("w[" + name + "]");
    g.w_prime = b.add("w'[" + name + "]");
    g.v1 = b.add("v[" + name + ",1]");
    g.v2 = b.add("v[" + name + ",2]");
    b.link(g.w, g.v1);
    b.link(g.w, g.v2);
    b.link(g.w, g.w_prime);
    b.bound(g.v1, g.v2, 2);
    if (x > 0) {
      const VariableGadget& prev = r.variables.back();
      b.link(prev.w, g.w_prime);
      b.bound(prev.w, g.w, 2);
      b.bound(prev.w_prime, g.w_prime, 2);
    }
    r.variables.push_back(g);
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const Vertex w_prime = b.add("w'[c" + std::to_string(c) + "]");
    ClauseGadget g = detail::add_clause_gadget(b, static_cast<int>(c), f.clauses[c], std::nullopt);
    g.w_prime = w_prime;
    b.link(g.w, g.w_prime);
    // Predecessor on the spine: the last variable or the previous clause.
    const Vertex prev_w = c == 0 ? r.variables.back().w : r.clauses.back().w;
    const Vertex prev_wp = c == 0 ? r.variables.back().w_prime : r.clauses.back().w_prime;
    b.link(prev_w, g.w_prime);
    b.bound(prev_w, g.w, 2);
    b.bound(prev_wp, g.w_prime, 2);
    const int j = static_cast<int>(c) + 1;
    for (int l = 0; l < 3; ++l) {
      const int i = f.clauses[c][l] + 1;
      const VariableGadget& v = r.variables[f.clauses[c][l]];
      const Duration d = 2 * (n - i + j) + 3;
      b.bound(v.v1, g.occurrence[l][0], d);
      b.bound(v.v2, g.occurrence[l][1], d);
    }
    r.clauses.push_back(std::move(g));
  }
  return detail::finish(b, std::move(r));
}

inline NaeReduction from_nae3sat(const Nae3SatInstance& f, NaeLayout layout) {
  return layout == NaeLayout::kDiameter ? from_nae3sat_diameter(f) : from_nae3sat_degree(f);
}

/// Labeling from the completeness direction of the reduction. With
/// `verify`, a labeling that breaks a bound raises ValidationError naming the
/// first violated pair.
inline PeriodicLabeling nae_assignment_to_labeling(const NaeReduction& r, const std::vector<bool>& assignment,
                                                   bool verify = true) {
  const Tree& tree = r.instance.tree();
  if (static_cast<int>(assignment.size()) != r.formula.variables) {
    throw InputError("assignment has " + std::to_string(assignment.size()) + " values, expected " +
                     std::to_string(r.formula.variables));
  }
  std::vector<Label> labels(static_cast<std::size_t>(tree.edge_count()), 0);
  auto set = [&](Vertex a, Vertex b, Label l) { labels[tree.edge_index(a, b)] = l; };
  auto get = [&](Vertex a, Vertex b) { return labels[tree.edge_index(a, b)]; };
  for (int x = 0; x < r.formula.variables; ++x) {
    const VariableGadget& g = r.variables[x];
    set(g.w, g.v1, assignment[x] ? 1 : 2);
    set(g.w, g.v2, assignment[x] ? 2 : 1);
  }
  if (r.layout == NaeLayout::kDegree) {
    for (std::size_t x = 0; x < r.variables.size(); ++x) {
      set(r.variables[x].w_prime, r.variables[x].w, 1);
      if (x + 1 < r.variables.size()) set(r.variables[x].w, r.variables[x + 1].w_prime, 2);
    }
    if (!r.clauses.empty()) set(r.variables.back().w, r.clauses.front().w_prime, 2);
    for (std::size_t c = 0; c < r.clauses.size(); ++c) {
      set(r.clauses[c].w_prime, r.clauses[c].w, 1);
      if (c + 1 < r.clauses.size()) set(r.clauses[c].w, r.clauses[c + 1].w_prime, 2);
    }
  }
  for (std::size_t c = 0; c < r.clauses.size(); ++c) {
    const ClauseGadget& g = r.clauses[c];
    const auto& clause = r.formula.clauses[c];
    for (int l = 0; l < 3; ++l) {
      const VariableGadget& v = r.variables[clause[l]];
      set(g.w, g.occurrence[l][0], get(v.w, v.v1));
      set(g.w, g.occurrence[l][1], get(v.w, v.v2));
    }
    for (int l = 1; l < 3; ++l) {
      set(g.u[0], g.occurrence[l][2], get(g.w, g.occurrence[l][0]));
      set(g.u[0], g.occurrence[l][3], get(g.w, g.occurrence[l][1]));
    }
    set(g.u[1], g.occurrence[2][4], get(g.w, g.occurrence[2][0]));
    set(g.u[1], g.occurrence[2][5], get(g.w, g.occurrence[2][1]));
    set(g.w, g.u[0], get(g.w, g.occurrence[0][0]));
    set(g.u[0], g.u[1], get(g.w, g.occurrence[1][0]));
    set(g.u[1], g.u[2], get(g.w, g.occurrence[2][0]));
  }
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (labels[e] == 0) throw InternalError("edge " + tree.describe_edge(static_cast<int>(e)) + " left unlabeled");
  }
  PeriodicLabeling labeling(std::move(labels));
  if (verify) {
    const DurationReport report = verify_labeling(r.instance, labeling);
    if (!report.clean()) {
      const Violation& v = report.violations.front();
      throw ValidationError("labeling violates bound at (" + r.names[v.s] + "," + r.names[v.t] + "): duration " +
                            std::to_string(v.duration) + " > " + std::to_string(v.bound));
    }
  }
  return labeling;
}

/// x is true iff λ({w_x, v_{x,1}}) = 1. The labeling must realize the
/// instance.
inline std::vector<bool> labeling_to_nae_assignment(const NaeReduction& r, const PeriodicLabeling& labeling) {
  const DurationReport report = verify_labeling(r.instance, labeling);
  if (!report.clean()) {
    const Violation& v = report.violations.front();
    throw InputError("labeling does not realize the instance: (" + r.names[v.s] + "," + r.names[v.t] +
                     ") has duration " + std::to_string(v.duration) + " > " + std::to_string(v.bound));
  }
  std::vector<bool> out;
  for (const VariableGadget& g : r.variables) out.push_back(labeling[r.instance.tree().edge_index(g.w, g.v1)] == 1);
  return out;
}

}  // namespace ttr::reductions
