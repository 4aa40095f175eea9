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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"

namespace ttr::twosat {

struct Literal {
  int var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

using Clause = std::pair<Literal, Literal>;
using Assignment = std::vector<bool>;

/// Conjunction of two-literal clauses. A unit constraint l is stored as (l v l).
class Formula {
 public:
  explicit Formula(int variable_count = 0) : variables_(variable_count) {}

  int variable_count() const { return variables_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  void add(Literal a, Literal b) { clauses_.emplace_back(a, b); }
  void add_unit(Literal a) { clauses_.emplace_back(a, a); }
  void add_different(int a, int b) {
    add(pos(a), pos(b));
    add(neg(a), neg(b));
  }

  bool satisfied_by(const Assignment& value) const {
    auto holds = [&](Literal l) { return value.at(l.var) == l.positive; };
    for (const auto& [a, b] : clauses_) {
      if (!holds(a) && !holds(b)) return false;
    }
    return true;
  }

 private:
  int variables_;
  std::vector<Clause> clauses_;
};

/// Implication graph + Tarjan SCC (iterative, vertices and edges visited in
/// insertion order so the result is reproducible). Returns nullopt iff some
/// variable shares a component with its negation.
inline std::optional<Assignment> solve(const Formula& formula) {
  const int n = formula.variable_count();
  auto node = [&](Literal l) {
    if (l.var < 0 || l.var >= n) {
      throw InputError("literal refers to variable " + std::to_string(l.var) + " of " +
                       std::to_string(n));
    }
    return 2 * l.var + (l.positive ? 0 : 1);
  };

  const int nodes = 2 * n;
  std::vector<std::vector<int>> graph(static_cast<std::size_t>(nodes));
  for (const auto& [a, b] : formula.clauses()) {
    // (a v b) == (!a -> b) and (!b -> a)
    graph[node(!a)].push_back(node(b));
    graph[node(!b)].push_back(node(a));
  }

  std::vector<int> index(nodes, -1), low(nodes, 0), component(nodes, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(nodes, false);
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next edge)
  int counter = 0;
  int components = 0;

  for (int root = 0; root < nodes; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < graph[v].size()) {
        int w = graph[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != v);
        ++components;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  Assignment value(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int t = component[2 * x];
    int f = component[2 * x + 1];
    if (t == f) return std::nullopt;
    // Tarjan numbers components in reverse topological order; pick the
    // literal that comes later topologically.
    value[x] = t < f;
  }
  return value;
}

}  // namespace ttr::twosat
