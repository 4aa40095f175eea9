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

#include <cstddef>
#include <optional>
#include <vector>

#include "ttr/error.hpp"

namespace ttr::simplex {

enum class Relation { kLessEqual, kEqual };

/// Dense row of a box-constrained feasibility problem:
///   sum_j coef[j] * x[j]  (<= | =)  rhs,   lower[j] <= x[j] <= upper[j].
template <class Number>
struct Row {
  std::vector<Number> coef;
  Relation relation = Relation::kLessEqual;
  Number rhs{};
};

template <class Number>
struct Problem {
  std::vector<Number> lower;
  std::vector<Number> upper;
  std::vector<Row<Number>> rows;
};

/// Phase-1 simplex over an exact field type with Bland's rule. Returns a
/// basic feasible solution (a vertex of the feasible box-polyhedron) or
/// nullopt when the system is infeasible.
///
/// Variables are shifted to start at zero, each finite upper bound becomes an
/// explicit row, every <= row gets a slack, and rows that cannot start with a
/// nonnegative slack get an artificial variable whose sum is minimized.
template <class Number>
std::optional<std::vector<Number>> find_vertex(const Problem<Number>& problem) {
  const std::size_t nvars = problem.lower.size();
  if (problem.upper.size() != nvars) throw InternalError("simplex: bound vectors differ in size");
  std::vector<Number> range(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    range[j] = problem.upper[j] - problem.lower[j];
    if (range[j] < Number(0)) return std::nullopt;
  }

  // Shifted rows: original constraints, then y_j <= range_j.
  struct Shifted {
    std::vector<Number> coef;
    bool equality;
    Number rhs;
  };
  std::vector<Shifted> shifted;
  shifted.reserve(problem.rows.size() + nvars);
  for (const Row<Number>& row : problem.rows) {
    if (row.coef.size() != nvars) throw InternalError("simplex: row width mismatch");
    Number rhs = row.rhs;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (row.coef[j] != Number(0)) rhs -= row.coef[j] * problem.lower[j];
    }
    shifted.push_back({row.coef, row.relation == Relation::kEqual, rhs});
  }
  for (std::size_t j = 0; j < nvars; ++j) {
    std::vector<Number> coef(nvars, Number(0));
    coef[j] = Number(1);
    shifted.push_back({std::move(coef), false, range[j]});
  }

  const std::size_t m = shifted.size();
  std::size_t slacks = 0;
  for (const auto& r : shifted) slacks += r.equality ? 0 : 1;
  std::size_t artificials = 0;
  for (const auto& r : shifted) {
    if (r.equality || r.rhs < Number(0)) ++artificials;
  }
  const std::size_t cols = nvars + slacks + artificials;
  const std::size_t rhs_col = cols;

  std::vector<std::vector<Number>> tab(m, std::vector<Number>(cols + 1, Number(0)));
  std::vector<std::size_t> basis(m);
  std::vector<bool> artificial_row(m, false);
  std::size_t next_slack = nvars;
  std::size_t next_art = nvars + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    const Shifted& r = shifted[i];
    const bool flip = r.rhs < Number(0);
    for (std::size_t j = 0; j < nvars; ++j) tab[i][j] = flip ? -r.coef[j] : r.coef[j];
    tab[i][rhs_col] = flip ? -r.rhs : r.rhs;
    if (!r.equality) {
      tab[i][next_slack] = flip ? Number(-1) : Number(1);
      if (!flip) basis[i] = next_slack;
      ++next_slack;
    }
    if (r.equality || flip) {
      tab[i][next_art] = Number(1);
      basis[i] = next_art;
      artificial_row[i] = true;
      ++next_art;
    }
  }

  // Reduced costs of the phase-1 objective (minimize the artificial sum).
  std::vector<Number> cost(cols + 1, Number(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!artificial_row[i]) continue;
    for (std::size_t j = 0; j < nvars + slacks; ++j) {
      if (tab[i][j] != Number(0)) cost[j] -= tab[i][j];
    }
    cost[rhs_col] -= tab[i][rhs_col];
  }

  std::vector<std::size_t> nonzero;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < Number(0)) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Number best{};
    for (std::size_t i = 0; i < m; ++i) {
      if (!(tab[i][enter] > Number(0))) continue;
      Number ratio = tab[i][rhs_col] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so an improving column always has a pivot row.
    if (leave == m) throw InternalError("simplex: unbounded phase-1 direction");

    std::vector<Number>& prow = tab[leave];
    const Number pivot = prow[enter];
    nonzero.clear();
    for (std::size_t j = 0; j <= cols; ++j) {
      if (prow[j] != Number(0)) {
        prow[j] /= pivot;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Number>& row) {
      const Number factor = row[enter];
      if (factor == Number(0)) return;
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave) eliminate(tab[i]);
    }
    eliminate(cost);
    basis[leave] = enter;
  }

  // cost[rhs] holds minus the remaining artificial sum.
  if (cost[rhs_col] != Number(0)) return std::nullopt;

  std::vector<Number> x(problem.lower);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nvars) x[basis[i]] += tab[i][rhs_col];
  }
  return x;
}

}  // namespace ttr::simplex
