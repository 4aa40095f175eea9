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
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/rational.hpp"
#include "ttr/simplex.hpp"

namespace ttr::milp {

using RationalVector = std::vector<Rational>;
using simplex::Relation;

enum class VarKind { kFractional, kInteger };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kFractional;
  Rational lower;
  Rational upper;
};

struct Term {
  int var = 0;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  std::string tag;  // provenance, shown in dumps
};

/// Boxed mixed-integer feasibility model. There is no objective: callers only
/// ask whether a point exists.
class Model {
 public:
  int add_variable(std::string name, VarKind kind, Rational lower, Rational upper) {
    if (upper < lower) {
      throw InputError("variable " + name + " has an empty box [" + lower.to_string() + "," +
                       upper.to_string() + "]");
    }
    variables_.push_back({std::move(name), kind, lower, upper});
    return static_cast<int>(variables_.size()) - 1;
  }

  void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs, std::string tag = {}) {
    for (const Term& t : terms) {
      if (t.var < 0 || t.var >= variable_count()) {
        throw InputError("constraint references unknown variable " + std::to_string(t.var));
      }
    }
    constraints_.push_back({std::move(terms), relation, rhs, std::move(tag)});
  }

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  Variable& variable(int i) { return variables_.at(i); }
  const Variable& variable(int i) const { return variables_.at(i); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  std::vector<int> integer_variables() const {
    std::vector<int> out;
    for (int i = 0; i < variable_count(); ++i) {
      if (variables_[i].kind == VarKind::kInteger) out.push_back(i);
    }
    return out;
  }

  /// Exact check of bounds, rows and integrality.
  bool satisfied_by(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != variable_count()) return false;
    for (int i = 0; i < variable_count(); ++i) {
      const Variable& v = variables_[i];
      if (x[i] < v.lower || x[i] > v.upper) return false;
      if (v.kind == VarKind::kInteger && !x[i].is_integer()) return false;
    }
    for (const Constraint& c : constraints_) {
      Rational lhs;
      for (const Term& t : c.terms) lhs += t.coef * x[t.var];
      if (c.relation == Relation::kEqual ? lhs != c.rhs : lhs > c.rhs) return false;
    }
    return true;
  }

  /// Plain-text LP-style listing for inspection.
  std::string dump() const {
    std::ostringstream os;
    os << "subject to\n";
    for (const Constraint& c : constraints_) {
      os << "  ";
      if (!c.tag.empty()) os << c.tag << ": ";
      if (c.terms.empty()) os << "0";
      bool first = true;
      for (const Term& t : c.terms) {
        if (!first || t.coef.sign() < 0) os << (t.coef.sign() < 0 ? " - " : " + ");
        Rational mag = t.coef.sign() < 0 ? -t.coef : t.coef;
        if (mag != Rational(1)) os << mag << " ";
        os << variables_[t.var].name;
        first = false;
      }
      os << (c.relation == Relation::kEqual ? " = " : " <= ") << c.rhs << "\n";
    }
    os << "bounds\n";
    for (const Variable& v : variables_) {
      os << "  " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
    }
    os << "general\n";
    for (const Variable& v : variables_) {
      if (v.kind == VarKind::kInteger) os << "  " << v.name << "\n";
    }
    os << "end\n";
    return os.str();
  }

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

namespace detail {

template <class Number>
Number convert(const Rational& r) {
  return Number(r.num()) / Number(r.den());
}

template <class Number>
simplex::Problem<Number> relaxation(const Model& model, const std::vector<Rational>& lower,
                                    const std::vector<Rational>& upper) {
  simplex::Problem<Number> p;
  const int n = model.variable_count();
  for (int j = 0; j < n; ++j) {
    p.lower.push_back(convert<Number>(lower[j]));
    p.upper.push_back(convert<Number>(upper[j]));
  }
  for (const Constraint& c : model.constraints()) {
    simplex::Row<Number> row;
    row.coef.assign(static_cast<std::size_t>(n), Number(0));
    for (const Term& t : c.terms) row.coef[t.var] += convert<Number>(t.coef);
    row.relation = c.relation;
    row.rhs = convert<Number>(c.rhs);
    p.rows.push_back(std::move(row));
  }
  return p;
}

inline std::vector<Rational> lower_bounds(const Model& m) {
  std::vector<Rational> out;
  for (const Variable& v : m.variables()) out.push_back(v.lower);
  return out;
}
inline std::vector<Rational> upper_bounds(const Model& m) {
  std::vector<Rational> out;
  for (const Variable& v : m.variables()) out.push_back(v.upper);
  return out;
}

}  // namespace detail

/// LP relaxation: every variable continuous within its box. Solved with the
/// exact phase-1 simplex over `Number` (Rational by default).
template <class Number = Rational>
std::optional<std::vector<Number>> lp_relaxation(const Model& model) {
  return simplex::find_vertex(
      detail::relaxation<Number>(model, detail::lower_bounds(model), detail::upper_bounds(model)));
}

/// Feasibility of a model whose integer variables are all fixed (lower ==
/// upper); returns a vertex of the fractional polyhedron.
inline std::optional<RationalVector> lp_feasible(const Model& model) {
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::kInteger && v.lower != v.upper) {
      throw InputError("lp_feasible: integer variable " + v.name + " is not fixed");
    }
  }
  return lp_relaxation<Rational>(model);
}

struct MilpOptions {
  std::uint64_t node_limit = 1'000'000;
};

struct MilpResult {
  std::optional<RationalVector> solution;
  std::uint64_t nodes = 0;
  std::uint64_t lp_solves = 0;

  bool feasible() const { return solution.has_value(); }
};

/// Depth-first search over the integer variables in declared order, values
/// ascending, pruning every node whose LP relaxation (unfixed integers
/// relaxed to their boxes) is infeasible. A relaxation vertex that already
/// puts every integer variable on an integer is accepted as is.
inline MilpResult milp_feasible(const Model& model, const MilpOptions& options = {}) {
  MilpResult result;
  const std::vector<int> ints = model.integer_variables();
  std::vector<Rational> lower = detail::lower_bounds(model);
  std::vector<Rational> upper = detail::upper_bounds(model);
  for (int j : ints) {
    lower[j] = Rational(lower[j].ceil());
    upper[j] = Rational(upper[j].floor());
    if (upper[j] < lower[j]) return result;
  }

  auto solve_node = [&]() -> std::optional<RationalVector> {
    ++result.lp_solves;
    return simplex::find_vertex(detail::relaxation<Rational>(model, lower, upper));
  };
  auto integral = [&](const RationalVector& x) {
    for (int j : ints) {
      if (!x[j].is_integer()) return false;
    }
    return true;
  };

  // Explicit DFS stack: depth d fixes ints[0..d).
  struct Level {
    Rational saved_lower;
    Rational saved_upper;
    std::int64_t next;
    std::int64_t last;
  };
  std::vector<Level> stack;
  auto root = solve_node();
  ++result.nodes;
  if (!root) return result;
  if (integral(*root)) {
    result.solution = std::move(root);
    return result;
  }
  stack.push_back({lower[ints[0]], upper[ints[0]], lower[ints[0]].floor(), upper[ints[0]].floor()});

  while (!stack.empty()) {
    const std::size_t depth = stack.size() - 1;
    const int var = ints[depth];
    Level& level = stack.back();
    if (level.next > level.last) {
      lower[var] = level.saved_lower;
      upper[var] = level.saved_upper;
      stack.pop_back();
      continue;
    }
    lower[var] = upper[var] = Rational(level.next++);
    if (++result.nodes > options.node_limit) {
      throw ResourceError("MILP search exceeded the node limit of " + std::to_string(options.node_limit));
    }
    auto x = solve_node();
    if (!x) continue;
    if (integral(*x)) {
      result.solution = std::move(x);
      return result;
    }
    // Some later integer is still fractional, so there is a deeper level.
    const int child = ints[depth + 1];
    stack.push_back({lower[child], upper[child], lower[child].floor(), upper[child].floor()});
  }
  return result;
}

}  // namespace ttr::milp
