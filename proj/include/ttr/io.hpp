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
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/instance.hpp"
#include "ttr/reductions/coloring.hpp"
#include "ttr/reductions/nae.hpp"

namespace ttr::io {

/// Instance plus free-form provenance lines.
struct InstanceDocument {
  TtrInstance instance{Tree::from_edges(1, {}), 1};
  std::vector<std::pair<std::string, std::string>> meta;
};

namespace detail {

inline std::string strip_comment(const std::string& line, char marker) {
  const auto pos = line.find(marker);
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] inline void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

inline std::int64_t read_int(std::istringstream& in, int line, const char* what) {
  std::string tok;
  if (!(in >> tok)) fail(line, std::string("missing ") + what);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
}

inline void expect_end(std::istringstream& in, int line) {
  std::string extra;
  if (in >> extra) fail(line, "unexpected token '" + extra + "'");
}

}  // namespace detail

/// Line format: `n N`, `delta D`, `edge U V`, `bound S T D`, `meta KEY VALUE`,
/// `#` starts a comment. Vertices are 0-based; absent bounds are trivial.
inline InstanceDocument parse_instance(const std::string& text) {
  std::istringstream doc(text);
  std::string raw;
  int line = 0;
  std::int64_t n = -1;
  std::int64_t delta = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  struct PendingBound {
    int line;
    std::int64_t s, t, d;
  };
  std::vector<PendingBound> bounds;
  std::vector<std::pair<std::string, std::string>> meta;
  while (std::getline(doc, raw)) {
    ++line;
    std::istringstream in(detail::strip_comment(raw, '#'));
    std::string key;
    if (!(in >> key)) continue;
    if (key == "n") {
      if (n >= 0) detail::fail(line, "vertex count given twice");
      n = detail::read_int(in, line, "vertex count");
      if (n < 1) detail::fail(line, "vertex count must be at least 1");
    } else if (key == "delta") {
      if (delta >= 0) detail::fail(line, "delta given twice");
      delta = detail::read_int(in, line, "delta");
      if (delta < 1) detail::fail(line, "delta must be at least 1");
    } else if (key == "edge") {
      const auto u = detail::read_int(in, line, "endpoint");
      const auto v = detail::read_int(in, line, "endpoint");
      if (u == v) detail::fail(line, "self-loop at vertex " + std::to_string(u));
      const auto canon = std::make_pair(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
      if (!seen_edges.insert(canon).second) {
        detail::fail(line, "duplicate edge (" + std::to_string(canon.first) + "," + std::to_string(canon.second) + ")");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (key == "bound") {
      const auto s = detail::read_int(in, line, "source");
      const auto t = detail::read_int(in, line, "target");
      const auto d = detail::read_int(in, line, "bound");
      if (d <= 0) detail::fail(line, "bounds must be positive");
      bounds.push_back({line, s, t, d});
    } else if (key == "meta") {
      std::string k;
      if (!(in >> k)) detail::fail(line, "missing meta key");
      std::string value;
      std::getline(in, value);
      const auto first = value.find_first_not_of(" \t");
      meta.emplace_back(k, first == std::string::npos ? "" : value.substr(first));
      continue;
    } else {
      detail::fail(line, "unknown keyword '" + key + "'");
    }
    detail::expect_end(in, line);
  }
  if (n < 0) throw InputError("missing vertex count (n)");
  if (delta < 0) throw InputError("missing delta");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing vertex");
    }
  }
  Tree tree = Tree::from_edges(static_cast<int>(n), edges);
  BoundMatrix matrix(static_cast<int>(n));
  std::set<std::pair<std::int64_t, std::int64_t>> seen_bounds;
  for (const PendingBound& b : bounds) {
    if (b.s < 0 || b.t < 0 || b.s >= n || b.t >= n) detail::fail(b.line, "bound references a missing vertex");
    if (b.s == b.t) detail::fail(b.line, "bound on the diagonal");
    if (!seen_bounds.insert({b.s, b.t}).second) detail::fail(b.line, "duplicate bound");
    matrix.set(static_cast<Vertex>(b.s), static_cast<Vertex>(b.t), b.d);
  }
  return {TtrInstance(std::move(tree), static_cast<int>(delta), std::move(matrix)), std::move(meta)};
}

inline std::string serialize_instance(const TtrInstance& instance,
                                      const std::vector<std::pair<std::string, std::string>>& meta = {}) {
  std::ostringstream out;
  for (const auto& [k, v] : meta) out << "meta " << k << " " << v << "\n";
  out << "n " << instance.tree().vertex_count() << "\n";
  out << "delta " << instance.delta() << "\n";
  for (const Edge& e : instance.tree().edges()) out << "edge " << e.u << " " << e.v << "\n";
  for (const BoundEntry& b : instance.bounds().explicit_entries()) {
    out << "bound " << b.s << " " << b.t << " " << b.bound << "\n";
  }
  return out.str();
}

/// Labels in edge-index order (edges sorted lexicographically).
inline PeriodicLabeling parse_labeling(const std::string& text) {
  std::istringstream doc(text);
  std::string raw;
  int line = 0;
  std::vector<Label> labels;
  while (std::getline(doc, raw)) {
    ++line;
    std::istringstream in(detail::strip_comment(raw, '#'));
    std::string tok;
    while (in >> tok) {
      std::istringstream one(tok);
      labels.push_back(static_cast<Label>(detail::read_int(one, line, "label")));
    }
  }
  return PeriodicLabeling(std::move(labels));
}

inline std::string serialize_labeling(const PeriodicLabeling& labeling) {
  std::ostringstream out;
  for (int i = 0; i < labeling.size(); ++i) out << (i ? " " : "") << labeling[i];
  out << "\n";
  return out.str();
}

/// DIMACS graph: `p edge N M`, `e U V` (1-based), `c` comment lines.
inline reductions::SimpleGraph parse_dimacs_graph(const std::string& text) {
  std::istringstream doc(text);
  std::string raw;
  int line = 0;
  std::int64_t n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(doc, raw)) {
    ++line;
    std::istringstream in(raw);
    std::string key;
    if (!(in >> key) || key == "c") continue;
    if (key == "p") {
      std::string kind;
      in >> kind;
      if (kind != "edge" && kind != "col") detail::fail(line, "expected 'p edge'");
      if (n >= 0) detail::fail(line, "problem line given twice");
      n = detail::read_int(in, line, "vertex count");
      detail::read_int(in, line, "edge count");
    } else if (key == "e") {
      if (n < 0) detail::fail(line, "edge before problem line");
      const auto u = detail::read_int(in, line, "endpoint");
      const auto v = detail::read_int(in, line, "endpoint");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      detail::fail(line, "unknown line type '" + key + "'");
    }
    detail::expect_end(in, line);
  }
  if (n < 0) throw InputError("missing problem line");
  return reductions::SimpleGraph::make(static_cast<int>(n), std::move(edges));
}

/// `p nae VARS CLAUSES` then one clause per line as three 1-based variables
/// terminated by 0.
inline reductions::Nae3SatInstance parse_nae(const std::string& text) {
  std::istringstream doc(text);
  std::string raw;
  int line = 0;
  std::int64_t vars = -1;
  std::int64_t declared = -1;
  std::vector<std::array<int, 3>> clauses;
  while (std::getline(doc, raw)) {
    ++line;
    std::istringstream in(raw);
    std::string first;
    if (!(in >> first) || first == "c") continue;
    if (first == "p") {
      std::string kind;
      in >> kind;
      if (kind != "nae") detail::fail(line, "expected 'p nae'");
      vars = detail::read_int(in, line, "variable count");
      declared = detail::read_int(in, line, "clause count");
      detail::expect_end(in, line);
      continue;
    }
    if (vars < 0) detail::fail(line, "clause before problem line");
    std::istringstream all(raw);
    std::array<int, 3> c{};
    for (int& x : c) {
      const auto v = detail::read_int(all, line, "variable");
      if (v < 1 || v > vars) detail::fail(line, "variable " + std::to_string(v) + " out of range");
      x = static_cast<int>(v - 1);
    }
    if (detail::read_int(all, line, "terminator") != 0) detail::fail(line, "clause must have exactly three variables");
    detail::expect_end(all, line);
    clauses.push_back(c);
  }
  if (vars < 0) throw InputError("missing problem line");
  if (declared != static_cast<std::int64_t>(clauses.size())) {
    throw InputError("problem line declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(clauses.size()));
  }
  return reductions::Nae3SatInstance::make(static_cast<int>(vars), std::move(clauses));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ttr::io
