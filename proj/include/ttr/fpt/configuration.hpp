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
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/tree.hpp"

namespace ttr::fpt {

struct VertexClasses {
  std::vector<Vertex> degree_two;
  std::vector<Vertex> high_degree;  // degree > 2, ascending
  std::vector<Vertex> leaves;

  int leaf_count() const { return static_cast<int>(leaves.size()); }
};

inline VertexClasses classify_vertices(const Tree& tree) {
  VertexClasses out;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const int d = tree.degree(v);
    if (d == 1) {
      out.leaves.push_back(v);
    } else if (d == 2) {
      out.degree_two.push_back(v);
    } else if (d > 2) {
      out.high_degree.push_back(v);
    }
  }
  return out;
}

/// Largest number of label classes one vertex may use.
inline int max_parts(const VertexClasses& classes, int delta) {
  return std::min(classes.leaf_count(), delta);
}

/// Ordered partition of the edges around one vertex. rank[i] is the part of
/// the i-th incident edge (neighbors in ascending order); parts are numbered
/// by increasing label.
struct LocalConfiguration {
  std::vector<int> rank;
  int parts = 0;

  friend auto operator<=>(const LocalConfiguration&, const LocalConfiguration&) = default;
};

/// All ordered partitions of a `degree`-element set into at most `limit`
/// parts, as surjective rank vectors in lexicographic order.
inline std::vector<LocalConfiguration> local_configurations(int degree, int limit) {
  std::vector<LocalConfiguration> out;
  if (degree <= 0) return out;
  limit = std::min(limit, degree);
  if (limit <= 0) return out;
  std::vector<int> rank(static_cast<std::size_t>(degree), 0);
  std::vector<int> seen(static_cast<std::size_t>(limit), 0);
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    int top = 0;
    for (int r : rank) {
      seen[r] = 1;
      top = std::max(top, r);
    }
    bool onto = true;
    for (int p = 0; p <= top; ++p) onto = onto && seen[p];
    if (onto) out.push_back({rank, top + 1});
    int i = degree - 1;
    while (i >= 0 && rank[i] == limit - 1) rank[i--] = 0;
    if (i < 0) break;
    ++rank[i];
  }
  return out;
}

/// One local configuration per high-degree vertex, aligned with
/// VertexClasses::high_degree.
struct GlobalLabelConfiguration {
  std::vector<LocalConfiguration> local;

  friend auto operator<=>(const GlobalLabelConfiguration&, const GlobalLabelConfiguration&) = default;
};

inline std::string describe(const Tree& tree, const VertexClasses& classes,
                            const GlobalLabelConfiguration& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.local.size(); ++i) {
    const Vertex v = classes.high_degree[i];
    if (!out.empty()) out += "; ";
    out += "v" + std::to_string(v) + ":";
    const auto& nb = tree.neighbors(v);
    for (int p = 0; p < sigma.local[i].parts; ++p) {
      out += p == 0 ? " {" : " < {";
      bool first = true;
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (sigma.local[i].rank[j] != p) continue;
        if (!first) out += ",";
        out += std::to_string(nb[j]);
        first = false;
      }
      out += "}";
    }
  }
  return out.empty() ? "(empty)" : out;
}

/// Streams the Cartesian product of per-vertex candidate lists, last vertex
/// fastest. With no high-degree vertex there is exactly one (empty) element.
class ConfigurationStream {
 public:
  explicit ConfigurationStream(std::vector<std::vector<LocalConfiguration>> choices)
      : choices_(std::move(choices)), digits_(choices_.size(), 0) {
    for (const auto& c : choices_) {
      if (c.empty()) done_ = true;
    }
  }

  ConfigurationStream(const Tree& tree, const VertexClasses& classes, int delta)
      : ConfigurationStream(all_choices(tree, classes, delta)) {}

  static std::vector<std::vector<LocalConfiguration>> all_choices(const Tree& tree,
                                                                  const VertexClasses& classes,
                                                                  int delta) {
    std::vector<std::vector<LocalConfiguration>> out;
    const int limit = max_parts(classes, delta);
    for (Vertex v : classes.high_degree) out.push_back(local_configurations(tree.degree(v), limit));
    return out;
  }

  bool next(GlobalLabelConfiguration& sigma) {
    if (done_) return false;
    sigma.local.resize(choices_.size());
    for (std::size_t i = 0; i < choices_.size(); ++i) sigma.local[i] = choices_[i][digits_[i]];
    std::size_t i = choices_.size();
    while (true) {
      if (i == 0) {
        done_ = true;
        break;
      }
      --i;
      if (++digits_[i] < choices_[i].size()) break;
      digits_[i] = 0;
    }
    ++produced_;
    return true;
  }

  /// Size of the full product, saturating at UINT64_MAX.
  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (const auto& c : choices_) {
      if (c.empty()) return 0;
      if (t > UINT64_MAX / c.size()) return UINT64_MAX;
      t *= c.size();
    }
    return t;
  }

  std::uint64_t produced() const { return produced_; }

 private:
  std::vector<std::vector<LocalConfiguration>> choices_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
  std::uint64_t produced_ = 0;
};

/// Materialized stream; only sensible for small trees.
inline std::vector<GlobalLabelConfiguration> enumerate_configurations(const Tree& tree,
                                                                      const VertexClasses& classes,
                                                                      int delta) {
  std::vector<GlobalLabelConfiguration> out;
  ConfigurationStream stream(tree, classes, delta);
  GlobalLabelConfiguration sigma;
  while (stream.next(sigma)) out.push_back(sigma);
  return out;
}

inline void check_configuration(const Tree& tree, const VertexClasses& classes, int delta,
                                const GlobalLabelConfiguration& sigma) {
  if (sigma.local.size() != classes.high_degree.size()) {
    throw InputError("configuration covers " + std::to_string(sigma.local.size()) + " vertices, expected " +
                     std::to_string(classes.high_degree.size()));
  }
  const int limit = max_parts(classes, delta);
  for (std::size_t i = 0; i < sigma.local.size(); ++i) {
    const Vertex v = classes.high_degree[i];
    const LocalConfiguration& c = sigma.local[i];
    if (c.parts > limit) {
      throw InputError("configuration at vertex " + std::to_string(v) + " has " + std::to_string(c.parts) +
                       " parts, limit is " + std::to_string(limit));
    }
    if (static_cast<int>(c.rank.size()) != tree.degree(v)) {
      throw InputError("configuration at vertex " + std::to_string(v) + " does not match its degree");
    }
    std::vector<int> seen(static_cast<std::size_t>(std::max(c.parts, 0)), 0);
    for (int r : c.rank) {
      if (r < 0 || r >= c.parts) throw InputError("configuration rank out of range at vertex " + std::to_string(v));
      seen[r] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw InputError("configuration at vertex " + std::to_string(v) + " has an empty part");
    }
  }
}

}  // namespace ttr::fpt
