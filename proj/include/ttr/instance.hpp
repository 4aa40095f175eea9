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
#include <string>
#include <utility>
#include <vector>

#include "ttr/error.hpp"
#include "ttr/tree.hpp"

namespace ttr {

using Duration = std::int64_t;
using Label = int;

struct BoundEntry {
  Vertex s = 0;
  Vertex t = 0;
  Duration bound = 0;
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

/// Ordered n x n matrix of upper bounds. Absent entries are TRIVIAL, i.e.
/// they stand for (k-1)*delta+1 without materializing it. The diagonal is
/// never consulted.
class BoundMatrix {
 public:
  BoundMatrix() = default;
  explicit BoundMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, kTrivial) {}

  int size() const { return n_; }

  std::optional<Duration> get(Vertex s, Vertex t) const {
    Duration d = entries_.at(index(s, t));
    if (d == kTrivial || s == t) return std::nullopt;
    return d;
  }
  bool is_trivial(Vertex s, Vertex t) const { return !get(s, t).has_value(); }

  void set(Vertex s, Vertex t, Duration bound) {
    if (bound < 1) {
      throw InputError("bounds must be positive (got " + std::to_string(bound) + " for " +
                       std::to_string(s) + "->" + std::to_string(t) + ")");
    }
    entries_.at(index(s, t)) = bound;
  }
  void set_symmetric(Vertex s, Vertex t, Duration bound) {
    set(s, t, bound);
    set(t, s, bound);
  }
  void set_trivial(Vertex s, Vertex t) { entries_.at(index(s, t)) = kTrivial; }

  /// Off-diagonal explicit entries in row-major order.
  std::vector<BoundEntry> explicit_entries() const {
    std::vector<BoundEntry> out;
    for (Vertex s = 0; s < n_; ++s) {
      for (Vertex t = 0; t < n_; ++t) {
        if (auto d = get(s, t)) out.push_back({s, t, *d});
      }
    }
    return out;
  }

  bool symmetric() const {
    for (Vertex s = 0; s < n_; ++s) {
      for (Vertex t = s + 1; t < n_; ++t) {
        if (get(s, t) != get(t, s)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const BoundMatrix&, const BoundMatrix&) = default;

 private:
  static constexpr Duration kTrivial = 0;

  std::size_t index(Vertex s, Vertex t) const {
    if (s < 0 || t < 0 || s >= n_ || t >= n_) {
      throw InputError("bound (" + std::to_string(s) + "," + std::to_string(t) +
                       ") references a non-vertex");
    }
    return static_cast<std::size_t>(s) * n_ + t;
  }

  int n_ = 0;
  std::vector<Duration> entries_;
};

/// A tree, a period, and the duration upper bounds to realize.
class TtrInstance {
 public:
  TtrInstance(Tree tree, int delta, BoundMatrix bounds)
      : tree_(std::move(tree)), delta_(delta), bounds_(std::move(bounds)) {
    if (delta_ < 1) throw InputError("delta must be at least 1");
    if (bounds_.size() != tree_.vertex_count()) {
      throw InputError("bound matrix size does not match vertex count");
    }
  }
  TtrInstance(Tree tree, int delta)
      : TtrInstance(tree, delta, BoundMatrix(tree.vertex_count())) {}

  const Tree& tree() const { return tree_; }
  int delta() const { return delta_; }
  const BoundMatrix& bounds() const { return bounds_; }
  BoundMatrix& mutable_bounds() { return bounds_; }

  friend bool operator==(const TtrInstance& a, const TtrInstance& b) {
    return a.delta_ == b.delta_ && a.tree_.vertex_count() == b.tree_.vertex_count() &&
           a.tree_.edges() == b.tree_.edges() && a.bounds_ == b.bounds_;
  }

 private:
  Tree tree_;
  int delta_ = 1;
  BoundMatrix bounds_;
};

/// One label in [1, delta] per edge, indexed like Tree::edges().
class PeriodicLabeling {
 public:
  PeriodicLabeling() = default;
  explicit PeriodicLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
  static PeriodicLabeling uniform(int edge_count, Label label = 1) {
    return PeriodicLabeling(std::vector<Label>(static_cast<std::size_t>(edge_count), label));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Label operator[](int edge) const { return labels_.at(edge); }
  Label& operator[](int edge) { return labels_.at(edge); }
  const std::vector<Label>& labels() const { return labels_; }

  /// Throws InputError unless every edge carries a label in [1, delta].
  void validate(const Tree& tree, int delta) const {
    if (size() != tree.edge_count()) {
      throw InputError("labeling covers " + std::to_string(size()) + " edges, tree has " +
                       std::to_string(tree.edge_count()));
    }
    for (int e = 0; e < size(); ++e) {
      if (labels_[e] < 1 || labels_[e] > delta) {
        throw InputError("label " + std::to_string(labels_[e]) + " on edge " +
                         tree.describe_edge(e) + " is outside [1," + std::to_string(delta) + "]");
      }
    }
  }

  friend auto operator<=>(const PeriodicLabeling&, const PeriodicLabeling&) = default;

 private:
  std::vector<Label> labels_;
};

enum class Answer { kYes, kNo };

inline const char* to_string(Answer a) { return a == Answer::kYes ? "YES" : "NO"; }

/// Outcome of any decision procedure. `examined` counts the solver's unit of
/// work: labelings (oracle), internal labelings (delta2), global label
/// configurations (fpt).
struct OracleResult {
  Answer answer = Answer::kNo;
  std::optional<PeriodicLabeling> witness;
  std::uint64_t examined = 0;

  bool yes() const { return answer == Answer::kYes; }
};

}  // namespace ttr
