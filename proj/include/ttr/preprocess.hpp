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

#include "ttr/duration.hpp"
#include "ttr/instance.hpp"

namespace ttr {

struct PreprocessResult {
  /// Normalized instance, or nullopt when the bounds are already unsatisfiable.
  std::optional<TtrInstance> instance;
  std::string reason;

  bool infeasible() const { return !instance.has_value(); }
};

/// Normalizes bounds and rejects instances that no labeling can satisfy.
///  - explicit bounds at or above the trivial bound become TRIVIAL;
///  - a bound below the tree distance is unsatisfiable (every delay is >= 1);
///  - for a pair at distance k >= 2 with both directions explicit,
///    D(s,t) + D(t,s) must reach (k-1)*delta + 2.
inline PreprocessResult preprocess(const TtrInstance& instance) {
  const Tree& tree = instance.tree();
  const int delta = instance.delta();
  BoundMatrix bounds = instance.bounds();
  const int n = tree.vertex_count();

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      auto d = bounds.get(s, t);
      if (!d) continue;
      int k = tree.distance(s, t);
      if (*d < k) {
        return {std::nullopt, "bound " + std::to_string(*d) + " for " + std::to_string(s) + "->" +
                                  std::to_string(t) + " is below the tree distance " +
                                  std::to_string(k)};
      }
      if (*d >= trivial_bound(k, delta)) bounds.set_trivial(s, t);
    }
  }

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      auto st = bounds.get(s, t);
      auto ts = bounds.get(t, s);
      if (!st || !ts) continue;
      int k = tree.distance(s, t);
      if (k >= 2 && *st + *ts < static_cast<Duration>(k - 1) * delta + 2) {
        return {std::nullopt, "bounds between " + std::to_string(s) + " and " + std::to_string(t) +
                                  " sum to " + std::to_string(*st + *ts) + ", below the round-trip minimum " +
                                  std::to_string(static_cast<Duration>(k - 1) * delta + 2)};
      }
    }
  }
  return {TtrInstance(tree, delta, std::move(bounds)), {}};
}

/// True when no explicit bound remains, in which case every labeling works.
inline bool all_bounds_trivial(const TtrInstance& instance) {
  return instance.bounds().explicit_entries().empty();
}

}  // namespace ttr
