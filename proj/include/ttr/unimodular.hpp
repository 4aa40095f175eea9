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
#include <random>
#include <string>
#include <vector>

namespace ttr {

using IntMatrix = std::vector<std::vector<int>>;

struct UnimodularReport {
  bool unimodular = true;
  bool exhaustive = true;  // false when the sampling fallback was used
  std::uint64_t determinants = 0;
  std::string diagnostic;  // first offending entry or submatrix
};

namespace detail {

/// Exact determinant by fraction-free Gaussian elimination.
inline std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::string describe_submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                                      std::int64_t det) {
  std::string s = "rows {";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
  s += "} cols {";
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i]);
  return s + "} det " + std::to_string(det);
}

// Advances a sorted k-subset of [0, n) to its lexicographic successor.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace detail

/// Checks every square submatrix up to `max_order`. For each column subset
/// the rows are restricted, deduplicated and stripped of zero rows (either
/// forces a zero determinant), then all row subsets are tried. Past
/// `budget` determinants the remaining work is replaced by `samples` random
/// submatrices drawn with `seed`.
inline UnimodularReport total_unimodularity_report(const IntMatrix& matrix, int max_order, std::uint64_t seed = 1,
                                                   std::uint64_t budget = 2'000'000,
                                                   std::uint64_t samples = 20'000) {
  UnimodularReport report;
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != cols) {
      report.unimodular = false;
      report.diagnostic = "row " + std::to_string(i) + " has inconsistent length";
      return report;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (matrix[i][j] < -1 || matrix[i][j] > 1) {
        report.unimodular = false;
        report.diagnostic = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                            std::to_string(matrix[i][j]) + " is outside {-1,0,1}";
        return report;
      }
    }
  }
  auto check = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c,
                   const std::vector<std::vector<std::int64_t>>& sub) {
    ++report.determinants;
    const std::int64_t det = detail::bareiss_determinant(sub);
    if (det < -1 || det > 1) {
      report.unimodular = false;
      report.diagnostic = detail::describe_submatrix(r, c, det);
      return false;
    }
    return true;
  };

  const std::size_t top = std::min<std::size_t>({static_cast<std::size_t>(std::max(max_order, 0)), rows, cols});
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = j;
    do {
      // Distinct nonzero restricted rows, remembering one source row each.
      std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> restricted;
      for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::int64_t> r(k);
        bool nonzero = false;
        for (std::size_t j = 0; j < k; ++j) nonzero |= (r[j] = matrix[i][c[j]]) != 0;
        if (nonzero) restricted.emplace_back(std::move(r), i);
      }
      std::sort(restricted.begin(), restricted.end());
      restricted.erase(std::unique(restricted.begin(), restricted.end(),
                                   [](const auto& a, const auto& b) { return a.first == b.first; }),
                       restricted.end());
      if (restricted.size() < k) continue;
      std::vector<std::size_t> r(k);
      for (std::size_t j = 0; j < k; ++j) r[j] = j;
      do {
        if (report.determinants >= budget) goto sample;
        std::vector<std::vector<std::int64_t>> sub;
        std::vector<std::size_t> src;
        for (std::size_t i : r) {
          sub.push_back(restricted[i].first);
          src.push_back(restricted[i].second);
        }
        if (!check(src, c, sub)) return report;
      } while (detail::next_subset(r, restricted.size()));
    } while (detail::next_subset(c, cols));
  }
  return report;

sample:
  report.exhaustive = false;
  {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::size_t k = 1 + rng() % top;
      std::vector<std::size_t> all_r(rows), all_c(cols);
      for (std::size_t i = 0; i < rows; ++i) all_r[i] = i;
      for (std::size_t j = 0; j < cols; ++j) all_c[j] = j;
      std::shuffle(all_r.begin(), all_r.end(), rng);
      std::shuffle(all_c.begin(), all_c.end(), rng);
      std::vector<std::size_t> r(all_r.begin(), all_r.begin() + k), c(all_c.begin(), all_c.begin() + k);
      std::sort(r.begin(), r.end());
      std::sort(c.begin(), c.end());
      std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = matrix[r[i]][c[j]];
      }
      if (!check(r, c, sub)) return report;
    }
  }
  return report;
}

inline bool is_totally_unimodular_sample(const IntMatrix& matrix, int max_order, std::uint64_t seed = 1) {
  return total_unimodularity_report(matrix, max_order, seed).unimodular;
}

}  // namespace ttr
