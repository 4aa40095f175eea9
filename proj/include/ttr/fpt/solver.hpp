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
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/fpt/configuration.hpp"
#include "ttr/fpt/model.hpp"
#include "ttr/fpt/reconstruct.hpp"
#include "ttr/milp.hpp"
#include "ttr/preprocess.hpp"

namespace ttr::fpt {

struct FptOptions {
  std::uint64_t max_configs = 0;  // 0 = unlimited
  int parallel = 1;
  std::uint64_t node_limit = 1'000'000;
  bool pin_first_part = true;
  bool local_pruning = true;
};

struct FptReport {
  OracleResult result;
  std::uint64_t configurations_total = 0;     // size of the unpruned product
  std::uint64_t configurations_streamed = 0;  // configurations actually visited
  std::uint64_t rejected_at_build = 0;
  std::uint64_t milp_solves = 0;
  std::uint64_t milp_nodes = 0;
  std::optional<GlobalLabelConfiguration> sigma;
  std::vector<Rational> x_values;  // fractional part of the accepted solution
  std::string note;
};

/// For each high-degree vertex, neighbor-slot pairs (a, b) whose edges can
/// never share a label: some explicit bound D(s,t) along a path entering via a
/// and leaving via b is below Δ + k - 1, the least duration of a length-k path
/// that waits a full period once.
inline std::vector<std::vector<std::pair<int, int>>> forced_separations(const TtrInstance& instance,
                                                                       const VertexClasses& classes) {
  const Tree& tree = instance.tree();
  const std::vector<int> hidx = detail::high_index(tree, classes);
  std::vector<std::vector<std::pair<int, int>>> out(classes.high_degree.size());
  for (const BoundEntry& b : instance.bounds().explicit_entries()) {
    const int k = tree.distance(b.s, b.t);
    if (k < 2 || b.bound >= instance.delta() + k - 1) continue;
    const PathDecomposition d = decompose_path(tree, b.s, b.t);
    for (std::size_t j = 0; j < d.high.size(); ++j) {
      const Vertex v = d.high[j];
      int a = detail::neighbor_slot(tree, v, d.high_neighbors[j].first);
      int c = detail::neighbor_slot(tree, v, d.high_neighbors[j].second);
      out[hidx[v]].emplace_back(std::min(a, c), std::max(a, c));
    }
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

namespace detail {

struct Attempt {
  bool rejected = false;
  std::uint64_t nodes = 0;
  std::optional<CompactMilp> milp;
  std::optional<RationalVector> solution;
};

inline Attempt attempt(const TtrInstance& instance, const VertexClasses& classes,
                       const GlobalLabelConfiguration& sigma, const FptOptions& options) {
  Attempt a;
  BuildOutcome built = build_compact_milp(instance, classes, sigma, {options.pin_first_part});
  if (!built.milp) {
    a.rejected = true;
    return a;
  }
  milp::MilpResult r = milp::milp_feasible(built.milp->model, {options.node_limit});
  a.nodes = r.nodes;
  if (r.solution) {
    a.solution = std::move(r.solution);
    a.milp = std::move(built.milp);
  }
  return a;
}

}  // namespace detail

/// Decides the instance by streaming global label configurations and solving
/// one mixed-integer program per configuration. The witness comes from the
/// first feasible configuration in stream order, also when run in parallel.
inline FptReport solve_fpt_report(const TtrInstance& instance, const FptOptions& options = {}) {
  FptReport report;
  report.result.answer = Answer::kNo;
  PreprocessResult pre = preprocess(instance);
  if (pre.infeasible()) {
    report.note = pre.reason;
    return report;
  }
  const TtrInstance& work = *pre.instance;
  const Tree& tree = work.tree();
  if (all_bounds_trivial(work)) {
    report.result.answer = Answer::kYes;
    report.result.witness = PeriodicLabeling::uniform(tree.edge_count());
    report.note = "all bounds trivial";
    return report;
  }
  const VertexClasses classes = classify_vertices(tree);
  auto choices = ConfigurationStream::all_choices(tree, classes, work.delta());
  {
    ConfigurationStream full(choices);
    report.configurations_total = full.total();
  }
  if (options.local_pruning) {
    const auto separations = forced_separations(work, classes);
    for (std::size_t i = 0; i < choices.size(); ++i) {
      std::erase_if(choices[i], [&](const LocalConfiguration& c) {
        for (const auto& [a, b] : separations[i]) {
          if (c.rank[a] == c.rank[b]) return true;
        }
        return false;
      });
    }
  }
  ConfigurationStream stream(std::move(choices));
  const int workers = std::max(1, options.parallel);
  const std::size_t batch_size = workers == 1 ? 1 : static_cast<std::size_t>(workers) * 8;
  std::vector<GlobalLabelConfiguration> batch;
  std::vector<detail::Attempt> attempts;
  std::vector<std::exception_ptr> errors;

  auto accept = [&](const GlobalLabelConfiguration& sigma, detail::Attempt& a) {
    const DelayAssignment delays = delays_from_compact(work, classes, *a.milp, *a.solution);
    PeriodicLabeling labeling = reconstruct_labeling(tree, work.delta(), delays);
    if (!verify_labeling(instance, labeling).clean()) {
      throw InternalError("reconstructed labeling fails verification for configuration " +
                          describe(tree, classes, sigma));
    }
    for (Vertex v : classes.degree_two) report.x_values.push_back((*a.solution)[a.milp->x[v]]);
    report.sigma = sigma;
    report.result.answer = Answer::kYes;
    report.result.witness = std::move(labeling);
  };

  while (true) {
    batch.clear();
    GlobalLabelConfiguration sigma;
    while (batch.size() < batch_size && stream.next(sigma)) {
      if (options.max_configs != 0 && stream.produced() > options.max_configs) {
        throw ResourceError("configuration budget of " + std::to_string(options.max_configs) + " exceeded");
      }
      batch.push_back(sigma);
    }
    if (batch.empty()) break;
    attempts.assign(batch.size(), {});
    errors.assign(batch.size(), nullptr);
    auto run = [&](std::size_t i) {
      try {
        attempts[i] = detail::attempt(work, classes, batch[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) run(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) run(i);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      ++report.configurations_streamed;
      ++report.result.examined;
      detail::Attempt& a = attempts[i];
      if (a.rejected) {
        ++report.rejected_at_build;
        continue;
      }
      ++report.milp_solves;
      report.milp_nodes += a.nodes;
      if (a.solution) {
        accept(batch[i], a);
        return report;
      }
    }
  }
  return report;
}

inline OracleResult solve_fpt(const TtrInstance& instance, const FptOptions& options = {}) {
  return solve_fpt_report(instance, options).result;
}

}  // namespace ttr::fpt

namespace ttr {
using fpt::solve_fpt;
}  // namespace ttr
