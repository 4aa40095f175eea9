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

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttr/ttr.hpp"

namespace ttr::cli {

enum ExitCode { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

namespace detail {

using nlohmann::json;

inline json edges_json(const Tree& tree) {
  json out = json::array();
  for (const Edge& e : tree.edges()) out.push_back({e.u, e.v});
  return out;
}

inline json violations_json(const DurationReport& r) {
  json out = json::array();
  for (const Violation& v : r.violations) {
    out.push_back({{"s", v.s}, {"t", v.t}, {"duration", v.duration}, {"bound", v.bound}});
  }
  return out;
}

inline TtrInstance load_instance(const std::string& path) { return io::parse_instance(io::read_file(path)).instance; }

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

/// Random tree with bounds taken around a hidden labeling's durations.
inline TtrInstance random_instance(int n, int delta, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("--vertices must be at least 1");
  if (delta < 1) throw InputError("--delta must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  Tree tree = Tree::from_edges(n, edges);
  std::vector<Label> labels(static_cast<std::size_t>(tree.edge_count()));
  for (Label& l : labels) l = std::uniform_int_distribution<int>(1, delta)(rng);
  const DurationReport d = all_pairs_durations(tree, PeriodicLabeling(labels), delta);
  BoundMatrix bounds(n);
  std::bernoulli_distribution pick(density);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || tree.distance(s, t) < 2 || !pick(rng)) continue;
      const Duration b = d.duration(s, t) + std::uniform_int_distribution<int>(-1, 2)(rng);
      bounds.set(s, t, std::max<Duration>(b, 1));
    }
  }
  return TtrInstance(std::move(tree), delta, std::move(bounds));
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Periodic temporal tree realization toolkit", "ttr"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();

  std::string instance_path, labeling_path, input_path, output_path;
  std::string algo = "auto";
  std::uint64_t max_configs = 0;
  int parallel = 1;
  std::uint64_t budget = OracleOptions{}.budget;
  std::uint64_t node_limit = fpt::FptOptions{}.node_limit;

  CLI::App* solve = app.add_subcommand("solve", "decide an instance and print a witness");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", algo, "auto|delta2|fpt|oracle")
      ->check(CLI::IsMember({"auto", "delta2", "fpt", "oracle"}))
      ->capture_default_str();
  solve->add_option("--max-configs", max_configs, "configuration budget for fpt (0 = none)");
  solve->add_option("--parallel", parallel, "fpt worker threads")->check(CLI::Range(1, 256));
  solve->add_option("--budget", budget, "labeling budget for the oracle")->capture_default_str();
  solve->add_option("--node-limit", node_limit, "branch-and-bound node limit per program")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle->add_option("--budget", budget, "labeling budget")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check a labeling against an instance");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("labeling", labeling_path, "labeling file")->required();

  CLI::App* durations = app.add_subcommand("durations", "all-pairs fastest durations of a labeling");
  durations->add_option("instance", instance_path, "instance file")->required();
  durations->add_option("labeling", labeling_path, "labeling file")->required();
  bool text = false;
  durations->add_flag("--text", text, "plain table instead of JSON");

  CLI::App* generate = app.add_subcommand("generate", "build an instance from a source problem");
  std::string from;
  int delta = 3;
  int vertices = 8;
  double density = 0.3;
  generate->add_option("--from", from, "coloring|nae-diameter|nae-degree|random")
      ->required()
      ->check(CLI::IsMember({"coloring", "nae-diameter", "nae-degree", "random"}));
  generate->add_option("input", input_path, "source file (DIMACS graph or NAE triples)");
  generate->add_option("--delta", delta, "period for coloring/random")->capture_default_str();
  generate->add_option("--vertices", vertices, "tree size for random")->capture_default_str();
  generate->add_option("--density", density, "explicit-bound probability for random")->capture_default_str();
  generate->add_option("-o,--output", output_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve || *oracle) {
      const TtrInstance instance = detail::load_instance(instance_path);
      SolveOptions options;
      options.algorithm = *oracle ? Algorithm::kOracle : parse_algorithm(algo);
      options.fpt.max_configs = max_configs;
      options.fpt.parallel = parallel;
      options.fpt.node_limit = node_limit;
      options.oracle.budget = budget;
      const auto start = std::chrono::steady_clock::now();
      const SolveOutcome outcome = ttr::solve(instance, options);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      json report = {{"answer", to_string(outcome.result.answer)},
                     {"algorithm", to_string(outcome.used)},
                     {"examined", outcome.result.examined},
                     {"wall_time_ms", ms}};
      if (outcome.result.witness) {
        report["edges"] = detail::edges_json(instance.tree());
        report["witness"] = outcome.result.witness->labels();
      }
      out << report.dump(2) << "\n";
      return outcome.result.yes() ? kYes : kNo;
    }
    if (*verify) {
      const TtrInstance instance = detail::load_instance(instance_path);
      const PeriodicLabeling labeling = io::parse_labeling(io::read_file(labeling_path));
      const DurationReport r = verify_labeling(instance, labeling);
      out << json{{"valid", r.clean()}, {"violations", detail::violations_json(r)}}.dump(2) << "\n";
      return r.clean() ? kYes : kNo;
    }
    if (*durations) {
      const TtrInstance instance = detail::load_instance(instance_path);
      const PeriodicLabeling labeling = io::parse_labeling(io::read_file(labeling_path));
      const DurationReport r = all_pairs_durations(instance.tree(), labeling, instance.delta());
      const int n = r.n;
      if (text) {
        for (Vertex s = 0; s < n; ++s) {
          for (Vertex t = 0; t < n; ++t) {
            if (s != t) out << s << " " << t << " " << r.duration(s, t) << "\n";
          }
        }
      } else {
        json rows = json::array();
        for (Vertex s = 0; s < n; ++s) {
          for (Vertex t = 0; t < n; ++t) {
            if (s != t) rows.push_back({{"s", s}, {"t", t}, {"duration", r.duration(s, t)}});
          }
        }
        out << json{{"n", n}, {"delta", instance.delta()}, {"durations", rows}}.dump(2) << "\n";
      }
      return kYes;
    }
    if (*generate) {
      std::vector<std::pair<std::string, std::string>> meta{{"generator", from}};
      TtrInstance instance = [&] {
        if (from == "random") {
          meta.emplace_back("seed", std::to_string(seed));
          return detail::random_instance(vertices, delta, density, seed);
        }
        if (input_path.empty()) throw InputError("generate --from " + from + " needs an input file");
        meta.emplace_back("source", input_path);
        const std::string source = io::read_file(input_path);
        if (from == "coloring") return reductions::from_coloring(io::parse_dimacs_graph(source), delta);
        const auto f = io::parse_nae(source);
        return reductions::from_nae3sat(f, from == "nae-diameter" ? reductions::NaeLayout::kDiameter
                                                                  : reductions::NaeLayout::kDegree)
            .instance;
      }();
      detail::write_text(output_path, io::serialize_instance(instance, meta), out);
      return kYes;
    }
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << "\n";
    return kNo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ttr::cli
