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

#include <string>

#include "ttr/delta2.hpp"
#include "ttr/error.hpp"
#include "ttr/fpt.hpp"
#include "ttr/oracle.hpp"

namespace ttr {

enum class Algorithm { kAuto, kDelta2, kFpt, kOracle };

inline Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::kAuto;
  if (name == "delta2") return Algorithm::kDelta2;
  if (name == "fpt") return Algorithm::kFpt;
  if (name == "oracle") return Algorithm::kOracle;
  throw InputError("unknown algorithm '" + name + "'");
}

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kDelta2: return "delta2";
    case Algorithm::kFpt: return "fpt";
    case Algorithm::kOracle: return "oracle";
  }
  return "?";
}

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  fpt::FptOptions fpt;
  OracleOptions oracle;
};

struct SolveOutcome {
  OracleResult result;
  Algorithm used = Algorithm::kAuto;
};

/// auto picks delta2 for Δ = 2 and fpt otherwise.
inline SolveOutcome solve(const TtrInstance& instance, const SolveOptions& options = {}) {
  Algorithm a = options.algorithm;
  if (a == Algorithm::kAuto) a = instance.delta() == 2 ? Algorithm::kDelta2 : Algorithm::kFpt;
  switch (a) {
    case Algorithm::kDelta2: return {solve_delta2(instance), a};
    case Algorithm::kFpt: return {fpt::solve_fpt(instance, options.fpt), a};
    case Algorithm::kOracle: {
      const PreprocessResult pre = preprocess(instance);
      if (pre.infeasible()) return {OracleResult{}, a};
      return {brute_force_solve(*pre.instance, options.oracle), a};
    }
    case Algorithm::kAuto: break;
  }
  throw InternalError("unreachable algorithm dispatch");
}

}  // namespace ttr
