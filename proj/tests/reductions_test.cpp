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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "support/enumerate.hpp"
#include "ttr/delta2.hpp"
#include "ttr/fpt.hpp"
#include "ttr/oracle.hpp"
#include "ttr/reductions/coloring.hpp"
#include "ttr/reductions/nae.hpp"

namespace ttr::reductions {
namespace {

const SimpleGraph kTriangle = SimpleGraph::make(3, {{0, 1}, {0, 2}, {1, 2}});
const SimpleGraph kK4 = SimpleGraph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

TEST(FromColoring, TriangleStar) {
  const TtrInstance inst = from_coloring(kTriangle, 3);
  EXPECT_EQ(inst.tree().vertex_count(), 4);
  EXPECT_EQ(inst.tree().degree(0), 3);
  EXPECT_EQ(inst.bounds().get(1, 2), 3);
  EXPECT_EQ(inst.bounds().get(3, 1), 3);
  EXPECT_EQ(inst.bounds().get(0, 1), 1);
  EXPECT_TRUE(inst.bounds().symmetric());
  EXPECT_TRUE(brute_force_solve(inst).yes());
}

TEST(FromColoring, CompleteGraphOnFour) {
  const TtrInstance inst = from_coloring(kK4, 3);
  EXPECT_EQ(inst.tree().vertex_count(), 5);
  EXPECT_FALSE(brute_force_solve(inst).yes());
}

TEST(FromColoring, EmptyGraph) {
  const TtrInstance inst = from_coloring(SimpleGraph::make(2, {}), 3);
  EXPECT_TRUE(inst.bounds().is_trivial(1, 2));
  EXPECT_TRUE(fpt::solve_fpt(inst).yes());
}

TEST(FromColoring, RejectsSmallPeriod) {
  EXPECT_THROW(from_coloring(kTriangle, 2), InputError);
}

TEST(ColoringMaps, RoundTrip) {
  const PeriodicLabeling l = coloring_to_labeling(kTriangle, 3, {1, 2, 3});
  EXPECT_EQ(l, PeriodicLabeling({1, 2, 3}));
  EXPECT_TRUE(verify_labeling(from_coloring(kTriangle, 3), l).clean());
  EXPECT_EQ(labeling_to_coloring(kTriangle, 3, l), (Coloring{1, 2, 3}));
}

TEST(ColoringMaps, ImproperExtraction) {
  const PeriodicLabeling l({1, 1, 2});
  EXPECT_FALSE(verify_labeling(from_coloring(kTriangle, 3), l).clean());
  EXPECT_THROW(labeling_to_coloring(kTriangle, 3, l), ValidationError);
  EXPECT_THROW(coloring_to_labeling(kTriangle, 3, {1, 1, 2}), ValidationError);
}

TEST(ColoringMaps, SingleVertex) {
  const SimpleGraph g = SimpleGraph::make(1, {});
  const PeriodicLabeling l = coloring_to_labeling(g, 3, {2});
  EXPECT_EQ(l, PeriodicLabeling({2}));
  EXPECT_EQ(labeling_to_coloring(g, 3, l), (Coloring{2}));
}

TEST(ColoringEquivalence, GraphsOnFourVertices) {
  for (int n = 1; n <= 4; ++n) {
    for (const SimpleGraph& g : testing::all_graphs(n)) {
      const TtrInstance inst = from_coloring(g, 3);
      EXPECT_EQ(fpt::solve_fpt(inst).yes(), testing::colorable(g, 3));
      EXPECT_EQ(brute_force_solve(inst).yes(), testing::colorable(g, 3));
    }
  }
}

const Nae3SatInstance kXyz = Nae3SatInstance::make(3, {{0, 1, 2}});
const Nae3SatInstance kXxx = Nae3SatInstance::make(1, {{0, 0, 0}});

TEST(NaeDiameter, Shape) {
  const NaeReduction r = from_nae3sat_diameter(kXyz);
  EXPECT_EQ(r.instance.tree().vertex_count(), 1 + 6 + 15);
  EXPECT_EQ(r.instance.delta(), 2);
  EXPECT_TRUE(r.instance.bounds().symmetric());
  const NaeReduction two = from_nae3sat_diameter(Nae3SatInstance::make(3, {{0, 1, 2}, {2, 1, 0}}));
  EXPECT_EQ(two.instance.tree().diameter(), 6);
}

TEST(NaeDegree, Shape) {
  const NaeReduction r = from_nae3sat_degree(kXyz);
  EXPECT_EQ(r.instance.tree().max_degree(), 8);
  EXPECT_EQ(r.instance.tree().degree(r.clauses[0].w), 8);
  EXPECT_TRUE(r.instance.bounds().symmetric());
  // Cross bounds 2(n - i + j) + 3 with n = 3, j = 1.
  EXPECT_EQ(r.instance.bounds().get(r.variables[0].v1, r.clauses[0].occurrence[0][0]), 9);
  EXPECT_EQ(r.instance.bounds().get(r.variables[1].v1, r.clauses[0].occurrence[1][0]), 7);
  EXPECT_EQ(r.instance.bounds().get(r.variables[2].v2, r.clauses[0].occurrence[2][1]), 5);
}

class NaeLayouts : public ::testing::TestWithParam<NaeLayout> {};

TEST_P(NaeLayouts, SatisfiableClause) {
  const NaeReduction r = from_nae3sat(kXyz, GetParam());
  const OracleResult res = solve_delta2(r.instance);
  ASSERT_TRUE(res.yes());
  const std::vector<bool> a = labeling_to_nae_assignment(r, *res.witness);
  EXPECT_TRUE(kXyz.satisfied_by(a));
}

TEST_P(NaeLayouts, UnsatisfiableClause) {
  const NaeReduction r = from_nae3sat(kXxx, GetParam());
  EXPECT_FALSE(solve_delta2(r.instance).yes());
  EXPECT_FALSE(brute_force_solve(r.instance).yes());
}

TEST_P(NaeLayouts, AssignmentRoundTrip) {
  const NaeReduction r = from_nae3sat(kXyz, GetParam());
  const std::vector<bool> a{true, true, false};
  const PeriodicLabeling l = nae_assignment_to_labeling(r, a);
  EXPECT_TRUE(verify_labeling(r.instance, l).clean());
  EXPECT_EQ(labeling_to_nae_assignment(r, l), a);
  const PeriodicLabeling flipped = cyclic_shift(l, 2, 1);
  EXPECT_EQ(labeling_to_nae_assignment(r, flipped), (std::vector<bool>{false, false, true}));
}

TEST_P(NaeLayouts, AllTrueViolatesLastGadgetBound) {
  const NaeReduction r = from_nae3sat(kXyz, GetParam());
  EXPECT_THROW(nae_assignment_to_labeling(r, {true, true, true}), ValidationError);
  const PeriodicLabeling l = nae_assignment_to_labeling(r, {true, true, true}, false);
  const DurationReport report = verify_labeling(r.instance, l);
  bool found = false;
  for (const Violation& v : report.violations) {
    if (v.s == r.clauses[0].w && v.t == r.clauses[0].u[2]) {
      found = true;
      EXPECT_EQ(v.duration, 5);
      EXPECT_EQ(v.bound, 4);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(labeling_to_nae_assignment(r, l), InputError);
}

TEST_P(NaeLayouts, EveryWitnessGivesSatisfyingAssignment) {
  const NaeReduction r = from_nae3sat(kXyz, GetParam());
  for (const auto& a : testing::nae_solutions(kXyz)) {
    const PeriodicLabeling l = nae_assignment_to_labeling(r, a);
    EXPECT_TRUE(kXyz.satisfied_by(labeling_to_nae_assignment(r, l)));
  }
}

TEST_P(NaeLayouts, SmallFormulasMatchSatisfiability) {
  for (int vars = 1; vars <= 2; ++vars) {
    for (int clauses = 1; clauses <= 2; ++clauses) {
      for (const auto& f : testing::all_formulas(vars, clauses)) {
        const NaeReduction r = from_nae3sat(f, GetParam());
        const bool sat = !testing::nae_solutions(f).empty();
        const OracleResult res = solve_delta2(r.instance);
        EXPECT_EQ(res.yes(), sat);
        if (res.yes()) EXPECT_TRUE(f.satisfied_by(labeling_to_nae_assignment(r, *res.witness)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Both, NaeLayouts, ::testing::Values(NaeLayout::kDiameter, NaeLayout::kDegree),
                         [](const auto& info) { return info.param == NaeLayout::kDiameter ? "Diameter" : "Degree"; });

TEST(Nae3Sat, RejectsUnknownVariable) {
  EXPECT_THROW(Nae3SatInstance::make(2, {{0, 1, 2}}), InputError);
  EXPECT_THROW(Nae3SatInstance::make(0, {}), InputError);
}

}  // namespace
}  // namespace ttr::reductions
