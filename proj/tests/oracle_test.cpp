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

#include <vector>

#include "support/generators.hpp"
#include "ttr/duration.hpp"
#include "ttr/fpt/configuration.hpp"
#include "ttr/oracle.hpp"

namespace ttr {
namespace {

Tree path_tree(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Tree::from_edges(n, e);
}

TtrInstance p3_bounded(int delta, bool both) {
  BoundMatrix b(3);
  b.set(0, 2, 2);
  if (both) b.set(2, 0, 2);
  return TtrInstance(path_tree(3), delta, b);
}

TEST(BruteForce, OneDirectionBoundIsFeasible) {
  const OracleResult r = brute_force_solve(p3_bounded(3, false));
  ASSERT_TRUE(r.yes());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, PeriodicLabeling({1, 2}));
  EXPECT_TRUE(verify_labeling(p3_bounded(3, false), *r.witness).clean());
}

TEST(BruteForce, BothDirectionsInfeasible) {
  const OracleResult r = brute_force_solve(p3_bounded(3, true));
  EXPECT_FALSE(r.yes());
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.examined, 3u);
}

TEST(BruteForce, SingleEdgeAlwaysYes) {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}};
  BoundMatrix b(2);
  b.set_symmetric(0, 1, 1);
  const OracleResult r = brute_force_solve(TtrInstance(Tree::from_edges(2, e), 4, b));
  EXPECT_TRUE(r.yes());
  EXPECT_EQ(r.examined, 1u);
}

TEST(BruteForce, BudgetExceeded) {
  OracleOptions o;
  o.budget = 8;
  EXPECT_THROW(brute_force_solve(TtrInstance(path_tree(5), 3), o), ResourceError);
  o.budget = 27;
  EXPECT_NO_THROW(brute_force_solve(TtrInstance(path_tree(5), 3), o));
}

TEST(AllWitnesses, TrivialBoundsOnP3) {
  const auto all = brute_force_all_witnesses(TtrInstance(path_tree(3), 2));
  EXPECT_EQ(all.size(), 2u);
}

TEST(AllWitnesses, InfeasibleGivesEmpty) {
  EXPECT_TRUE(brute_force_all_witnesses(p3_bounded(3, true)).empty());
}

TEST(AllWitnesses, DelayOneAtMiddleVertex) {
  const auto all = brute_force_all_witnesses(p3_bounded(3, false));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(travel_delay(all[0][0], all[0][1], 3), 1);
}

TEST(BruteForce, PinningDoesNotChangeAnswer) {
  testing::Rng rng(3);
  OracleOptions full;
  full.fix_first_edge = false;
  for (int round = 0; round < 150; ++round) {
    const Tree t = testing::random_tree(testing::uniform(rng, 2, 7), rng);
    const int delta = testing::uniform(rng, 2, 3);
    const TtrInstance inst = testing::random_free_instance(t, delta, 0.5, rng);
    const OracleResult a = brute_force_solve(inst);
    const OracleResult b = brute_force_solve(inst, full);
    EXPECT_EQ(a.answer, b.answer);
    if (a.yes()) EXPECT_TRUE(verify_labeling(inst, *a.witness).clean());
  }
}

// Some realizing labeling gives distinct labels around every degree-2 vertex.
TEST(AllWitnesses, DistinctLabelsAtDegreeTwoVertices) {
  testing::Rng rng(9);
  int checked = 0;
  for (int round = 0; round < 150; ++round) {
    const Tree t = testing::random_tree(testing::uniform(rng, 3, 7), rng);
    const int delta = testing::uniform(rng, 2, 3);
    const TtrInstance inst = testing::random_instance(t, delta, 0.5, rng);
    const auto all = brute_force_all_witnesses(inst);
    if (all.empty()) continue;
    ++checked;
    const auto classes = fpt::classify_vertices(t);
    bool found = false;
    for (const PeriodicLabeling& l : all) {
      bool ok = true;
      for (Vertex v : classes.degree_two) {
        const auto& inc = t.incident_edges(v);
        ok = ok && l[inc[0]] != l[inc[1]];
      }
      found = found || ok;
    }
    EXPECT_TRUE(found) << "round " << round;
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace ttr
