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

#include "support/generators.hpp"
#include "ttr/io.hpp"

namespace ttr::io {
namespace {

std::string sample(const std::string& name) { return read_file(std::string(TTR_SAMPLES_DIR) + "/" + name); }

void expect_error(const std::string& text, const std::string& fragment) {
  try {
    parse_instance(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, PathSample) {
  const InstanceDocument doc = parse_instance(sample("path5.ttr"));
  EXPECT_EQ(doc.instance.tree().vertex_count(), 5);
  EXPECT_EQ(doc.instance.tree().edge_count(), 4);
  EXPECT_EQ(doc.instance.delta(), 5);
  EXPECT_TRUE(doc.instance.bounds().explicit_entries().empty());
}

TEST(ParseInstance, Errors) {
  expect_error("n 2\ndelta 2\nedge 0 0\n", "line 3");
  expect_error("n 5\ndelta 2\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 0\n", "not a tree");
  expect_error("n 3\ndelta 2\nedge 0 1\nedge 0 1\n", "line 4: duplicate edge");
  expect_error("n 2\ndelta 2\nedge 0 1\nbound 0 1 0\n", "bounds must be positive");
  expect_error("n 2\ndelta 2\nedge 0 1\nbound 0 5 3\n", "missing vertex");
  expect_error("n 2\ndelta 2\nedge 0 1\nbound 1 1 3\n", "diagonal");
  expect_error("n 3\ndelta 2\nedge 0 1\nedge 1 2\nbound 0 2 3\nbound 0 2 4\n", "line 6: duplicate bound");
  expect_error("n 2\ndelta 2\nedges 0 1\n", "unknown keyword");
  expect_error("n 2\nedge 0 1\n", "missing delta");
  expect_error("n 2\ndelta x\n", "expected integer");
  expect_error("n 2\ndelta 2 3\n", "unexpected token");
  expect_error("n 4\ndelta 2\nedge 0 1\nedge 2 3\n", "not a tree");
}

TEST(ParseInstance, CommentsAndMeta) {
  const InstanceDocument doc =
      parse_instance("# header\nmeta generator random seed\nn 3 # three\ndelta 4\nedge 1 0\nedge 2 1\nbound 0 2 3\n");
  ASSERT_EQ(doc.meta.size(), 1u);
  EXPECT_EQ(doc.meta[0].first, "generator");
  EXPECT_EQ(doc.meta[0].second, "random seed");
  EXPECT_EQ(doc.instance.bounds().get(0, 2), 3);
  EXPECT_TRUE(doc.instance.bounds().is_trivial(2, 0));
}

TEST(RoundTrip, RandomInstances) {
  testing::Rng rng(2);
  for (int round = 0; round < 200; ++round) {
    const Tree t = testing::random_tree(testing::uniform(rng, 1, 12), rng);
    const TtrInstance inst = testing::random_free_instance(t, testing::uniform(rng, 1, 5), 0.3, rng);
    const std::vector<std::pair<std::string, std::string>> meta{{"seed", std::to_string(round)}};
    const InstanceDocument back = parse_instance(serialize_instance(inst, meta));
    EXPECT_EQ(back.instance, inst);
    EXPECT_EQ(back.meta, meta);
  }
}

TEST(Labeling, ParseAndSerialize) {
  const PeriodicLabeling l = parse_labeling(sample("path5.labels"));
  EXPECT_EQ(l, PeriodicLabeling({3, 3, 4, 1}));
  EXPECT_EQ(serialize_labeling(l), "3 3 4 1\n");
  EXPECT_EQ(parse_labeling(serialize_labeling(l)), l);
  EXPECT_THROW(parse_labeling("1 x 2\n"), InputError);
}

TEST(Dimacs, Graphs) {
  const auto k3 = parse_dimacs_graph(sample("k3.col"));
  EXPECT_EQ(k3.n, 3);
  EXPECT_EQ(k3.edges.size(), 3u);
  EXPECT_EQ(parse_dimacs_graph(sample("k4.col")).edges.size(), 6u);
  EXPECT_THROW(parse_dimacs_graph("e 1 2\n"), InputError);
  EXPECT_THROW(parse_dimacs_graph("p edge 2 1\ne 1 3\n"), InputError);
  EXPECT_THROW(parse_dimacs_graph("p edge 2 1\nx 1 2\n"), InputError);
}

TEST(Nae, Formulas) {
  const auto f = parse_nae(sample("xyz.nae"));
  EXPECT_EQ(f.variables, 3);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(parse_nae(sample("xxx.nae")).clauses[0], (std::array<int, 3>{0, 0, 0}));
  EXPECT_THROW(parse_nae("p nae 2 1\n1 2 0\n"), InputError);
  EXPECT_THROW(parse_nae("p nae 2 1\n1 2 3 0\n"), InputError);
  EXPECT_THROW(parse_nae("p nae 2 2\n1 2 2 0\n"), InputError);
  EXPECT_THROW(parse_nae("1 2 2 0\n"), InputError);
}

TEST(ReadFile, MissingFile) {
  EXPECT_THROW(read_file("/nonexistent/instance.ttr"), InputError);
}

}  // namespace
}  // namespace ttr::io
