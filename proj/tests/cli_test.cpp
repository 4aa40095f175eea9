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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ttr/io.hpp"
#include "ttr/oracle.hpp"
#include "ttr/preprocess.hpp"

namespace ttr::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(TTR_SAMPLES_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ttr_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DurationsOfPathSample) {
  const Outcome json_out = call({"durations", sample("path5.ttr"), sample("path5.labels")});
  EXPECT_EQ(json_out.code, kYes);
  const auto report = nlohmann::json::parse(json_out.out);
  bool seen = false;
  for (const auto& row : report["durations"]) {
    if (row["s"] == 0 && row["t"] == 4) {
      EXPECT_EQ(row["duration"], 9);
      seen = true;
    }
    if (row["s"] == 4 && row["t"] == 0) EXPECT_EQ(row["duration"], 13);
  }
  EXPECT_TRUE(seen);
  const Outcome text = call({"durations", "--text", sample("path5.ttr"), sample("path5.labels")});
  EXPECT_NE(text.out.find("0 4 9\n"), std::string::npos);
}

TEST_F(CliTest, Delta2OnWrongPeriod) {
  const Outcome o = call({"solve", "--algo", "delta2", sample("path5.ttr")});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("delta"), std::string::npos);
}

TEST_F(CliTest, ColoringPipeline) {
  const std::string k4 = path("k4.ttr");
  ASSERT_EQ(call({"generate", "--from", "coloring", sample("k4.col"), "-o", k4}).code, kYes);
  EXPECT_EQ(call({"solve", k4}).code, kNo);
  const std::string k3 = path("k3.ttr");
  ASSERT_EQ(call({"generate", "--from", "coloring", sample("k3.col"), "-o", k3}).code, kYes);
  const Outcome yes = call({"solve", "--algo", "fpt", k3});
  EXPECT_EQ(yes.code, kYes);
  const auto report = nlohmann::json::parse(yes.out);
  EXPECT_EQ(report["answer"], "YES");
  EXPECT_EQ(report["algorithm"], "fpt");
  const std::string labels = write("k3.labels", io::serialize_labeling(PeriodicLabeling(report["witness"].get<std::vector<int>>())));
  EXPECT_EQ(call({"verify", k3, labels}).code, kYes);
  EXPECT_EQ(call({"oracle", k3}).code, kYes);
}

TEST_F(CliTest, NaePipeline) {
  for (const std::string layout : {"nae-diameter", "nae-degree"}) {
    const std::string yes = path(layout + "_yes.ttr");
    const std::string no = path(layout + "_no.ttr");
    ASSERT_EQ(call({"generate", "--from", layout, sample("xyz.nae"), "-o", yes}).code, kYes);
    ASSERT_EQ(call({"generate", "--from", layout, sample("xxx.nae"), "-o", no}).code, kYes);
    EXPECT_EQ(call({"solve", yes}).code, kYes);
    EXPECT_EQ(call({"solve", no}).code, kNo);
    const auto doc = io::parse_instance(io::read_file(yes));
    EXPECT_EQ(doc.meta.front().second, layout);
  }
}

TEST_F(CliTest, VerifyReportsViolations) {
  const std::string inst = write("p3.ttr", "n 3\ndelta 3\nedge 0 1\nedge 1 2\nbound 0 2 2\n");
  const Outcome bad = call({"verify", inst, write("bad.labels", "1 1\n")});
  EXPECT_EQ(bad.code, kNo);
  const auto report = nlohmann::json::parse(bad.out);
  EXPECT_EQ(report["valid"], false);
  EXPECT_EQ(report["violations"][0]["duration"], 4);
  EXPECT_EQ(call({"verify", inst, write("good.labels", "1 2\n")}).code, kYes);
  EXPECT_EQ(call({"verify", inst, write("short.labels", "1\n")}).code, kUsage);
}

TEST_F(CliTest, BudgetExceeded) {
  const Outcome o = call({"oracle", "--budget", "4", sample("path5.ttr")});
  EXPECT_EQ(o.code, kBudget);
  EXPECT_NE(o.err.find("budget"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"solve"}).code, kUsage);
  EXPECT_EQ(call({"solve", "--algo", "magic", sample("path5.ttr")}).code, kUsage);
  EXPECT_EQ(call({"solve", path("missing.ttr")}).code, kUsage);
  EXPECT_EQ(call({"generate", "--from", "coloring"}).code, kUsage);
  EXPECT_EQ(call({"solve", write("bad.ttr", "n 2\ndelta 2\nedge 0 0\n")}).code, kUsage);
}

TEST_F(CliTest, ExitCodesMatchOracle) {
  for (int seed = 1; seed <= 40; ++seed) {
    const std::string file = path("r" + std::to_string(seed) + ".ttr");
    ASSERT_EQ(call({"--seed", std::to_string(seed), "generate", "--from", "random", "--vertices", "7", "--delta",
                    std::to_string(2 + seed % 3), "--density", "0.4", "-o", file})
                  .code,
              kYes);
    const TtrInstance inst = io::parse_instance(io::read_file(file)).instance;
    const auto pre = preprocess(inst);
    const bool yes = !pre.infeasible() && brute_force_solve(*pre.instance).yes();
    const Outcome o = call({"solve", file});
    EXPECT_EQ(o.code, yes ? kYes : kNo) << file;
    EXPECT_EQ(nlohmann::json::parse(o.out)["answer"], yes ? "YES" : "NO");
  }
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const auto a = call({"--seed", "5", "generate", "--from", "random"});
  const auto b = call({"--seed", "5", "generate", "--from", "random"});
  EXPECT_EQ(a.code, kYes);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace ttr::cli
