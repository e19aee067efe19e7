// Copyright 2026 The traitnorm Authors
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

// Runs the traitnorm binary end to end and checks exit codes and outputs.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.h"
#include "traitnorm/dump.h"

namespace traitnorm {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("traitnorm_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of the CLI with `args`; stdout lands in out_.
  int Run(const std::string& args) {
    fs::path out = dir_ / "stdout.txt";
    std::string cmd = std::string(TRAITNORM_CLI) + " " + args + " > " + out.string() + " 2> " +
                      (dir_ / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    out_ = ss.str();
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }
  static std::string Northwind(const std::string& file) {
    return (testing::DataDir() / "northwind" / file).string();
  }
  static nlohmann::json ReadJson(const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
  }

  fs::path dir_;
  std::string out_;
};

TEST_F(Cli, NorthwindEndToEnd) {
  ASSERT_EQ(Run("ingest --mapping " + Northwind("mapping.json") + " --out " + P("pre.dump")), 0);
  EXPECT_NE(out_.find("nodes 1104"), std::string::npos) << out_;

  ASSERT_EQ(Run("normalize " + P("pre.dump") + " --config " + Northwind("normalize.json") + " --out " +
                P("post.dump") + " --report " + P("report.json") + " --format json"),
            0);
  nlohmann::json report = nlohmann::json::parse(out_);
  EXPECT_TRUE(report.at("committed").get<bool>());
  EXPECT_EQ(report.at("links_added").get<size_t>(), 950u);

  nlohmann::json manifest = ReadJson(P("post.dump") + ".manifest.json");
  EXPECT_EQ(manifest.at("exit_code").get<int>(), 0);
  EXPECT_EQ(manifest.at("stages").size(), 4u);
  EXPECT_EQ(manifest.at("inputs")[0].at("sha256").get<std::string>().size(), 64u);

  EXPECT_EQ(Run("check " + P("post.dump") + " --config " + Northwind("normalize.json")), 0);
  EXPECT_EQ(Run("check " + P("post.dump")), 0);
  EXPECT_EQ(Run("check " + P("pre.dump") + " --config " + Northwind("normalize.json")), 1);

  ASSERT_EQ(Run("metrics " + P("pre.dump") + " " + P("post.dump") + " --config " +
                Northwind("normalize.json") + " --ledger " + P("report.json") + " --format json"),
            0);
  nlohmann::json metrics = nlohmann::json::parse(out_);
  EXPECT_TRUE(metrics.at("redundancy_removed").at("reconciled").get<bool>());

  ASSERT_EQ(Run("bench " + P("pre.dump") + " " + P("post.dump") + " --workload " +
                Northwind("workload.sexp") + " --no-time --out " + P("bench.json")),
            0);
  nlohmann::json bench = ReadJson(P("bench.json"));
  ASSERT_EQ(bench.size(), 5u);
  for (const auto& row : bench) EXPECT_TRUE(row.at("equivalent").get<bool>());
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(Run("normalize " + P("missing.dump") + " --config " + Northwind("normalize.json") +
                " --out " + P("x.dump")),
            2);
  // The manifest is written even when the run fails.
  nlohmann::json manifest = ReadJson(P("x.dump") + ".manifest.json");
  EXPECT_EQ(manifest.at("exit_code").get<int>(), 2);
  EXPECT_TRUE(manifest.contains("error"));

  EXPECT_EQ(Run("frobnicate"), 2);
  EXPECT_EQ(Run("normalize"), 2);
  Write("bad.json", "{\"tua\": 3}");
  ASSERT_EQ(Run("synth --nodes 50 --out " + P("s.dump")), 0);
  EXPECT_EQ(Run("normalize " + P("s.dump") + " --config " + P("bad.json") + " --out " + P("o.dump")), 2);
}

TEST_F(Cli, DependencyViolationExitsThree) {
  ASSERT_EQ(Run("synth --nodes 200 --keys 2 --arity 1 --distinct 5 --seed 3 --out " + P("s.dump") +
                " --config-out " + P("s.json")),
            0);
  Write("deps.tfd", "Meta0Trait -> Meta1Trait\n");
  EXPECT_EQ(Run("normalize " + P("s.dump") + " --config " + P("s.json") + " --deps " + P("deps.tfd") +
                " --out " + P("o.dump")),
            3);
  EXPECT_NE(out_.find("VIOLATED"), std::string::npos) << out_;
  EXPECT_TRUE(fs::exists(P("o.dump")));
}

TEST_F(Cli, LosslessFailureExitsOneWithoutOutput) {
  PropertyGraph g;
  g.CreateNode({"A"}, {{"city", PropertyValue("Oslo")}});
  g.CreateNode({"A"}, {{"city", PropertyValue("Oslo")}, {"country", PropertyValue("NO")}});
  SaveDump(g, P("g.dump"));
  Write("c.json",
        R"({"families": [{"name": "LocTrait", "keys": ["city", "country"]}], "partial_match": true})");
  EXPECT_EQ(Run("normalize " + P("g.dump") + " --config " + P("c.json") + " --out " + P("o.dump")), 1);
  EXPECT_FALSE(fs::exists(P("o.dump")));
}

TEST_F(Cli, TauFlagOverridesConfig) {
  ASSERT_EQ(Run("synth --nodes 200 --keys 2 --distinct 50 --out " + P("s.dump") + " --config-out " +
                P("s.json")),
            0);
  ASSERT_EQ(Run("normalize " + P("s.dump") + " --config " + P("s.json") + " --tau 10 --out " +
                P("o.dump") + " --format json"),
            0);
  nlohmann::json r = nlohmann::json::parse(out_);
  EXPECT_TRUE(r.at("detection")[0].at("skipped").get<bool>());
  EXPECT_EQ(r.at("traits_created").get<size_t>(), 0u);
}

TEST_F(Cli, ProfileListsKeys) {
  ASSERT_EQ(Run("synth --nodes 100 --labels 1 --keys 2 --out " + P("s.dump")), 0);
  ASSERT_EQ(Run("profile " + P("s.dump") + " --format json"), 0);
  nlohmann::json rows = nlohmann::json::parse(out_);
  ASSERT_EQ(rows.size(), 3u);  // id, m0, m1
  EXPECT_TRUE(rows[0].at("candidate_identifier").get<bool>() ||
              rows[1].at("candidate_identifier").get<bool>() ||
              rows[2].at("candidate_identifier").get<bool>());
}

}  // namespace
}  // namespace traitnorm
