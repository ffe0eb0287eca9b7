// Copyright 2026 The posetcount Authors
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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace posetcount::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("posetcount_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_command_line(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return status;
  }

  fs::path dir_;
  std::string out_, err_;
};

constexpr const char* kTwoEdges = "perm 4\n2 1 4 3\n";
constexpr const char* kChain3 = "poset 3 2\na 1 2\na 2 3\n";
constexpr const char* kPath4 = "# i < j when j - i >= 2\nposet 4 3\na 1 3\na 1 4\na 2 4\n";

TEST_F(CliTest, PermutationBothTargets) {
  const auto path = file("p.txt", kTwoEdges);
  ASSERT_EQ(run({"count", path, "--format", "perm", "--target", "both",
                 "--variant", "all"}),
            0);
  EXPECT_EQ(out_, "independent_sets 9\ncliques 7\n");
}

TEST_F(CliTest, ChainMaximal) {
  const auto path = file("c.txt", kChain3);
  ASSERT_EQ(run({"count", path, "--format", "poset", "--variant", "maximal"}), 0);
  EXPECT_EQ(out_, "1\n");
}

TEST_F(CliTest, PathProfile) {
  const auto path = file("p4.txt", kPath4);
  ASSERT_EQ(run({"count", path, "--format", "poset", "--variant", "profile"}), 0);
  EXPECT_EQ(out_, "0 1\n1 4\n2 3\n3 0\n4 0\n");
  ASSERT_EQ(run({"profile", path}), 0);
  EXPECT_EQ(out_, "0 1\n1 4\n2 3\n3 0\n4 0\n");
  ASSERT_EQ(run({"profile", path, "--variant", "maximal"}), 0);
  EXPECT_EQ(out_, "0 0\n1 0\n2 3\n3 0\n4 0\n");
}

TEST_F(CliTest, DerivedQuantities) {
  const auto path = file("p4.txt", kPath4);
  ASSERT_EQ(run({"count", path, "--variant", "polynomial", "--x", "2"}), 0);
  EXPECT_EQ(out_, "21\n");
  ASSERT_EQ(run({"count", path, "--variant", "polynomial", "--x", "1/2"}), 0);
  EXPECT_EQ(out_, "15/4\n");
  ASSERT_EQ(run({"count", path, "--variant", "alpha"}), 0);
  EXPECT_EQ(out_, "2 3\n");
  ASSERT_EQ(run({"count", path, "--variant", "by-size", "--k", "2"}), 0);
  EXPECT_EQ(out_, "3\n");
  ASSERT_EQ(run({"count", path, "--variant", "maximal-by-size", "--k", "2"}), 0);
  EXPECT_EQ(out_, "3\n");
  EXPECT_EQ(run({"count", path, "--variant", "by-size", "--k", "5"}), 2);
  EXPECT_NE(err_.find("error"), std::string::npos);
}

TEST_F(CliTest, ModularAndExcludeEmpty) {
  const auto path = file("c.txt", kChain3);
  ASSERT_EQ(run({"count", path, "--mod", "5"}), 0);
  EXPECT_EQ(out_, "3\n");
  ASSERT_EQ(run({"count", path, "--exclude-empty"}), 0);
  EXPECT_EQ(out_, "7\n");
  ASSERT_EQ(run({"count", path, "--exclude-empty", "--mod", "4"}), 0);
  EXPECT_EQ(out_, "3\n");  // (8 mod 4) - 1 wraps
  ASSERT_EQ(run({"count", path, "--exclude-empty", "--variant", "maximal"}), 0);
  EXPECT_EQ(out_, "1\n");
  const auto perm = file("p.txt", kTwoEdges);
  ASSERT_EQ(run({"count", perm, "--format", "perm", "--target", "cliques",
                 "--exclude-empty"}),
            0);
  EXPECT_EQ(out_, "6\n");
}

TEST_F(CliTest, Verify) {
  ASSERT_EQ(run({"verify", file("p.txt", kPath4)}), 0);
  EXPECT_EQ(out_.find("FAIL"), std::string::npos);
  EXPECT_NE(out_.find("PASS independent_sets maximal"), std::string::npos);
  ASSERT_EQ(run({"verify", file("q.txt", kTwoEdges), "--format", "perm",
                 "--mod", "7"}),
            0);
  EXPECT_EQ(out_.find("FAIL"), std::string::npos);
  ASSERT_EQ(run({"verify", file("g.txt", "graph 4 2\ne 1 2\ne 3 4\n"),
                 "--format", "graph"}),
            0);
  EXPECT_NE(out_.find("independent_sets 9\n"), std::string::npos);
  EXPECT_NE(out_.find("cliques 7\n"), std::string::npos);
}

TEST_F(CliTest, Errors) {
  const auto graph = file("g.txt", "graph 2 1\ne 1 2\n");
  EXPECT_EQ(run({"count", graph, "--format", "graph"}), 2);
  EXPECT_NE(err_.find("error"), std::string::npos);
  EXPECT_EQ(run({"count", file("bad.txt", "poset 2 1\na 1 7\n")}), 2);
  EXPECT_NE(err_.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"count", (dir_ / "missing.txt").string()}), 2);
  EXPECT_EQ(run({"verify", file("big.txt", "perm 30\n" + [] {
                   std::string s;
                   for (int i = 1; i <= 30; ++i) s += std::to_string(i) + " ";
                   return s;
                 }()),
                 "--format", "perm"}),
            2);
  EXPECT_NE(run({"count", graph, "--format", "nonsense"}), 0);
  EXPECT_NE(run({}), 0);
}

TEST_F(CliTest, GenerateRoundTrips) {
  ASSERT_EQ(run({"generate", "--format", "poset", "--n", "9", "--seed", "3"}), 0);
  const std::string first = out_;
  ASSERT_EQ(run({"generate", "--format", "poset", "--n", "9", "--seed", "3"}), 0);
  EXPECT_EQ(out_, first);
  const auto path = file("gen.txt", first);
  EXPECT_EQ(run({"verify", path}), 0);
  ASSERT_EQ(run({"generate", "--format", "perm", "--n", "7", "--seed", "3"}), 0);
  EXPECT_EQ(run({"verify", file("gp.txt", out_), "--format", "perm"}), 0);
  ASSERT_EQ(run({"generate", "--format", "graph", "--n", "7", "--seed", "3"}), 0);
  EXPECT_EQ(run({"verify", file("gg.txt", out_), "--format", "graph"}), 0);
}

}  // namespace
}  // namespace posetcount::cli
