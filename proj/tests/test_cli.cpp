// Copyright 2026 The pauliprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pauliprobe/covering.hpp"
#include "pauliprobe/probe.hpp"

namespace pp = pauliprobe;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pauliprobe");
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = pp::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) out.push_back(c);
  return out;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("pauliprobe_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                      "_" + name);
}

}  // namespace

TEST(Cli, BoundTableRow) {
  const auto r = run({"bound-table", "--n", "8", "--k", "0", "--w", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "n,k,w,eps,delta,lower_N,upper_N,sigma_used,optimal_x");
  const auto row = cells(ls[1]);
  EXPECT_NEAR(std::stod(row[5]), 5760.0, 1e-9);
  EXPECT_GE(std::stod(row[6]), std::stod(row[5]));
}

TEST(Cli, BoundTableGridHasOneHeader) {
  const auto r = run({"bound-table", "--n", "4", "--regime-c", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "n,k,w,eps,delta,lower_N,upper_N,sigma_used,optimal_x,regime");
  // sum over n of (n+1)^2 rows
  EXPECT_EQ(ls.size(), 1u + 4 + 9 + 16 + 25);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto row = cells(ls[i]);
    ASSERT_EQ(row.size(), 10u);
    EXPECT_GE(std::stod(row[6]), std::stod(row[5]) * (1 - 1e-12));
  }
}

TEST(Cli, EstimateDeterministicAndPlanned) {
  const auto a = run({"estimate", "--n", "2", "--alpha", "0.5", "--seed", "11"});
  const auto b = run({"estimate", "--n", "2", "--alpha", "0.5", "--seed", "11"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto ls = lines(a.out);
  EXPECT_EQ(ls.front(), "b,weight,lambda_true,lambda_hat,abs_err");
  EXPECT_EQ(ls.size(), 1u + 16 + 1);
  EXPECT_EQ(ls.back().rfind("# summary", 0), 0u);
  const auto planned = pp::plan_samples(pp::AlphaProbe{2, 0.5}, 0.1, 0.05, 2);
  EXPECT_NE(ls.back().find("N_used=" + std::to_string(planned)), std::string::npos);
  const auto dry = run({"estimate", "--n", "2", "--alpha", "0.5", "--dry-run"});
  EXPECT_EQ(dry.out, std::to_string(planned) + "\n");
  const auto bell = run({"estimate", "--n", "3", "--alpha", "1", "--dry-run"});
  EXPECT_EQ(bell.out, std::to_string(pp::plan_samples(pp::AlphaProbe{3, 1.0}, 0.1, 0.05, 3)) + "\n");
}

TEST(Cli, EstimateWeightFilterAndOracle) {
  const auto r = run({"estimate", "--n", "3", "--w", "1", "--alpha", "0.5", "--oracle-check", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 10u);
  EXPECT_LE(doc["summary"]["oracle_max_dev"].get<double>(), 1e-9);
}

TEST(Cli, CoverWritesCovering) {
  const auto path = temp_file("cover.json");
  const auto r = run({"cover", "--n", "4", "--w", "2", "--covering-out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  const auto head = cells(ls[0]);
  const auto row = cells(ls[1]);
  std::map<std::string, std::string> rep;
  for (std::size_t i = 0; i < head.size(); ++i) rep[head[i]] = row[i];
  EXPECT_LE(std::stoi(rep["size"]), 36);
  EXPECT_EQ(rep["sigma_measured"], "6");
  EXPECT_EQ(rep["covered_fraction"], "1");
  std::ifstream in(path);
  const auto cov = pp::covering_from_json(nlohmann::json::parse(in));
  EXPECT_EQ(std::to_string(cov.groups.size()), rep["size"]);
  EXPECT_EQ(pp::verify_covering(cov).uncovered_count, 0u);
  fs::remove(path);
}

TEST(Cli, CoverArgmaxAndOracle) {
  const auto r = run({"cover", "--n", "3", "--k", "1", "--w", "2", "--greedy-argmax", "--oracle-check", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_LE(doc["report"]["size"].get<int>(), doc["report"]["bound"].get<int>());
  EXPECT_LE(doc["report"]["oracle_max_dev"].get<double>(), 1e-9);
}

TEST(Cli, EntropySweepEndpoints) {
  const auto r = run({"entropy-sweep", "--n", "3", "--steps", "5", "--oracle-check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "n,alpha,entropy_bits,ratio_to_n_alpha,oracle_match");
  ASSERT_EQ(ls.size(), 1u + 15);
  for (int n = 1; n <= 3; ++n) {
    const auto first = cells(ls[1 + 5 * static_cast<std::size_t>(n - 1)]);
    const auto last = cells(ls[5 * static_cast<std::size_t>(n)]);
    EXPECT_EQ(first[2], "0");
    EXPECT_EQ(last[2], std::to_string(n));
    EXPECT_EQ(last[4], "1");
  }
}

TEST(Cli, GameRowAndReplay) {
  const auto a = run({"game", "--n", "2", "--w", "2", "--trials", "100", "--seed", "5"});
  const auto b = run({"game", "--n", "2", "--w", "2", "--trials", "100", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto row = cells(lines(a.out)[1]);
  EXPECT_GE(std::stod(row[8]), std::stod(row[12]) - 5 * std::stod(row[11]));
  const auto stab = run({"game", "--n", "2", "--w", "1", "--k", "1", "--strategy", "stabilizer", "--trials", "50"});
  EXPECT_EQ(stab.code, 0) << stab.err;
}

TEST(Cli, OracleCheckSubcommand) {
  const auto r = run({"oracle-check", "--trials", "3", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 6u);
}

TEST(Cli, ConfigFileWithOverrides) {
  const auto cfg = temp_file("cfg.json");
  const auto out = temp_file("out.csv");
  {
    std::ofstream f(cfg);
    f << R"({"n": 2, "alpha": 0.5, "eps": 0.2, "seed": 4, "output_path": ")" << out.string() << "\"}";
  }
  const auto r = run({"estimate", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream file;
  file << in.rdbuf();
  const auto flags = run({"estimate", "--n", "2", "--alpha", "0.5", "--eps", "0.2", "--seed", "4"});
  EXPECT_EQ(file.str(), flags.out);
  const auto dry = run({"estimate", "--config", cfg.string(), "--eps", "0.1", "--out", "", "--dry-run"});
  EXPECT_EQ(dry.out, std::to_string(pp::plan_samples(pp::AlphaProbe{2, 0.5}, 0.1, 0.05, 2)) + "\n");
  fs::remove(cfg);
  fs::remove(out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"estimate", "--eps", "2"}).code, 2);
  EXPECT_EQ(run({"estimate", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"estimate", "--n", "3", "--w", "5"}).code, 2);
  EXPECT_EQ(run({"estimate", "--alpha", "0.5", "--lam-w", "0.5"}).code, 2);
  EXPECT_EQ(run({"cover", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"estimate", "--config", "/nonexistent/cfg.json"}).code, 2);
  const auto cfg = temp_file("bad.json");
  {
    std::ofstream f(cfg);
    f << R"({"n": 2, "colour": 1})";
  }
  const auto r = run({"estimate", "--config", cfg.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
  {
    std::ofstream f(cfg);
    f << R"({"n": "two"})";
  }
  const auto typed = run({"estimate", "--config", cfg.string()});
  EXPECT_EQ(typed.code, 2);
  EXPECT_NE(typed.err.find("'n'"), std::string::npos);
  fs::remove(cfg);
  const auto eps = run({"estimate", "--eps", "0"});
  EXPECT_NE(eps.err.find("'eps'"), std::string::npos);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bound-table"), std::string::npos);
}
