// Copyright 2026 The ipmagnus Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipmagnus/experiment.hpp"

namespace ipm {
namespace {

ExperimentConfig small_fig1() {
  ExperimentConfig c;
  c.n = 5;
  c.t = 1.5;
  c.seeds = {0, 1};
  c.alphas = {1e-3, 1e-2, 1e-1};
  c.algorithms = {{"magnus", 0.5, 1, 1}, {"pf1", 0.25, 1, 1}, {"pf2", 0.75, 1, 2}};
  return c;
}

TEST(Config, Fig1Defaults) {
  const ExperimentConfig c;
  EXPECT_EQ(c.n, 12u);
  EXPECT_EQ(c.t, 3.0);
  EXPECT_EQ(c.seeds.size(), 5u);
  ASSERT_EQ(c.alphas.size(), 8u);
  EXPECT_EQ(c.alphas.front(), 1e-3);
  EXPECT_EQ(c.alphas.back(), 1e-1);
  EXPECT_EQ(steps_for(c.t, c.algorithms[0].interval), 3u);
  EXPECT_EQ(steps_for(c.t, c.algorithms[1].interval), 6u);
  EXPECT_EQ(steps_for(c.t, c.algorithms[2].interval), 4u);
  EXPECT_THROW(steps_for(3.0, 0.7), DomainError);
}

TEST(Config, JsonRoundTripAndPartialDocuments) {
  const ExperimentConfig c = small_fig1();
  const ExperimentConfig back = json(c).get<ExperimentConfig>();
  EXPECT_EQ(json(back).dump(), json(c).dump());
  EXPECT_EQ(config_hash(back), config_hash(c));
  const ExperimentConfig partial = json::parse(R"({"n": 6, "alpha_grid": {"min": 0.01, "max": 0.1, "points": 3},
      "algorithms": [{"name": "pf2", "interval": 0.5}]})").get<ExperimentConfig>();
  EXPECT_EQ(partial.n, 6u);
  EXPECT_EQ(partial.alphas.size(), 3u);
  EXPECT_EQ(partial.algorithms[0].p, 2);
  EXPECT_NE(config_hash(partial), config_hash(c));
}

TEST(Fig1, SmallRunShapeAndOrdering) {
  const ExperimentReport r = run_fig1(small_fig1());
  ASSERT_TRUE(r.ok());
  // magnus, magnus_exp, pf1, pf2 rows per (alpha, seed).
  ASSERT_EQ(r.rows.size(), 4u * 3u * 2u);
  EXPECT_EQ(r.rows.front().algorithm, "magnus");
  EXPECT_EQ(r.rows[6].algorithm, "magnus_exp");
  EXPECT_EQ(r.rows.back().algorithm, "pf2");
  for (std::size_t k = 1; k < 6; ++k) {
    EXPECT_LE(r.rows[k - 1].alpha, r.rows[k].alpha);
  }
  for (const auto& row : r.rows) EXPECT_GE(row.spectral_error, 0.0);
  EXPECT_EQ(r.rows.front().r, 3u);
  EXPECT_EQ(r.rows.front().quad_k, 16u);
  EXPECT_TRUE(r.provenance.contains("config_hash"));
  EXPECT_TRUE(r.provenance.at("gate_counts").contains("pf1"));
  EXPECT_FALSE(r.fits.empty());
}

TEST(Fig1, ZeroAlphaIsExactForAllAlgorithms) {
  ExperimentConfig c = small_fig1();
  c.alphas = {0.0};
  const ExperimentReport r = run_fig1(c);
  ASSERT_TRUE(r.ok());
  for (const auto& row : r.rows) EXPECT_LE(row.spectral_error, 1e-10) << row.algorithm;
}

TEST(Fig1, FailuresAreReportedPerRow) {
  ExperimentConfig c = small_fig1();
  c.seeds = {0};
  c.alphas = {1e-2};
  c.algorithms.push_back({"qdrift", 0.5});
  c.algorithms.push_back({"pf1", 0.4});
  const ExperimentReport r = run_fig1(c);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.rows.size(), 4u);
}

TEST(Emit, CsvSchemaDeterminismAndJsonRoundTrip) {
  ExperimentConfig c = small_fig1();
  c.seeds = {3};
  const ExperimentReport a = run_fig1(c), b = run_fig1(c);
  const std::string csv = to_csv(a);
  EXPECT_EQ(csv, to_csv(b));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "algorithm,alpha,seed,spectral_error,gate_rotations,gate_two_qubit,r,q,p,R,quad_K");
  EXPECT_EQ(report_from_json(to_json_text(a)), a);

  const auto dir = std::filesystem::temp_directory_path() / "ipmagnus_emit_test";
  std::filesystem::remove_all(dir);
  const auto files = emit(a, "csv", dir, "fig1");
  ASSERT_EQ(files.size(), 2u);
  std::ifstream in(files[0], std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), csv);
  EXPECT_EQ(emit(a, "json", dir, "fig1").size(), 1u);
  EXPECT_THROW(emit(a, "xml", dir, "fig1"), DomainError);
  std::filesystem::remove_all(dir);
}

TEST(Scaling, SmallRun) {
  ExperimentConfig c;
  c.experiment = "scaling";
  c.seeds = {0};
  c.scaling.ns = {4, 6};
  c.scaling.decay_n = 6;
  c.scaling.stage_n = 4;
  c.scaling.stage_alphas = {1e-2, 2e-2};
  const ExperimentReport r = run_experiment(c);
  ASSERT_TRUE(r.ok());
  std::set<std::string> studies;
  for (const auto& f : r.fits) studies.insert(f.study);
  EXPECT_EQ(studies, (std::set<std::string>{"n_scaling", "lightcone", "alpha_order"}));
  for (const auto& row : r.rows) {
    if (row.algorithm == "lightcone_q1" && row.radius == 5u) EXPECT_EQ(row.spectral_error, 0.0);
  }
}

}  // namespace
}  // namespace ipm
