//
// Copyright 2026 The adalab Authors.
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
//

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "adalab/harness/game.h"
#include "adalab/harness/risk.h"
#include "adalab/io/config_json.h"
#include "adalab/io/density_io.h"
#include "adalab/io/results_csv.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace adalab::io {
namespace {

using ::testing::HasSubstr;

constexpr char kMinimal[] = R"({
  "k": 2, "sigma": 1.0, "replications": 1000, "seed": 7,
  "mechanism": {"kind": "gaussian_schedule"},
  "adversary": {"kind": "bayes_sign"},
  "conjunction": "max"
})";

std::filesystem::path TempDir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      (name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::vector<std::string> Lines(const std::string& text) {
  return absl::StrSplit(text, '\n', absl::SkipEmpty());
}

std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(ParseConfigTest, MinimalConfigIsValid) {
  auto configs = ParseConfigText(kMinimal);
  ASSERT_TRUE(configs.ok()) << configs.status();
  ASSERT_EQ(configs->size(), 1u);
  const harness::ExperimentConfig& c = configs->front();
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.sigma, 1.0);
  EXPECT_EQ(c.replications, 1000);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.conjunction, harness::Conjunction::kMax);
  EXPECT_EQ(c.adversary.kind, adversaries::AdversaryKind::kBayesSign);
  EXPECT_EQ(c.mechanism.kind, mechanisms::MechanismKind::kGaussianSchedule);
  // Default schedule: (k - 1)^(1/4) sigma, exact final round.
  EXPECT_EQ(c.mechanism.w_schedule, (std::vector<double>{1.0, 0.0}));
}

TEST(ParseConfigTest, RejectsZeroRounds) {
  auto configs = ParseConfigText(Replace(kMinimal, "\"k\": 2", "\"k\": 0"));
  ASSERT_FALSE(configs.ok());
  EXPECT_THAT(std::string(configs.status().message()),
              HasSubstr("k must be ≥ 1"));
}

TEST(ParseConfigTest, RejectsUnknownKeysByName) {
  auto top = ParseConfigText(Replace(kMinimal, "\"seed\"", "\"seeds\""));
  ASSERT_FALSE(top.ok());
  EXPECT_THAT(std::string(top.status().message()), HasSubstr("'seeds'"));
  auto nested = ParseConfigText(
      Replace(kMinimal, "\"kind\": \"bayes_sign\"",
              "\"kind\": \"bayes_sign\", \"budget\": 3"));
  ASSERT_FALSE(nested.ok());
  EXPECT_THAT(std::string(nested.status().message()), HasSubstr("'budget'"));
}

TEST(ParseConfigTest, RejectsSchemaViolations) {
  EXPECT_FALSE(ParseConfigText("{not json").ok());
  EXPECT_FALSE(ParseConfigText(Replace(kMinimal, "1.0", "-1.0")).ok());
  EXPECT_FALSE(ParseConfigText(Replace(kMinimal, "1000", "0")).ok());
  EXPECT_FALSE(ParseConfigText(Replace(kMinimal, "\"max\"", "\"min\"")).ok());
  EXPECT_FALSE(
      ParseConfigText(Replace(kMinimal, "\"bayes_sign\"", "\"oracle\"")).ok());
  EXPECT_FALSE(ParseConfigText(Replace(kMinimal, "\"gaussian_schedule\"}",
                                       "\"gaussian_schedule\", "
                                       "\"w_schedule\": [1.0]}"))
                   .ok());
  EXPECT_FALSE(ParseConfigText(Replace(kMinimal, "\"gaussian_schedule\"",
                                       "\"custom\""))
                   .ok());
}

TEST(ParseConfigTest, SweepKeepsOrder) {
  std::string text = "[";
  for (int k : {3, 7, 2, 9, 5}) {
    if (text.size() > 1) text += ",";
    text += Replace(kMinimal, "\"k\": 2", "\"k\": " + std::to_string(k));
  }
  text += "]";
  auto configs = ParseConfigText(text);
  ASSERT_TRUE(configs.ok()) << configs.status();
  ASSERT_EQ(configs->size(), 5u);
  const std::vector<int> expected = {3, 7, 2, 9, 5};
  for (int i = 0; i < 5; ++i) EXPECT_EQ((*configs)[i].k, expected[i]);
  auto bad = ParseConfigText("[" + std::string(kMinimal) + ", {\"k\": 1}]");
  ASSERT_FALSE(bad.ok());
  EXPECT_THAT(std::string(bad.status().message()), HasSubstr("sweep entry 1"));
}

TEST(ParseConfigTest, EmitThenParseRoundTrips) {
  const std::string fixed = R"({
    "k": 3, "sigma": 0.7, "replications": 12, "seed": 18446744073709551615,
    "conjunction": "product",
    "mechanism": {"kind": "uniform_schedule", "w_schedule": [0.1, 0.30000000000000004, 0]},
    "adversary": {"kind": "fixed_sequence", "queries": [
      {"variance": 0.49},
      {"mean": 1.5, "variance": 0.49, "cov_with_history": [0.1]},
      {"variance": 0.2, "cov_with_history": [0.0, -0.05]}]}
  })";
  for (const std::string& text : {std::string(kMinimal), fixed}) {
    auto first = ParseConfigText(text);
    ASSERT_TRUE(first.ok()) << first.status();
    auto second = ParseConfigText(EmitConfig(first->front()));
    ASSERT_TRUE(second.ok()) << second.status();
    EXPECT_TRUE(first->front() == second->front());
    auto all = ParseConfigText(EmitConfigs(*first));
    ASSERT_TRUE(all.ok());
    EXPECT_TRUE(*all == *first);
  }
}

TEST(ParseConfigTest, CustomTableResolvesRelativeToConfig) {
  const std::filesystem::path dir = TempDir("adalab_io_custom");
  std::filesystem::create_directories(dir);
  auto table = DiscretizedDistribution::FromWeights(-1.0, 1.0, {0.25, 0.5, 0.25});
  ASSERT_TRUE(table.ok());
  std::ofstream(dir / "noise.txt") << FormatDensity(*table);
  std::ofstream(dir / "config.json") << Replace(
      kMinimal, "\"kind\": \"gaussian_schedule\"",
      "\"kind\": \"custom\", \"table_path\": \"noise.txt\"");
  auto configs = ParseConfigFile(dir / "config.json");
  ASSERT_TRUE(configs.ok()) << configs.status();
  const auto& mechanism = configs->front().mechanism;
  ASSERT_NE(mechanism.table, nullptr);
  EXPECT_TRUE(*mechanism.table == *table);
  EXPECT_EQ(mechanism.table_path, "noise.txt");
  auto again = ParseConfigText(EmitConfig(configs->front()), dir);
  ASSERT_TRUE(again.ok()) << again.status();
  EXPECT_TRUE(again->front() == configs->front());
  EXPECT_FALSE(ParseConfigFile(dir / "missing.json").ok());
  std::filesystem::remove_all(dir);
}

TEST(NoiseOptConfigTest, ParsesAndRejects) {
  auto parsed =
      ParseNoiseOptText(R"({"sigma": 2.0, "w_values": [1, 10], "n_points": 401})");
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(parsed->sigma, 2.0);
  EXPECT_EQ(parsed->w_values, (std::vector<double>{1.0, 10.0}));
  EXPECT_EQ(parsed->n_points, 401);
  EXPECT_FALSE(ParseNoiseOptText(R"({"sigma": 1, "w": [1]})").ok());
  EXPECT_FALSE(ParseNoiseOptText("[]").ok());
}

TEST(DensityIoTest, RoundTripsToNineDigits) {
  auto p = DiscretizedDistribution::FromWeights(
      -2.5, 2.5, {0.1, 0.2, 0.3, 0.2, 0.1, 0.1});
  ASSERT_TRUE(p.ok());
  auto parsed = ParseDensity(FormatDensity(*p));
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  ASSERT_EQ(parsed->n_points(), p->n_points());
  for (int i = 0; i < p->n_points(); ++i) {
    EXPECT_NEAR(parsed->point(i), p->point(i), 1e-12);
    EXPECT_NEAR(parsed->weights()[i], p->weights()[i], 1e-9);
  }
  EXPECT_FALSE(ParseDensity("0 1\n1 x\n").ok());
  EXPECT_FALSE(LoadDensity("/nonexistent/density.txt").ok());
}

TEST(FormatNumberTest, NineSignificantDigits) {
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(FormatNumber(123456789.123), "123456789");
  EXPECT_EQ(FormatNumber(2.0), "2");
  EXPECT_EQ(FormatNumber(-1.5e-12), "-1.5e-12");
}

harness::ExperimentConfig SmallConfig(int k) {
  auto configs = ParseConfigText(
      Replace(Replace(kMinimal, "\"k\": 2", "\"k\": " + std::to_string(k)),
              "1000", "200"));
  return configs->front();
}

TEST(ResultsCsvTest, SingleRoundReport) {
  const harness::ExperimentConfig config = SmallConfig(1);
  auto report = harness::EstimateRisk(config);
  ASSERT_TRUE(report.ok()) << report.status();
  const std::string csv = FormatResults({config}, {*report});
  const std::vector<std::string> lines = Lines(csv);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], kResultsHeader);
  const std::vector<std::string> cells = absl::StrSplit(lines[1], ',');
  const std::vector<std::string> header = absl::StrSplit(kResultsHeader, ',');
  ASSERT_EQ(cells.size(), header.size());
  EXPECT_EQ(header.size(), 14u);
  EXPECT_EQ(cells[0], "1");
  EXPECT_EQ(cells[2], "bayes_sign");
  EXPECT_EQ(cells[3], "gaussian_schedule");
  EXPECT_EQ(cells[4], "1");
  EXPECT_EQ(cells[11], FormatNumber(report->bound_report.k_step_mse));
  EXPECT_EQ(cells[12], FormatNumber(report->bound_report.minimax_lower));
  EXPECT_EQ(cells[13], FormatNumber(report->bound_report.sharpness_floor));
}

TEST(ResultsCsvTest, PlotRowsSortedByK) {
  std::vector<harness::ExperimentConfig> configs;
  for (int k : {20, 2, 50, 5, 10}) configs.push_back(SmallConfig(k));
  std::vector<harness::RiskReport> reports;
  for (auto& r : harness::Sweep(configs, 1)) {
    ASSERT_TRUE(r.ok());
    reports.push_back(*r);
  }
  const std::vector<std::string> lines = Lines(FormatPlotData(configs, reports));
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], kPlotHeader);
  int previous = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int k = std::stoi(lines[i].substr(0, lines[i].find(',')));
    EXPECT_GT(k, previous);
    previous = k;
  }
  const std::vector<std::string> results =
      Lines(FormatResults(configs, reports));
  EXPECT_EQ(results.size(), 1u + 20 + 2 + 50 + 5 + 10);
  const std::vector<std::string> extended =
      Lines(FormatExtendedResults(configs, reports));
  EXPECT_EQ(extended.size(), results.size());
  EXPECT_EQ(extended[0], kExtendedHeader);
}

TEST(ResultsCsvTest, TranscriptAndBounds) {
  const harness::ExperimentConfig config = SmallConfig(3);
  auto history = harness::RunGame(config, 0);
  ASSERT_TRUE(history.ok());
  const std::vector<std::string> lines = Lines(FormatTranscript(0, *history));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], kTranscriptHeader);
  const std::vector<std::string> bounds = Lines(FormatBounds({config}));
  ASSERT_EQ(bounds.size(), 2u);
  EXPECT_EQ(bounds[0], kBoundsHeader);
}

TEST(OutputDirTest, RefusesToOverwriteWithoutForce) {
  const std::filesystem::path dir = TempDir("adalab_io_out");
  auto out = OutputDir::Open(dir / "nested", false);
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_TRUE(std::filesystem::is_directory(dir / "nested"));
  ASSERT_TRUE(out->Write("a.csv", "x\n").ok());
  const absl::Status again = out->Write("a.csv", "y\n");
  EXPECT_EQ(again.code(), absl::StatusCode::kAlreadyExists);
  EXPECT_THAT(std::string(again.message()), HasSubstr("a.csv"));
  EXPECT_FALSE(out->CheckWritable({"b.csv", "a.csv"}).ok());
  EXPECT_TRUE(out->CheckWritable({"b.csv"}).ok());
  auto forced = OutputDir::Open(dir / "nested", true);
  ASSERT_TRUE(forced.ok());
  ASSERT_TRUE(forced->Write("a.csv", "y\n").ok());
  EXPECT_EQ(*ReadFile(dir / "nested" / "a.csv"), "y\n");
  std::ofstream(dir / "plain") << "file";
  EXPECT_FALSE(OutputDir::Open(dir / "plain", false).ok());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace adalab::io
