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

// Command-line front end: runs games, sweeps, noise optimization, bound
// tables and the self test, writing CSV outputs.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/parallel.h"
#include "adalab/harness/game.h"
#include "adalab/harness/risk.h"
#include "adalab/io/config_json.h"
#include "adalab/io/density_io.h"
#include "adalab/io/results_csv.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/selftest/selftest.h"
#include "adalab/signopt/dual_certificate.h"
#include "adalab/signopt/margin.h"
#include "adalab/signopt/optimal_noise.h"
#include "fmt/format.h"

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string command;
  std::optional<std::int64_t> reps;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  bool force = false;
};

int Fail(const absl::Status& status) {
  std::cerr << "adalab: " << status.message() << '\n';
  return 1;
}

absl::StatusOr<std::vector<adalab::harness::ExperimentConfig>> LoadExperiments(
    const Flags& flags) {
  if (flags.config.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--command ", flags.command, " needs --config"));
  }
  auto configs = adalab::io::ParseConfigFile(flags.config);
  if (!configs.ok()) return configs.status();
  for (auto& c : *configs) {
    if (flags.reps) c.replications = *flags.reps;
    if (flags.seed) c.seed = *flags.seed;
    if (absl::Status s = c.Validate(); !s.ok()) return s;
  }
  return configs;
}

absl::StatusOr<adalab::io::OutputDir> OpenOut(const Flags& flags) {
  if (flags.out.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--command ", flags.command, " needs --out"));
  }
  return adalab::io::OutputDir::Open(flags.out, flags.force);
}

int RunGameCommand(const Flags& flags) {
  auto configs = LoadExperiments(flags);
  if (!configs.ok()) return Fail(configs.status());
  auto out = OpenOut(flags);
  if (!out.ok()) return Fail(out.status());
  if (absl::Status s = out->CheckWritable({"transcript.csv", "config.json"});
      !s.ok()) {
    return Fail(s);
  }
  const auto& config = configs->front();
  auto history = adalab::harness::RunGame(config, 0);
  if (!history.ok()) return Fail(history.status());
  if (absl::Status s = out->Write(
          "transcript.csv", adalab::io::FormatTranscript(0, *history));
      !s.ok()) {
    return Fail(s);
  }
  if (absl::Status s =
          out->Write("config.json", adalab::io::EmitConfig(config) + "\n");
      !s.ok()) {
    return Fail(s);
  }
  std::cout << "wrote " << history->rounds() << " rounds to "
            << (out->path() / "transcript.csv").string() << '\n';
  return 0;
}

int RunSweepCommand(const Flags& flags, int workers) {
  auto configs = LoadExperiments(flags);
  if (!configs.ok()) return Fail(configs.status());
  auto out = OpenOut(flags);
  if (!out.ok()) return Fail(out.status());
  const std::vector<std::string> files = {
      "results.csv", "results_extended.csv", "plotdata_risk_vs_k.csv"};
  if (absl::Status s = out->CheckWritable(files); !s.ok()) return Fail(s);

  auto results = adalab::harness::Sweep(*configs, workers);
  std::vector<adalab::harness::ExperimentConfig> ok_configs;
  std::vector<adalab::harness::RiskReport> reports;
  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      ++failures;
      std::cerr << "adalab: config " << i << " failed: "
                << results[i].status().message() << '\n';
      continue;
    }
    ok_configs.push_back((*configs)[i]);
    reports.push_back(*std::move(results[i]));
  }
  if (reports.empty()) {
    return Fail(absl::FailedPreconditionError("no config produced results"));
  }
  for (const auto& [name, content] :
       {std::pair{files[0], adalab::io::FormatResults(ok_configs, reports)},
        std::pair{files[1],
                  adalab::io::FormatExtendedResults(ok_configs, reports)},
        std::pair{files[2], adalab::io::FormatPlotData(ok_configs, reports)}}) {
    if (absl::Status s = out->Write(name, content); !s.ok()) return Fail(s);
  }
  std::cout << "wrote " << reports.size() << " report(s) to "
            << out->path().string() << '\n';
  return failures == 0 ? 0 : 2;
}

int RunNoiseOptCommand(const Flags& flags, int workers) {
  if (flags.config.empty()) {
    return Fail(absl::InvalidArgumentError("--command noiseopt needs --config"));
  }
  auto config = adalab::io::ParseNoiseOptFile(flags.config);
  if (!config.ok()) return Fail(config.status());
  auto out = OpenOut(flags);
  if (!out.ok()) return Fail(out.status());
  const std::size_t n = config->w_values.size();
  std::vector<std::string> files = {"noiseopt.csv"};
  for (std::size_t i = 0; i < n; ++i) {
    files.push_back(fmt::format("density_{}.txt", i));
  }
  if (absl::Status s = out->CheckWritable(files); !s.ok()) return Fail(s);

  std::vector<absl::StatusOr<adalab::signopt::OptimalNoise>> solutions(n);
  adalab::ParallelFor(static_cast<std::int64_t>(n), workers,
                      [&](std::int64_t i) {
                        adalab::signopt::GridConfig grid;
                        grid.n_points = config->n_points;
                        solutions[i] = adalab::signopt::SolveOptimalNoise(
                            config->sigma, config->w_values[i], grid);
                      });
  std::string table = absl::StrCat(adalab::io::kNoiseOptHeader, "\n");
  const double sigma = config->sigma;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = config->w_values[i];
    if (!solutions[i].ok()) {
      return Fail(absl::Status(
          solutions[i].status().code(),
          absl::StrCat("w = ", w, ": ", solutions[i].status().message())));
    }
    std::string uniform = "";
    if (w > 0.0) {
      const double half_width = solutions[i]->p.grid_max();
      auto discrete = adalab::signopt::Discretize(
          adalab::mechanisms::NoiseSpec::Uniform(0.0, w), config->n_points,
          half_width);
      if (discrete.ok()) {
        auto margin = adalab::signopt::MarginRisk(*discrete, sigma);
        if (margin.ok()) uniform = adalab::io::FormatNumber(*margin);
      }
    }
    std::string dual = "";
    if (auto cert = adalab::signopt::DualCertificateFor(sigma, w); cert.ok()) {
      dual = adalab::io::FormatNumber(cert->objective_bound);
    }
    absl::StrAppend(&table, adalab::io::FormatNumber(sigma), ",",
                    adalab::io::FormatNumber(w), ",", config->n_points, ",",
                    adalab::io::FormatNumber(solutions[i]->margin), ",",
                    adalab::io::FormatNumber(solutions[i]->primal_objective),
                    ",",
                    adalab::io::FormatNumber(
                        adalab::signopt::MarginLowerBound(sigma, w)),
                    ",", uniform, ",", dual, ",", solutions[i]->iterations, ",",
                    files[i + 1], "\n");
    if (absl::Status s = out->Write(
            files[i + 1], adalab::io::FormatDensity(solutions[i]->p));
        !s.ok()) {
      return Fail(s);
    }
  }
  if (absl::Status s = out->Write("noiseopt.csv", table); !s.ok()) {
    return Fail(s);
  }
  std::cout << "solved " << n << " noise problem(s) into "
            << out->path().string() << '\n';
  return 0;
}

int RunBoundsCommand(const Flags& flags) {
  auto configs = LoadExperiments(flags);
  if (!configs.ok()) return Fail(configs.status());
  auto out = OpenOut(flags);
  if (!out.ok()) return Fail(out.status());
  if (absl::Status s =
          out->Write("bounds.csv", adalab::io::FormatBounds(*configs));
      !s.ok()) {
    return Fail(s);
  }
  std::cout << "wrote bounds for " << configs->size() << " config(s)\n";
  return 0;
}

int RunSelftestCommand() {
  const adalab::selftest::SelftestReport report =
      adalab::selftest::RunSelftest();
  std::cout << report.Format();
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adalab: adaptive data analysis game laboratory"};
  Flags flags;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  app.add_option("--config", flags.config, "Experiment or noiseopt JSON file");
  app.add_option("--out", flags.out, "Output directory");
  app.add_option("--command", flags.command, "What to run")
      ->required()
      ->check(CLI::IsMember({"game", "sweep", "noiseopt", "bounds", "selftest"}));
  auto* reps_opt = app.add_option("--reps", reps, "Override replications")
                       ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Override seed");
  auto* workers_opt =
      app.add_option("--workers", workers,
                     "Worker threads (default: ADA_LAB_WORKERS or all cores)")
          ->check(CLI::PositiveNumber);
  app.add_flag("--force", flags.force, "Overwrite existing output files");
  CLI11_PARSE(app, argc, argv);
  if (*reps_opt) flags.reps = reps;
  if (*seed_opt) flags.seed = seed;
  if (*workers_opt) flags.workers = workers;
  const int worker_count =
      flags.workers ? *flags.workers : adalab::DefaultWorkerCount();

  if (flags.command == "game") return RunGameCommand(flags);
  if (flags.command == "sweep") return RunSweepCommand(flags, worker_count);
  if (flags.command == "noiseopt") {
    return RunNoiseOptCommand(flags, worker_count);
  }
  if (flags.command == "bounds") return RunBoundsCommand(flags);
  return RunSelftestCommand();
}
