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

#include "adalab/io/results_csv.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <system_error>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "fmt/format.h"

namespace adalab::io {
namespace {

std::string Label(const harness::ExperimentConfig& c) {
  return absl::StrCat(c.k, ",", FormatNumber(c.sigma), ",",
                      adversaries::AdversaryKindName(c.adversary.kind), ",",
                      mechanisms::MechanismKindName(c.mechanism.kind));
}

}  // namespace

std::string FormatNumber(double x) { return fmt::format("{:.9g}", x); }

std::string FormatResults(const std::vector<harness::ExperimentConfig>& configs,
                          const std::vector<harness::RiskReport>& reports) {
  std::string out = absl::StrCat(kResultsHeader, "\n");
  for (std::size_t c = 0; c < reports.size(); ++c) {
    const harness::RiskReport& report = reports[c];
    const bounds::BoundReport& b = report.bound_report;
    for (std::size_t i = 0; i < report.per_round.size(); ++i) {
      const harness::RoundRisk& r = report.per_round[i];
      absl::StrAppend(
          &out, Label(configs[c]), ",", i + 1, ",", FormatNumber(r.bias_hat),
          ",", FormatNumber(r.bias_se), ",", FormatNumber(r.bias_sq_hat), ",",
          FormatNumber(r.mse_hat), ",", FormatNumber(r.mse_se), ",",
          FormatNumber(report.combined_risk), ",", FormatNumber(b.k_step_mse),
          ",", FormatNumber(b.minimax_lower), ",",
          FormatNumber(b.sharpness_floor), "\n");
    }
  }
  return out;
}

std::string FormatExtendedResults(
    const std::vector<harness::ExperimentConfig>& configs,
    const std::vector<harness::RiskReport>& reports) {
  std::string out = absl::StrCat(kExtendedHeader, "\n");
  for (std::size_t c = 0; c < reports.size(); ++c) {
    const harness::RiskReport& report = reports[c];
    const bounds::BoundReport& b = report.bound_report;
    for (std::size_t i = 0; i < report.per_round.size(); ++i) {
      const harness::RoundRisk& r = report.per_round[i];
      absl::StrAppend(&out, Label(configs[c]), ",", i + 1, ",",
                      FormatNumber(r.mse_hat - 3.0 * r.mse_se), ",",
                      FormatNumber(r.mse_hat + 3.0 * r.mse_se), ",",
                      FormatNumber(r.cond_bias_sq_hat), ",",
                      FormatNumber(r.cond_bias_sq_se), ",",
                      FormatNumber(b.one_step_bias_sq), ",",
                      FormatNumber(b.k_step_bias_sq), "\n");
    }
  }
  return out;
}

std::string FormatPlotData(const std::vector<harness::ExperimentConfig>& configs,
                           const std::vector<harness::RiskReport>& reports) {
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return configs[a].k < configs[b].k;
  });
  std::string out = absl::StrCat(kPlotHeader, "\n");
  for (std::size_t c : order) {
    absl::StrAppend(&out, configs[c].k, ",",
                    FormatNumber(reports[c].MaxMse()), ",",
                    FormatNumber(reports[c].bound_report.k_step_mse), ",",
                    FormatNumber(reports[c].bound_report.minimax_lower), "\n");
  }
  return out;
}

std::string FormatTranscript(std::int64_t replication,
                             const world::GameHistory& history) {
  std::string out = absl::StrCat(kTranscriptHeader, "\n");
  const auto shared = history.shared();
  const auto hidden = history.player_private();
  for (int i = 0; i < history.rounds(); ++i) {
    const world::SharedRound& s = shared[i];
    std::vector<std::string> cov;
    for (double c : s.query.cov_with_history) cov.push_back(FormatNumber(c));
    absl::StrAppend(&out, replication, ",", i + 1, ",",
                    FormatNumber(s.query.mean), ",",
                    FormatNumber(s.query.variance), ",",
                    absl::StrJoin(cov, ";"), ",", FormatNumber(s.release), ",",
                    mechanisms::NoiseFamilyName(s.declared.family), ",",
                    FormatNumber(s.declared.mean), ",",
                    FormatNumber(s.declared.scale), ",",
                    FormatNumber(hidden[i].noise), ",",
                    FormatNumber(hidden[i].realized), "\n");
  }
  return out;
}

std::string FormatBounds(
    const std::vector<harness::ExperimentConfig>& configs) {
  std::string out = absl::StrCat(kBoundsHeader, "\n");
  for (const harness::ExperimentConfig& c : configs) {
    const bounds::BoundReport b =
        bounds::ComputeBounds(c.k, c.sigma, c.mechanism.w_schedule);
    absl::StrAppend(&out, c.k, ",", FormatNumber(c.sigma), ",",
                    FormatNumber(b.one_step_bias_sq), ",",
                    FormatNumber(b.one_step_mse), ",",
                    FormatNumber(b.k_step_bias_sq), ",",
                    FormatNumber(b.k_step_mse), ",",
                    FormatNumber(b.minimax_lower), ",",
                    FormatNumber(b.sharpness_floor), "\n");
  }
  return out;
}

absl::StatusOr<OutputDir> OutputDir::Open(const std::filesystem::path& path,
                                          bool force) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec || !std::filesystem::is_directory(path)) {
    return absl::PermissionDeniedError(absl::StrCat(
        "cannot create output directory ", path.string(), ": ", ec.message()));
  }
  return OutputDir(path, force);
}

absl::Status OutputDir::CheckWritable(
    const std::vector<std::string>& names) const {
  if (force_) return absl::OkStatus();
  for (const std::string& name : names) {
    if (std::filesystem::exists(path_ / name)) {
      return absl::AlreadyExistsError(
          absl::StrCat("refusing to overwrite ", (path_ / name).string(),
                       " (pass --force to replace it)"));
    }
  }
  return absl::OkStatus();
}

absl::Status OutputDir::Write(const std::string& name,
                              absl::string_view content) const {
  if (absl::Status s = CheckWritable({name}); !s.ok()) return s;
  const std::filesystem::path target = path_ / name;
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) {
    return absl::InternalError(
        absl::StrCat("failed to write ", target.string()));
  }
  return absl::OkStatus();
}

}  // namespace adalab::io
