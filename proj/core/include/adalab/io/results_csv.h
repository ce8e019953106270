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

#ifndef ADALAB_IO_RESULTS_CSV_H_
#define ADALAB_IO_RESULTS_CSV_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/harness/experiment.h"
#include "adalab/harness/risk.h"
#include "adalab/world/game_history.h"

namespace adalab::io {

// Nine significant digits.
std::string FormatNumber(double x);

inline constexpr absl::string_view kResultsHeader =
    "k,sigma,adversary,mechanism,round,bias_hat,bias_se,bias_sq_hat,mse_hat,"
    "mse_se,combined_risk,upper_bound,lower_bound,sharpness_floor";
inline constexpr absl::string_view kExtendedHeader =
    "k,sigma,adversary,mechanism,round,mse_band_lo,mse_band_hi,"
    "cond_bias_sq_hat,cond_bias_sq_se,one_step_bias_sq,k_step_bias_sq";
inline constexpr absl::string_view kPlotHeader =
    "k,empirical_max_mse,theorem2_bound,theorem3_bound";
inline constexpr absl::string_view kTranscriptHeader =
    "replication,round,query_mean,query_variance,cov_with_history,release,"
    "family,mean,scale,noise,realized";
inline constexpr absl::string_view kBoundsHeader =
    "k,sigma,one_step_bias_sq,one_step_mse,k_step_bias_sq,k_step_mse,"
    "minimax_lower,sharpness_floor";
inline constexpr absl::string_view kNoiseOptHeader =
    "sigma,w,n_points,lp_margin,primal_objective,margin_lower_bound,"
    "uniform_margin,dual_objective_bound,iterations,density_file";

// One row per round of every report; upper_bound is the k-step MSE bound,
// lower_bound the minimax lower bound.
std::string FormatResults(const std::vector<harness::ExperimentConfig>& configs,
                          const std::vector<harness::RiskReport>& reports);
// Per-round 3-SE bands on mse_hat and the conditional-bias estimates.
std::string FormatExtendedResults(
    const std::vector<harness::ExperimentConfig>& configs,
    const std::vector<harness::RiskReport>& reports);
// Rows sorted by k (stable for equal k).
std::string FormatPlotData(const std::vector<harness::ExperimentConfig>& configs,
                           const std::vector<harness::RiskReport>& reports);
std::string FormatTranscript(std::int64_t replication,
                             const world::GameHistory& history);
std::string FormatBounds(const std::vector<harness::ExperimentConfig>& configs);

// A results directory that never silently replaces files.
class OutputDir {
 public:
  // Creates the directory if needed.
  static absl::StatusOr<OutputDir> Open(const std::filesystem::path& path,
                                        bool force);

  // Fails if any of `names` exists and force is off.
  absl::Status CheckWritable(const std::vector<std::string>& names) const;
  absl::Status Write(const std::string& name, absl::string_view content) const;

  const std::filesystem::path& path() const { return path_; }

 private:
  OutputDir(std::filesystem::path path, bool force)
      : path_(std::move(path)), force_(force) {}

  std::filesystem::path path_;
  bool force_;
};

}  // namespace adalab::io

#endif  // ADALAB_IO_RESULTS_CSV_H_
