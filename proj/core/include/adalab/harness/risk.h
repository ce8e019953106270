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

#ifndef ADALAB_HARNESS_RISK_H_
#define ADALAB_HARNESS_RISK_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "adalab/bounds/bounds.h"
#include "adalab/harness/experiment.h"

namespace adalab::harness {

// Monte Carlo estimates for one round. Standard errors are sample standard
// deviations over sqrt(replications). bias_sq_hat = bias_hat^2 - bias_se^2,
// floored at 0. The conditional columns estimate E[b^2] for the conditional
// bias b = E[phi - mu | earlier releases] under the declared-noise linear
// posterior; it is known in every replication, so no sampling of phi enters.
struct RoundRisk {
  double bias_hat = 0.0;
  double bias_se = 0.0;
  double bias_sq_hat = 0.0;
  double mse_hat = 0.0;
  double mse_se = 0.0;
  double cond_bias_sq_hat = 0.0;
  double cond_bias_sq_se = 0.0;
};

struct RiskReport {
  std::vector<RoundRisk> per_round;
  // The conjunction applied to per-round mse_hat.
  double combined_risk = 0.0;
  bounds::BoundReport bound_report;
  std::int64_t replications_used = 0;

  double MaxMse() const;
  // Standard error of the round with the largest mse_hat.
  double MaxMseSe() const;
};

// Replications run in fixed-size chunks merged in index order, so results
// are bit-identical for every worker count.
inline constexpr std::int64_t kReplicationChunk = 256;

absl::StatusOr<RiskReport> EstimateRisk(const ExperimentConfig& config,
                                        int workers = 1);

// EstimateRisk for every config, parallel across configs and replication
// chunks. Output order matches input order; a failing config does not stop
// the others.
std::vector<absl::StatusOr<RiskReport>> Sweep(
    const std::vector<ExperimentConfig>& configs, int workers = 1);

}  // namespace adalab::harness

#endif  // ADALAB_HARNESS_RISK_H_
