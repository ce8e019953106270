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

#include "adalab/harness/risk.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "adalab/adversaries/adversary.h"
#include "adalab/common/parallel.h"
#include "adalab/harness/game.h"
#include "adalab/mechanisms/mechanism.h"

namespace adalab::harness {
namespace {

// Streaming mean and sum of squared deviations.
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void Add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void Merge(const Moments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }

  double StandardError() const {
    if (count < 2.0) return 0.0;
    return std::sqrt(m2 / (count - 1.0) / count);
  }
};

struct RoundMoments {
  Moments bias;
  Moments squared_error;
  Moments cond_bias_sq;
};

using ChunkMoments = std::vector<RoundMoments>;

struct Prepared {
  const ExperimentConfig* config = nullptr;
  std::unique_ptr<adversaries::Adversary> adversary;
  mechanisms::NoisePolicy policy;
  std::int64_t chunks = 0;
};

absl::Status Prepare(const ExperimentConfig& config, Prepared& out) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  absl::StatusOr<std::unique_ptr<adversaries::Adversary>> adversary =
      adversaries::MakeAdversary(config.adversary, config.k);
  if (!adversary.ok()) return adversary.status();
  absl::StatusOr<mechanisms::NoisePolicy> policy =
      mechanisms::MakeNoisePolicy(config.mechanism, config.k);
  if (!policy.ok()) return policy.status();
  out.config = &config;
  out.adversary = *std::move(adversary);
  out.policy = *std::move(policy);
  out.chunks =
      (config.replications + kReplicationChunk - 1) / kReplicationChunk;
  return absl::OkStatus();
}

absl::StatusOr<ChunkMoments> RunChunk(const Prepared& prepared,
                                      std::int64_t chunk) {
  const ExperimentConfig& config = *prepared.config;
  ChunkMoments moments(config.k);
  const std::int64_t begin = chunk * kReplicationChunk;
  const std::int64_t end =
      std::min(begin + kReplicationChunk, config.replications);
  for (std::int64_t rep = begin; rep < end; ++rep) {
    absl::StatusOr<GameResult> game =
        PlayGame(config, *prepared.adversary, prepared.policy, rep);
    if (!game.ok()) return game.status();
    const auto shared = game->history.shared();
    const auto hidden = game->history.player_private();
    for (int i = 0; i < config.k; ++i) {
      const double mu = shared[i].query.mean;
      const double err = shared[i].release - mu;
      const double b = game->conditional_bias[i];
      moments[i].bias.Add(hidden[i].realized - mu);
      moments[i].squared_error.Add(err * err);
      moments[i].cond_bias_sq.Add(b * b);
    }
  }
  return moments;
}

RiskReport Summarize(const ExperimentConfig& config,
                     const std::vector<ChunkMoments>& chunks) {
  ChunkMoments total(config.k);
  for (const ChunkMoments& chunk : chunks) {
    for (int i = 0; i < config.k; ++i) {
      total[i].bias.Merge(chunk[i].bias);
      total[i].squared_error.Merge(chunk[i].squared_error);
      total[i].cond_bias_sq.Merge(chunk[i].cond_bias_sq);
    }
  }
  RiskReport report;
  std::vector<double> mse;
  for (const RoundMoments& m : total) {
    RoundRisk r;
    r.bias_hat = m.bias.mean;
    r.bias_se = m.bias.StandardError();
    r.bias_sq_hat = std::max(0.0, r.bias_hat * r.bias_hat - r.bias_se * r.bias_se);
    r.mse_hat = m.squared_error.mean;
    r.mse_se = m.squared_error.StandardError();
    r.cond_bias_sq_hat = m.cond_bias_sq.mean;
    r.cond_bias_sq_se = m.cond_bias_sq.StandardError();
    report.per_round.push_back(r);
    mse.push_back(r.mse_hat);
  }
  report.combined_risk = Combine(config.conjunction, mse);
  report.bound_report =
      bounds::ComputeBounds(config.k, config.sigma, config.mechanism.w_schedule);
  report.replications_used = config.replications;
  return report;
}

}  // namespace

double RiskReport::MaxMse() const {
  double best = 0.0;
  for (const RoundRisk& r : per_round) best = std::max(best, r.mse_hat);
  return best;
}

double RiskReport::MaxMseSe() const {
  double best = -1.0;
  double se = 0.0;
  for (const RoundRisk& r : per_round) {
    if (r.mse_hat > best) {
      best = r.mse_hat;
      se = r.mse_se;
    }
  }
  return se;
}

absl::StatusOr<RiskReport> EstimateRisk(const ExperimentConfig& config,
                                        int workers) {
  std::vector<absl::StatusOr<RiskReport>> reports = Sweep({config}, workers);
  return std::move(reports.front());
}

std::vector<absl::StatusOr<RiskReport>> Sweep(
    const std::vector<ExperimentConfig>& configs, int workers) {
  const std::size_t n = configs.size();
  std::vector<Prepared> prepared(n);
  std::vector<absl::Status> status(n);
  std::vector<std::pair<std::size_t, std::int64_t>> tasks;
  for (std::size_t c = 0; c < n; ++c) {
    status[c] = Prepare(configs[c], prepared[c]);
    if (!status[c].ok()) continue;
    for (std::int64_t chunk = 0; chunk < prepared[c].chunks; ++chunk) {
      tasks.emplace_back(c, chunk);
    }
  }
  std::vector<absl::StatusOr<ChunkMoments>> results(tasks.size());
  ParallelFor(static_cast<std::int64_t>(tasks.size()), workers,
              [&](std::int64_t t) {
                results[t] = RunChunk(prepared[tasks[t].first], tasks[t].second);
              });

  std::vector<std::vector<ChunkMoments>> per_config(n);
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const std::size_t c = tasks[t].first;
    if (!status[c].ok()) continue;
    if (!results[t].ok()) {
      status[c] = results[t].status();
      continue;
    }
    per_config[c].push_back(*std::move(results[t]));
  }
  std::vector<absl::StatusOr<RiskReport>> out;
  out.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!status[c].ok()) {
      out.push_back(status[c]);
    } else {
      out.push_back(Summarize(configs[c], per_config[c]));
    }
  }
  return out;
}

}  // namespace adalab::harness
