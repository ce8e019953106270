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

#include "adalab/harness/game.h"

#include <utility>

#include "adalab/adversaries/posterior_tracker.h"
#include "adalab/common/counter_rng.h"
#include "adalab/world/gaussian_world.h"

namespace adalab::harness {

absl::StatusOr<GameResult> PlayGame(const ExperimentConfig& config,
                                    const adversaries::Adversary& adversary,
                                    const mechanisms::NoisePolicy& policy,
                                    std::int64_t replication) {
  const std::uint64_t seed =
      DeriveSeed(config.seed, static_cast<std::uint64_t>(replication));
  absl::StatusOr<world::GaussianWorldState> world =
      world::GaussianWorldState::Create(config.sigma, seed);
  if (!world.ok()) return world.status();
  adversaries::PosteriorTracker posterior(config.sigma);
  GameResult result;
  result.conditional_bias.reserve(config.k);
  for (int round = 1; round <= config.k; ++round) {
    mechanisms::NoiseSpec declared = policy(round, result.history);
    adversaries::AdversaryView view{result.history.shared(), posterior,
                                    declared, round, config.k};
    absl::StatusOr<world::QuerySpec> query = adversary.Select(view);
    if (!query.ok()) return query.status();
    if (absl::Status s = world->Extend(*query); !s.ok()) return s;
    // The transcript carries the covariance the world actually realized.
    world::QuerySpec stored = world->StoredQuery(round - 1);
    const double phi = world->realized().back();
    CounterRng noise_rng(seed, static_cast<std::uint64_t>(round),
                         DrawPurpose::kNoise);
    const mechanisms::Released released =
        mechanisms::Release(phi, declared, noise_rng);
    world::SharedRound shared{std::move(stored), released.release,
                              std::move(declared)};
    absl::StatusOr<double> bias = posterior.Append(shared);
    if (!bias.ok()) return bias.status();
    result.conditional_bias.push_back(*bias);
    if (absl::Status s = result.history.Append(
            std::move(shared), {released.noise, phi});
        !s.ok()) {
      return s;
    }
  }
  return result;
}

absl::StatusOr<world::GameHistory> RunGame(const ExperimentConfig& config,
                                           std::int64_t replication) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  absl::StatusOr<std::unique_ptr<adversaries::Adversary>> adversary =
      adversaries::MakeAdversary(config.adversary, config.k);
  if (!adversary.ok()) return adversary.status();
  absl::StatusOr<mechanisms::NoisePolicy> policy =
      mechanisms::MakeNoisePolicy(config.mechanism, config.k);
  if (!policy.ok()) return policy.status();
  absl::StatusOr<GameResult> result =
      PlayGame(config, **adversary, *policy, replication);
  if (!result.ok()) return result.status();
  return std::move(result->history);
}

}  // namespace adalab::harness
