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

#ifndef ADALAB_HARNESS_GAME_H_
#define ADALAB_HARNESS_GAME_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "adalab/adversaries/adversary.h"
#include "adalab/harness/experiment.h"
#include "adalab/mechanisms/mechanism.h"
#include "adalab/world/game_history.h"

namespace adalab::harness {

struct GameResult {
  world::GameHistory history;
  // E[phi_i - mu_i | A_1..A_{i-1}] under the linear posterior built from
  // the declared noise, for every round i.
  std::vector<double> conditional_bias;
};

// Plays one game. Every random draw is keyed by (seed, replication, round),
// so the result does not depend on which other games run or in what order.
absl::StatusOr<GameResult> PlayGame(const ExperimentConfig& config,
                                    const adversaries::Adversary& adversary,
                                    const mechanisms::NoisePolicy& policy,
                                    std::int64_t replication);

absl::StatusOr<world::GameHistory> RunGame(const ExperimentConfig& config,
                                           std::int64_t replication);

}  // namespace adalab::harness

#endif  // ADALAB_HARNESS_GAME_H_
