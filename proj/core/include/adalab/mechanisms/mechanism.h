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

#ifndef ADALAB_MECHANISMS_MECHANISM_H_
#define ADALAB_MECHANISMS_MECHANISM_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/common/discretized_distribution.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/game_history.h"

namespace adalab {
class CounterRng;
}  // namespace adalab

namespace adalab::mechanisms {

enum class MechanismKind { kGaussianSchedule, kZeroNoise, kUniformSchedule, kCustom };

absl::string_view MechanismKindName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name);

// The player's release protocol. w_schedule[i] is the noise standard
// deviation declared for round i + 1. The custom kind releases with
// `table` in every round whose schedule entry is positive and without noise
// otherwise.
struct MechanismConfig {
  MechanismKind kind = MechanismKind::kGaussianSchedule;
  std::vector<double> w_schedule;
  std::string table_path;
  std::shared_ptr<const DiscretizedDistribution> table;

  absl::Status Validate(int k) const;

  friend bool operator==(const MechanismConfig& a, const MechanismConfig& b);
};

// Gaussian schedule with w_i = (k-1)^{1/4} sigma for i < k and w_k = 0.
absl::StatusOr<MechanismConfig> DefaultSchedule(int k, double sigma);

// Schedule of `kind` with w for rounds 1..k-1 and final_w for round k.
absl::StatusOr<MechanismConfig> ConstantSchedule(MechanismKind kind, int k,
                                                 double w, double final_w);

// The noise declared for round `round` (1-based).
NoiseSpec DeclareNoise(const MechanismConfig& config, int round);

// Chooses the declared noise of round `round` from the full transcript,
// including the player-private part. Default mechanisms ignore the history.
using NoisePolicy =
    std::function<NoiseSpec(int round, const world::GameHistory& history)>;

absl::StatusOr<NoisePolicy> MakeNoisePolicy(const MechanismConfig& config,
                                            int k);

struct Released {
  double release = 0.0;
  double noise = 0.0;
};

// Draws Z from `noise` and returns (phi + Z, Z).
Released Release(double phi, const NoiseSpec& noise, CounterRng& rng);

}  // namespace adalab::mechanisms

#endif  // ADALAB_MECHANISMS_MECHANISM_H_
