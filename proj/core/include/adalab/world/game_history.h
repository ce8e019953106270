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

#ifndef ADALAB_WORLD_GAME_HISTORY_H_
#define ADALAB_WORLD_GAME_HISTORY_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/query.h"

namespace adalab::world {

// What both players see after a round.
struct SharedRound {
  QuerySpec query;
  double release = 0.0;
  mechanisms::NoiseSpec declared;

  friend bool operator==(const SharedRound&, const SharedRound&) = default;
};

// What only the player sees after a round.
struct PrivateRound {
  double noise = 0.0;
  double realized = 0.0;

  friend bool operator==(const PrivateRound&, const PrivateRound&) = default;
};

// The shared transcript. Adversaries only ever receive this view.
using SharedTranscript = std::span<const SharedRound>;

class GameHistory {
 public:
  // Rejects the round unless release == realized + noise exactly.
  absl::Status Append(SharedRound shared, PrivateRound player_private);

  int rounds() const { return static_cast<int>(shared_.size()); }
  SharedTranscript shared() const { return shared_; }
  std::span<const PrivateRound> player_private() const {
    return player_private_;
  }

  friend bool operator==(const GameHistory&, const GameHistory&) = default;

 private:
  std::vector<SharedRound> shared_;
  std::vector<PrivateRound> player_private_;
};

}  // namespace adalab::world

#endif  // ADALAB_WORLD_GAME_HISTORY_H_
