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

#include "adalab/world/game_history.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace adalab::world {

absl::Status GameHistory::Append(SharedRound shared,
                                 PrivateRound player_private) {
  if (shared.release != player_private.realized + player_private.noise) {
    return absl::InternalError(absl::StrCat(
        "round ", rounds() + 1, " breaks the reconstruction identity: release ",
        shared.release, " != ", player_private.realized, " + ",
        player_private.noise));
  }
  shared_.push_back(std::move(shared));
  player_private_.push_back(player_private);
  return absl::OkStatus();
}

}  // namespace adalab::world
