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

#ifndef ADALAB_ADVERSARIES_ADVERSARY_H_
#define ADALAB_ADVERSARIES_ADVERSARY_H_

#include <memory>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/adversaries/posterior_tracker.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/game_history.h"
#include "adalab/world/query.h"

namespace adalab::adversaries {

enum class AdversaryKind {
  kOrthogonalThenOneStep,
  kKStepGreedy,
  kBayesSign,
  kFixedSequence,
};

absl::string_view AdversaryKindName(AdversaryKind kind);
absl::StatusOr<AdversaryKind> ParseAdversaryKind(absl::string_view name);

// `queries` is used by kFixedSequence only and must hold k entries.
struct AdversaryConfig {
  AdversaryKind kind = AdversaryKind::kKStepGreedy;
  double sigma = 1.0;
  std::vector<world::QuerySpec> queries;

  absl::Status Validate(int k) const;

  friend bool operator==(const AdversaryConfig&,
                         const AdversaryConfig&) = default;
};

// Everything an adversary may look at when choosing the query of round
// `round` (1-based) out of k: the shared transcript, a posterior summary
// of it, and the noise declared for the coming round.
struct AdversaryView {
  world::SharedTranscript history;
  const PosteriorTracker& posterior;
  const mechanisms::NoiseSpec& declared;
  int round = 1;
  int k = 1;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual absl::StatusOr<world::QuerySpec> Select(
      const AdversaryView& view) const = 0;
};

absl::StatusOr<std::unique_ptr<Adversary>> MakeAdversary(
    const AdversaryConfig& config, int k);

// A query with variance sigma^2 uncorrelated with `dimension` earlier ones.
world::QuerySpec OrthogonalQuery(int dimension, double sigma);

// The least favorable query given a shared transcript; the first round is
// unconditional.
absl::StatusOr<world::QuerySpec> SelectOneStep(
    world::SharedTranscript transcript, double sigma);

// The greedy adversary applies the one-step construction in every round.
absl::StatusOr<world::QuerySpec> SelectKStepGreedy(
    world::SharedTranscript transcript, double sigma);

// Same construction as SelectOneStep from an up-to-date posterior.
world::QuerySpec SelectLeastFavorable(const PosteriorTracker& posterior);

}  // namespace adalab::adversaries

#endif  // ADALAB_ADVERSARIES_ADVERSARY_H_
