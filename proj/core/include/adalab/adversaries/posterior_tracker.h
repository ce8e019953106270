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

#ifndef ADALAB_ADVERSARIES_POSTERIOR_TRACKER_H_
#define ADALAB_ADVERSARIES_POSTERIOR_TRACKER_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "adalab/common/incremental_cholesky.h"
#include "adalab/world/game_history.h"
#include "adalab/world/query.h"

namespace adalab::adversaries {

// Linear Gaussian posterior of the selected statistics given the releases,
// computed from the shared transcript only. Noise enters through its
// declared mean and variance: with Sigma the query covariance, W the
// declared noise variances and r = A - mu - E[Z], the posterior mean of a
// new statistic with cross covariance v is its mean plus v^T (Sigma + W)^{-1} r.
class PosteriorTracker {
 public:
  explicit PosteriorTracker(double sigma);

  // Replays a transcript.
  static absl::StatusOr<PosteriorTracker> FromTranscript(
      world::SharedTranscript transcript, double sigma);

  int size() const { return static_cast<int>(residual_.size()); }
  double sigma() const { return sigma_; }

  // v^T (Sigma + W)^{-1} r.
  double ConditionalBias(std::span<const double> v) const;

  // x = (Sigma + W)^{-1} r.
  std::vector<double> WeightedResidual() const;

  // The covariance vector maximizing the conditional bias of a new query
  // with variance sigma^2, and that bias.
  struct Choice {
    std::vector<double> v;
    double bias = 0.0;
  };
  Choice LeastFavorable() const;

  // Adds a completed round. Returns the conditional bias the query had
  // before its own release was observed.
  absl::StatusOr<double> Append(const world::SharedRound& round);

 private:
  double sigma_;
  IncrementalCholesky chol_;
  std::vector<double> residual_;
  // Factor of Sigma alone, built exactly as the world builds its own.
  IncrementalCholesky query_chol_;
  // Lower triangle of Sigma, packed by rows.
  std::vector<double> covariance_;
  // L^{-1} r.
  std::vector<double> whitened_;
};

}  // namespace adalab::adversaries

#endif  // ADALAB_ADVERSARIES_POSTERIOR_TRACKER_H_
