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

#include "adalab/common/discretized_distribution.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace adalab {

absl::StatusOr<DiscretizedDistribution> DiscretizedDistribution::FromWeights(
    double grid_min, double grid_max, std::vector<double> weights) {
  if (weights.size() < 2) {
    return absl::InvalidArgumentError("a grid needs at least two points");
  }
  if (!(grid_max > grid_min) || !std::isfinite(grid_min) ||
      !std::isfinite(grid_max)) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid grid range [", grid_min, ", ", grid_max, "]"));
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      return absl::InvalidArgumentError(
          absl::StrCat("weights must be finite and nonnegative, got ", w));
    }
    total += w;
  }
  if (!(total > 0.0)) {
    return absl::InvalidArgumentError("weights have zero total mass");
  }
  for (double& w : weights) w /= total;
  return DiscretizedDistribution(grid_min, grid_max, std::move(weights));
}

DiscretizedDistribution::DiscretizedDistribution(double grid_min,
                                                 double grid_max,
                                                 std::vector<double> weights)
    : grid_min_(grid_min), grid_max_(grid_max), weights_(std::move(weights)) {
  cumulative_.resize(weights_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    running += weights_[i];
    cumulative_[i] = running;
  }
}

double DiscretizedDistribution::Mean() const {
  double mean = 0.0;
  for (int i = 0; i < n_points(); ++i) mean += weights_[i] * point(i);
  return mean;
}

double DiscretizedDistribution::Variance() const {
  const double mean = Mean();
  double var = 0.0;
  for (int i = 0; i < n_points(); ++i) {
    const double d = point(i) - mean;
    var += weights_[i] * d * d;
  }
  return var;
}

int DiscretizedDistribution::Quantile(double u) const {
  const double target = u * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) --it;
  return static_cast<int>(it - cumulative_.begin());
}

}  // namespace adalab
