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

#ifndef ADALAB_COMMON_DISCRETIZED_DISTRIBUTION_H_
#define ADALAB_COMMON_DISCRETIZED_DISTRIBUTION_H_

#include <vector>

#include "absl/status/statusor.h"

namespace adalab {

// A probability distribution supported on the points of a uniform grid
// grid_min + i * spacing, i = 0..n_points-1. Each weight is the probability
// mass of an atom at that grid point.
class DiscretizedDistribution {
 public:
  // Normalizes `weights` to unit mass. Fails on negative or non-finite
  // weights, zero total mass, fewer than two points, or grid_max <= grid_min.
  static absl::StatusOr<DiscretizedDistribution> FromWeights(
      double grid_min, double grid_max, std::vector<double> weights);

  double grid_min() const { return grid_min_; }
  double grid_max() const { return grid_max_; }
  int n_points() const { return static_cast<int>(weights_.size()); }
  double spacing() const { return (grid_max_ - grid_min_) / (n_points() - 1); }
  double point(int i) const { return grid_min_ + i * spacing(); }
  const std::vector<double>& weights() const { return weights_; }

  double Mean() const;
  double Variance() const;
  // Smallest atom index i with P(atom <= i) > u, for u in [0, 1).
  int Quantile(double u) const;

  friend bool operator==(const DiscretizedDistribution&,
                         const DiscretizedDistribution&) = default;

 private:
  DiscretizedDistribution(double grid_min, double grid_max,
                          std::vector<double> weights);

  double grid_min_ = 0.0;
  double grid_max_ = 0.0;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

}  // namespace adalab

#endif  // ADALAB_COMMON_DISCRETIZED_DISTRIBUTION_H_
