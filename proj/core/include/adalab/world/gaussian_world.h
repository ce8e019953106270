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

#ifndef ADALAB_WORLD_GAUSSIAN_WORLD_H_
#define ADALAB_WORLD_GAUSSIAN_WORLD_H_

#include <cstdint>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "adalab/common/incremental_cholesky.h"
#include "adalab/world/query.h"

namespace adalab::world {

// Jitter added to the covariance diagonal, relative to sigma_max^2.
inline constexpr double kCovarianceJitter = 1e-10;
// Tolerance of the positive semidefinite check, relative to sigma_max^2.
inline constexpr double kPsdTolerance = 1e-9;

struct ConditionalLaw {
  double mean = 0.0;
  double variance = 0.0;
};

// Joint law and realized values of the statistics selected so far. Realized
// values are drawn one at a time from their conditional normal law given
// the earlier ones.
class GaussianWorldState {
 public:
  static absl::StatusOr<GaussianWorldState> Create(double sigma_max,
                                                   std::uint64_t rng_seed);

  double sigma_max() const { return sigma_max_; }
  std::uint64_t rng_seed() const { return rng_seed_; }
  int dimension() const { return static_cast<int>(means_.size()); }
  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& realized() const { return realized_; }
  double Cov(int i, int j) const;
  Eigen::MatrixXd Covariance() const;

  // Validates q against the current covariance and returns the conditional
  // law of its statistic given the realized values.
  absl::StatusOr<ConditionalLaw> ConditionalLawOf(const QuerySpec& q) const;

  // Appends q and draws its realized value. The draw uses a counter-based
  // stream keyed by (rng_seed, dimension), so it is reproducible.
  //
  // When Sigma is singular a feasible q must also have its covariance in the
  // range of Sigma. Entries against statistics that are exact combinations
  // of earlier ones are therefore implied by the others; q is rejected if it
  // departs from them beyond what the rank tolerance allows, and the implied
  // values are what gets stored.
  absl::Status Extend(const QuerySpec& q);

  // The query of round i + 1 as stored, with implied covariance entries.
  QuerySpec StoredQuery(int i) const;

 private:
  GaussianWorldState(double sigma_max, std::uint64_t rng_seed);

  absl::Status Check(const QuerySpec& q) const;
  // Also returns L^{-1} v and v with its implied entries.
  absl::StatusOr<ConditionalLaw> Condition(const QuerySpec& q,
                                           std::vector<double>* solved,
                                           std::vector<double>* implied) const;

  double sigma_max_;
  std::uint64_t rng_seed_;
  std::vector<double> cov_packed_;
  std::vector<double> means_;
  std::vector<double> realized_;
  IncrementalCholesky chol_;
  // L^{-1} (realized - means).
  std::vector<double> whitened_;
};

// Value-semantics form of GaussianWorldState::Extend.
absl::StatusOr<GaussianWorldState> ExtendWorld(GaussianWorldState state,
                                               const QuerySpec& q);

}  // namespace adalab::world

#endif  // ADALAB_WORLD_GAUSSIAN_WORLD_H_
