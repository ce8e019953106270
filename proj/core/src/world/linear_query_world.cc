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

#include "adalab/world/linear_query_world.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/counter_rng.h"
#include "adalab/common/normal.h"

namespace adalab::world {

absl::StatusOr<LinearQueryWorld> LinearQueryWorld::Create(int d, int n,
                                                          double feature_sd,
                                                          std::uint64_t seed) {
  if (d < 1 || n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("d and n must be >= 1, got d=", d, " n=", n));
  }
  if (!(feature_sd > 0.0) || !std::isfinite(feature_sd)) {
    return absl::InvalidArgumentError("feature_sd must be positive");
  }
  Eigen::MatrixXd data(d, n);
  for (int col = 0; col < n; ++col) {
    CounterRng rng(seed, static_cast<std::uint64_t>(col), DrawPurpose::kData);
    for (int row = 0; row < d; ++row) {
      data(row, col) = feature_sd * StandardNormal(rng);
    }
  }
  return LinearQueryWorld(feature_sd, std::move(data));
}

absl::StatusOr<std::pair<QuerySpec, double>> LinearQuery(
    LinearQueryWorld& world, const Eigen::VectorXd& t) {
  if (t.size() != world.d()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "query has dimension ", t.size(), ", expected ", world.d()));
  }
  if (!t.allFinite() || t.norm() > 1.0 + 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid query: |t| = ", t.norm(), " exceeds 1"));
  }
  const double unit = world.feature_sd() * world.feature_sd() / world.n();
  QuerySpec spec;
  spec.mean = 0.0;
  spec.variance = t.squaredNorm() * unit;
  spec.cov_with_history.reserve(world.asked_.size());
  for (const Eigen::VectorXd& prev : world.asked_) {
    spec.cov_with_history.push_back(t.dot(prev) * unit);
  }
  const double realized = (t.transpose() * world.data_).mean();
  world.asked_.push_back(t);
  return std::make_pair(std::move(spec), realized);
}

}  // namespace adalab::world
