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

#ifndef ADALAB_WORLD_LINEAR_QUERY_WORLD_H_
#define ADALAB_WORLD_LINEAR_QUERY_WORLD_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "adalab/world/query.h"

namespace adalab::world {

// n samples of d independent N(0, feature_sd^2) features. A query is a vector
// t with |t| <= 1 and its statistic is the sample mean of <t, X_i>.
class LinearQueryWorld {
 public:
  static absl::StatusOr<LinearQueryWorld> Create(int d, int n,
                                                 double feature_sd,
                                                 std::uint64_t seed);

  int d() const { return static_cast<int>(data_.rows()); }
  int n() const { return static_cast<int>(data_.cols()); }
  double feature_sd() const { return feature_sd_; }
  const Eigen::MatrixXd& data() const { return data_; }
  const std::vector<Eigen::VectorXd>& asked() const { return asked_; }

 private:
  LinearQueryWorld(double feature_sd, Eigen::MatrixXd data)
      : feature_sd_(feature_sd), data_(std::move(data)) {}

  friend absl::StatusOr<std::pair<QuerySpec, double>> LinearQuery(
      LinearQueryWorld& world, const Eigen::VectorXd& t);

  double feature_sd_;
  Eigen::MatrixXd data_;
  std::vector<Eigen::VectorXd> asked_;
};

// Answers query t and records it so later queries report their covariance
// with it. Returns the query's law and its realized value.
absl::StatusOr<std::pair<QuerySpec, double>> LinearQuery(
    LinearQueryWorld& world, const Eigen::VectorXd& t);

}  // namespace adalab::world

#endif  // ADALAB_WORLD_LINEAR_QUERY_WORLD_H_
