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

#ifndef ADALAB_ADVERSARIES_LEAST_FAVORABLE_H_
#define ADALAB_ADVERSARIES_LEAST_FAVORABLE_H_

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace adalab::adversaries {

struct LeastFavorable {
  Eigen::VectorXd v;
  double value = 0.0;
};

// Maximizes <v, x> over covariance vectors with v^T Sigma^{-1} v <= sigma^2.
// The optimum is v = sigma Sigma x / |x|_Sigma with value sigma |x|_Sigma,
// where |x|_Sigma^2 = x^T Sigma x. Returns v = 0 when |x|_Sigma = 0.
absl::StatusOr<LeastFavorable> LeastFavorableCovariance(
    const Eigen::VectorXd& x, const Eigen::MatrixXd& sigma_matrix,
    double sigma);

}  // namespace adalab::adversaries

#endif  // ADALAB_ADVERSARIES_LEAST_FAVORABLE_H_
