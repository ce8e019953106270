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

#include "adalab/adversaries/least_favorable.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace adalab::adversaries {

absl::StatusOr<LeastFavorable> LeastFavorableCovariance(
    const Eigen::VectorXd& x, const Eigen::MatrixXd& sigma_matrix,
    double sigma) {
  if (sigma_matrix.rows() != x.size() || sigma_matrix.cols() != x.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "dimension mismatch: x has ", x.size(), " entries, Sigma is ",
        sigma_matrix.rows(), "x", sigma_matrix.cols()));
  }
  if (!(sigma >= 0.0)) {
    return absl::InvalidArgumentError("sigma must be >= 0");
  }
  const Eigen::VectorXd sx = sigma_matrix * x;
  const double norm_sq = x.dot(sx);
  if (!(norm_sq > 0.0)) {
    return LeastFavorable{Eigen::VectorXd::Zero(x.size()), 0.0};
  }
  const double norm = std::sqrt(norm_sq);
  return LeastFavorable{(sigma / norm) * sx, sigma * norm};
}

}  // namespace adalab::adversaries
