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

#include "adalab/bounds/bounds.h"

#include <algorithm>
#include <cmath>

#include "Eigen/LU"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/diagnostics.h"
#include "adalab/common/normal.h"

namespace adalab::bounds {

double OneStepBiasSqBound(int k, double sigma, double w) {
  if (k <= 1) return 0.0;
  if (w == 0.0) return kInfinity;
  const double s2 = sigma * sigma;
  return (k - 1) * s2 * s2 / (w * w);
}

double OneStepMseBound(int k, double sigma) {
  return (2.0 * std::sqrt(std::max(k - 1, 0)) + 1.0) * sigma * sigma;
}

double SharpnessFloor(int k, double sigma, double w) {
  if (k <= 1) return 0.0;
  const double s2 = sigma * sigma;
  return (k - 1) * s2 * s2 / (w * w + s2);
}

double ExpectedSupBiasSq(std::span<const double> eigenvalues, double sigma,
                         double w) {
  double sum = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > 0.0) sum += lambda / (lambda + w * w);
  }
  return sigma * sigma * sum;
}

absl::StatusOr<double> RecursiveFkUpdate(double f_prev,
                                         const Eigen::MatrixXd& sigma_matrix,
                                         const Eigen::MatrixXd& w_matrix,
                                         const Eigen::VectorXd& v,
                                         double lambda, double w_sq) {
  const Eigen::Index n = v.size();
  if (sigma_matrix.rows() != n || sigma_matrix.cols() != n ||
      w_matrix.rows() != n || w_matrix.cols() != n) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  if (n == 0) {
    if (lambda + w_sq <= 1e-12) {
      return absl::InvalidArgumentError("degenerate query: lambda + w^2 = 0");
    }
    return f_prev + lambda / (lambda + w_sq);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sigma_matrix + w_matrix);
  const Eigen::VectorXd pv = lu.solve(v);
  const double vpv = v.dot(pv);
  const double vov = pv.dot(sigma_matrix * pv);
  const double denominator = lambda + w_sq - vpv;
  if (!(denominator > 1e-12)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "degenerate query: lambda + w^2 - v^T (Sigma+W)^-1 v = ", denominator));
  }
  return f_prev + (lambda + vov - 2.0 * vpv) / denominator;
}

absl::StatusOr<Eigen::MatrixXd> AugmentedInverse(const Eigen::MatrixXd& inv,
                                                 const Eigen::VectorXd& v,
                                                 double lambda, double w_sq) {
  const Eigen::Index n = v.size();
  if (inv.rows() != n || inv.cols() != n) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  const Eigen::VectorXd u = inv * v;
  const double schur = lambda + w_sq - v.dot(u);
  if (!(schur > 1e-12)) {
    return absl::InvalidArgumentError("augmented matrix is singular");
  }
  const double alpha = 1.0 / schur;
  Eigen::MatrixXd out(n + 1, n + 1);
  out.topLeftCorner(n, n) = inv + alpha * u * u.transpose();
  out.topRightCorner(n, 1) = -alpha * u;
  out.bottomLeftCorner(1, n) = -alpha * u.transpose();
  out(n, n) = alpha;
  return out;
}

double KStepBiasSqBound(double sigma, std::span<const double> w_schedule) {
  const double s2 = sigma * sigma;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < w_schedule.size(); ++i) {
    const double w2 = w_schedule[i] * w_schedule[i];
    if (w2 == 0.0) return kInfinity;
    sum += 1.0 / w2 + s2 / (w2 * w2);
  }
  return s2 * s2 * sum;
}

double KStepMseBound(int k, double sigma) {
  return 2.0 * (std::sqrt(std::max(k - 1, 0)) + 1.0) * sigma * sigma;
}

double MinimaxLowerBound(int k, double sigma) {
  if (k < 2) {
    Warn("the minimax lower bound needs k >= 2; returning 0");
    return 0.0;
  }
  return std::sqrt(k - 1.0) * sigma * sigma / (2.0 * kSqrt3);
}

BoundReport ComputeBounds(int k, double sigma,
                          std::span<const double> w_schedule) {
  const double w = w_schedule.empty() ? 0.0 : w_schedule.front();
  BoundReport report;
  report.one_step_bias_sq = OneStepBiasSqBound(k, sigma, w);
  report.one_step_mse = OneStepMseBound(k, sigma);
  report.k_step_bias_sq = KStepBiasSqBound(sigma, w_schedule);
  report.k_step_mse = KStepMseBound(k, sigma);
  report.minimax_lower = k >= 2 ? MinimaxLowerBound(k, sigma) : 0.0;
  report.sharpness_floor = SharpnessFloor(k, sigma, w);
  return report;
}

}  // namespace adalab::bounds
