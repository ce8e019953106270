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

#ifndef ADALAB_BOUNDS_BOUNDS_H_
#define ADALAB_BOUNDS_BOUNDS_H_

#include <limits>
#include <span>

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace adalab::bounds {

// Returned by bounds that diverge as a noise scale goes to zero.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// (k-1) sigma^4 / w^2: squared bias of the final round against the one-step
// adversary when rounds 1..k-1 use noise of standard deviation w.
double OneStepBiasSqBound(int k, double sigma, double w);

// (2 sqrt(k-1) + 1) sigma^2: one-step MSE bound at w^2 = sqrt(k-1) sigma^2.
double OneStepMseBound(int k, double sigma);

// (k-1) sigma^4 / (w^2 + sigma^2): squared bias the one-step adversary
// attains against orthogonal earlier queries.
double SharpnessFloor(int k, double sigma, double w);

// sigma^2 sum_i lambda_i / (lambda_i + w^2) for fixed earlier queries whose
// covariance has eigenvalues lambda.
double ExpectedSupBiasSq(std::span<const double> eigenvalues, double sigma,
                         double w);

// Conditional expectation of f = r^T Omega r, Omega = P Sigma P with
// P = (Sigma + W)^{-1}, after one more round with cross covariance v,
// variance lambda and noise variance w_sq, given f_prev for the earlier
// rounds: f_prev + (lambda + v^T Omega v - 2 v^T P v) /
// (lambda + w_sq - v^T P v).
absl::StatusOr<double> RecursiveFkUpdate(double f_prev,
                                         const Eigen::MatrixXd& sigma_matrix,
                                         const Eigen::MatrixXd& w_matrix,
                                         const Eigen::VectorXd& v,
                                         double lambda, double w_sq);

// The inverse of [[Sigma + W, v], [v^T, lambda + w_sq]] from inv =
// (Sigma + W)^{-1} by block elimination with alpha = 1 / (lambda + w_sq -
// v^T inv v).
absl::StatusOr<Eigen::MatrixXd> AugmentedInverse(const Eigen::MatrixXd& inv,
                                                 const Eigen::VectorXd& v,
                                                 double lambda, double w_sq);

// sigma^4 sum_{i<k} (1/w_i^2 + sigma^2/w_i^4) for schedule w_1..w_k.
double KStepBiasSqBound(double sigma, std::span<const double> w_schedule);

// 2 (sqrt(k-1) + 1) sigma^2.
double KStepMseBound(int k, double sigma);

// sqrt(k-1) sigma^2 / (2 sqrt(3)); 0 with a warning when k < 2.
double MinimaxLowerBound(int k, double sigma);

struct BoundReport {
  double one_step_bias_sq = 0.0;
  double one_step_mse = 0.0;
  double k_step_bias_sq = 0.0;
  double k_step_mse = 0.0;
  double minimax_lower = 0.0;
  double sharpness_floor = 0.0;
};

// Evaluates every bound for k rounds. The one-step bounds and the sharpness
// floor use the first entry of the schedule as w.
BoundReport ComputeBounds(int k, double sigma,
                          std::span<const double> w_schedule);

}  // namespace adalab::bounds

#endif  // ADALAB_BOUNDS_BOUNDS_H_
