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

#include "adalab/world/gaussian_world.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "adalab/common/counter_rng.h"
#include "adalab/common/normal.h"

namespace adalab::world {
namespace {

std::size_t PackedIndex(int i, int j) {
  if (j > i) std::swap(i, j);
  return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GaussianWorldState::GaussianWorldState(double sigma_max,
                                       std::uint64_t rng_seed)
    : sigma_max_(sigma_max),
      rng_seed_(rng_seed),
      chol_(kCovarianceJitter * sigma_max * sigma_max,
            kPsdTolerance * sigma_max * sigma_max) {}

absl::StatusOr<GaussianWorldState> GaussianWorldState::Create(
    double sigma_max, std::uint64_t rng_seed) {
  if (!(sigma_max > 0.0) || !std::isfinite(sigma_max)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma_max must be positive and finite, got ", sigma_max));
  }
  return GaussianWorldState(sigma_max, rng_seed);
}

double GaussianWorldState::Cov(int i, int j) const {
  return cov_packed_[PackedIndex(i, j)];
}

Eigen::MatrixXd GaussianWorldState::Covariance() const {
  const int n = dimension();
  Eigen::MatrixXd cov(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cov(i, j) = Cov(i, j);
  }
  return cov;
}

absl::Status GaussianWorldState::Check(const QuerySpec& q) const {
  const double s2 = sigma_max_ * sigma_max_;
  if (static_cast<int>(q.cov_with_history.size()) != dimension()) {
    return absl::InvalidArgumentError(
        absl::StrCat("query covariance has length ", q.cov_with_history.size(),
                     ", expected ", dimension()));
  }
  if (!std::isfinite(q.mean) || !(q.variance >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("query needs a finite mean and nonnegative variance, got ",
                     q.mean, " and ", q.variance));
  }
  if (q.variance > s2 * (1.0 + kPsdTolerance)) {
    return absl::InvalidArgumentError(
        absl::StrCat("query variance ", q.variance, " exceeds sigma_max^2 = ",
                     s2));
  }
  for (double c : q.cov_with_history) {
    if (!std::isfinite(c)) {
      return absl::InvalidArgumentError("query covariance is not finite");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ConditionalLaw> GaussianWorldState::Condition(
    const QuerySpec& q, std::vector<double>* solved,
    std::vector<double>* implied) const {
  if (absl::Status s = Check(q); !s.ok()) return s;
  *solved = chol_.ForwardSolve(q.cov_with_history);
  const double s2 = sigma_max_ * sigma_max_;
  const double tol = kPsdTolerance * s2;
  implied->assign(q.cov_with_history.begin(), q.cov_with_history.end());
  // A dependent row j has Schur complement at most tol, so any PSD extension
  // keeps |v_j - (L l)_j| <= sqrt(tol * variance).
  const double range_tol = std::sqrt(tol * std::max(q.variance, tol)) + tol;
  for (int j = 0; j < dimension(); ++j) {
    if (!chol_.Degenerate(j)) continue;
    double value = 0.0;
    for (int i = 0; i < j; ++i) value += chol_.At(j, i) * (*solved)[i];
    const double gap = std::abs(q.cov_with_history[j] - value);
    if (gap > range_tol) {
      return absl::FailedPreconditionError(absl::StrCat(
          "rejected query: covariance is not positive semidefinite (entry ",
          j + 1, " is off the range of the history covariance by ", gap, ")"));
    }
    (*implied)[j] = value;
  }
  const double residual = q.variance - Dot(*solved, *solved);
  if (residual < -tol) {
    return absl::FailedPreconditionError(absl::StrCat(
        "rejected query: covariance is not positive semidefinite (v^T S^-1 v ",
        "exceeds the variance by ", -residual, ")"));
  }
  return ConditionalLaw{q.mean + Dot(*solved, whitened_),
                        residual <= tol ? 0.0 : residual};
}

absl::StatusOr<ConditionalLaw> GaussianWorldState::ConditionalLawOf(
    const QuerySpec& q) const {
  std::vector<double> solved;
  std::vector<double> implied;
  return Condition(q, &solved, &implied);
}

QuerySpec GaussianWorldState::StoredQuery(int i) const {
  const std::size_t row = static_cast<std::size_t>(i) * (i + 1) / 2;
  QuerySpec q;
  q.mean = means_[i];
  q.variance = cov_packed_[row + i];
  q.cov_with_history.assign(cov_packed_.begin() + row,
                            cov_packed_.begin() + row + i);
  return q;
}

absl::Status GaussianWorldState::Extend(const QuerySpec& q) {
  std::vector<double> solved;
  std::vector<double> implied;
  absl::StatusOr<ConditionalLaw> law = Condition(q, &solved, &implied);
  if (!law.ok()) return law.status();
  const int n = dimension();
  CounterRng rng(rng_seed_, static_cast<std::uint64_t>(n), DrawPurpose::kWorld);
  const double value =
      law->variance > 0.0
          ? law->mean + std::sqrt(law->variance) * StandardNormal(rng)
          : law->mean;

  chol_.AppendSolved(solved, q.variance);
  whitened_.push_back(chol_.Degenerate(n)
                          ? 0.0
                          : (value - law->mean) / chol_.Pivot(n));
  cov_packed_.insert(cov_packed_.end(), implied.begin(), implied.end());
  cov_packed_.push_back(q.variance);
  means_.push_back(q.mean);
  realized_.push_back(value);
  return absl::OkStatus();
}

absl::StatusOr<GaussianWorldState> ExtendWorld(GaussianWorldState state,
                                               const QuerySpec& q) {
  if (absl::Status s = state.Extend(q); !s.ok()) return s;
  return state;
}

}  // namespace adalab::world
