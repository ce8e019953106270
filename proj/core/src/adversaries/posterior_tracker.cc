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

#include "adalab/adversaries/posterior_tracker.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/world/gaussian_world.h"

namespace adalab::adversaries {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PosteriorTracker::PosteriorTracker(double sigma)
    : sigma_(sigma),
      chol_(world::kCovarianceJitter * sigma * sigma,
            world::kPsdTolerance * sigma * sigma),
      query_chol_(world::kCovarianceJitter * sigma * sigma,
                  world::kPsdTolerance * sigma * sigma) {}

absl::StatusOr<PosteriorTracker> PosteriorTracker::FromTranscript(
    world::SharedTranscript transcript, double sigma) {
  PosteriorTracker tracker(sigma);
  for (const world::SharedRound& round : transcript) {
    if (absl::StatusOr<double> b = tracker.Append(round); !b.ok()) {
      return b.status();
    }
  }
  return tracker;
}

double PosteriorTracker::ConditionalBias(std::span<const double> v) const {
  return Dot(chol_.ForwardSolve(v), whitened_);
}

std::vector<double> PosteriorTracker::WeightedResidual() const {
  return chol_.BackSolve(whitened_);
}

PosteriorTracker::Choice PosteriorTracker::LeastFavorable() const {
  Choice choice;
  const int n = size();
  choice.v.assign(n, 0.0);
  if (n == 0) return choice;
  const std::vector<double> x = WeightedResidual();
  std::size_t offset = 0;
  for (int i = 0; i < n; ++i, offset += i) {
    const double* row = covariance_.data() + offset;
    for (int j = 0; j < i; ++j) {
      choice.v[i] += row[j] * x[j];
      choice.v[j] += row[j] * x[i];
    }
    choice.v[i] += row[i] * x[i];
  }
  const double norm_sq = Dot(x, choice.v);
  if (!(norm_sq > 0.0)) {
    choice.v.assign(n, 0.0);
    return choice;
  }
  const double norm = std::sqrt(norm_sq);
  for (double& c : choice.v) c *= sigma_ / norm;
  // Rounding leaves v slightly outside the range of a near-singular Sigma,
  // which the pseudo-inverse amplifies. Rescale until v^T Sigma^+ v matches
  // sigma^2 under the same factorization the world checks against.
  for (int pass = 0; pass < 3; ++pass) {
    const std::vector<double> l = query_chol_.ForwardSolve(choice.v);
    const double norm_sq_world = Dot(l, l);
    if (!(norm_sq_world > 0.0)) break;
    const double scale = sigma_ / std::sqrt(norm_sq_world);
    if (std::abs(scale - 1.0) < 1e-14) break;
    for (double& c : choice.v) c *= scale;
  }
  choice.bias = ConditionalBias(choice.v);
  return choice;
}

absl::StatusOr<double> PosteriorTracker::Append(
    const world::SharedRound& round) {
  const world::QuerySpec& q = round.query;
  if (static_cast<int>(q.cov_with_history.size()) != size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("round ", size() + 1, " query covariance has length ",
                     q.cov_with_history.size()));
  }
  const double w2 = round.declared.DeclaredVariance();
  const std::vector<double> solved = chol_.ForwardSolve(q.cov_with_history);
  const double bias = Dot(solved, whitened_);
  const double r = round.release - q.mean - round.declared.DeclaredMean();
  chol_.AppendSolved(solved, q.variance + w2);
  whitened_.push_back(chol_.Degenerate(size())
                          ? 0.0
                          : (r - bias) / chol_.Pivot(size()));
  residual_.push_back(r);
  covariance_.insert(covariance_.end(), q.cov_with_history.begin(),
                     q.cov_with_history.end());
  covariance_.push_back(q.variance);
  query_chol_.Append(q.cov_with_history, q.variance);
  return bias;
}

}  // namespace adalab::adversaries
