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

#include "adalab/adversaries/bayes_sign.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/normal.h"
#include "adalab/world/gaussian_world.h"

namespace adalab::adversaries {
namespace {

using mechanisms::NoiseFamily;
using mechanisms::NoiseSpec;

constexpr double kInf = std::numeric_limits<double>::infinity();

// log P(lo < X < hi) for X ~ N(0, sigma^2) and 0 <= lo <= hi.
double LogPositiveMass(double lo, double hi, double sigma) {
  if (!(hi > lo)) return -kInf;
  const double log_lo = LogNormalCdf(-lo / sigma);
  const double log_hi = LogNormalCdf(-hi / sigma);
  return log_lo + std::log1p(-std::exp(log_hi - log_lo));
}

double LogSumExp(const std::vector<double>& terms) {
  if (terms.empty()) return -kInf;
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

double TabulatedLogLr(double d, const DiscretizedDistribution& table,
                      double sigma) {
  std::vector<double> positive;
  std::vector<double> negative;
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (int j = 0; j < table.n_points(); ++j) {
    const double p = table.weights()[j];
    if (p <= 0.0) continue;
    const double x = d - table.point(j);
    const double term = std::log(p) - x * x * inv;
    if (x > 0.0) {
      positive.push_back(term);
    } else if (x < 0.0) {
      negative.push_back(term);
    }
  }
  const double lp = LogSumExp(positive);
  const double ln = LogSumExp(negative);
  if (lp == ln) return 0.0;
  return lp - ln;
}

// Sign of sum_j p_j (d - g_j) exp(-(d - g_j)^2 / (2 sigma^2)), the posterior
// mean of X up to a positive factor, compared in log space.
int TabulatedPosteriorMeanSign(double d, const DiscretizedDistribution& table,
                               double sigma) {
  std::vector<double> positive;
  std::vector<double> negative;
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (int j = 0; j < table.n_points(); ++j) {
    const double p = table.weights()[j];
    if (p <= 0.0) continue;
    const double x = d - table.point(j);
    if (x == 0.0) continue;
    const double term = std::log(p) + std::log(std::abs(x)) - x * x * inv;
    (x > 0.0 ? positive : negative).push_back(term);
  }
  return LogSumExp(positive) >= LogSumExp(negative) ? 1 : -1;
}

}  // namespace

absl::StatusOr<double> SignLogLikelihoodRatio(double a, double mu,
                                              const NoiseSpec& noise,
                                              double sigma) {
  if (!std::isfinite(a) || !std::isfinite(mu)) {
    return absl::InvalidArgumentError(
        absl::StrCat("release and mean must be finite, got ", a, " and ", mu));
  }
  if (!(sigma > 0.0)) {
    return absl::InvalidArgumentError("sigma must be positive");
  }
  if (absl::Status s = noise.Validate(); !s.ok()) return s;
  const double d = a - mu - noise.mean;
  const double w = noise.scale;
  const bool degenerate = noise.family == NoiseFamily::kPointMass ||
                          (noise.family != NoiseFamily::kTabulated && w == 0.0);
  if (degenerate) {
    if (d > 0.0) return kInf;
    if (d < 0.0) return -kInf;
    return 0.0;
  }
  switch (noise.family) {
    case NoiseFamily::kGaussian: {
      const double c = sigma / (w * std::sqrt(sigma * sigma + w * w));
      return LogNormalCdf(c * d) - LogNormalCdf(-c * d);
    }
    case NoiseFamily::kUniform: {
      const double b = kSqrt3 * w;
      const double lp =
          LogPositiveMass(std::max(0.0, d - b), std::max(0.0, d + b), sigma);
      const double ln =
          LogPositiveMass(std::max(0.0, -d - b), std::max(0.0, -d + b), sigma);
      if (lp == ln) return 0.0;
      return lp - ln;
    }
    case NoiseFamily::kTabulated:
      return TabulatedLogLr(d, *noise.table, sigma);
    case NoiseFamily::kPointMass:
      break;
  }
  return 0.0;
}

absl::StatusOr<int> BayesSignClassify(double a, double mu,
                                      const NoiseSpec& noise, double sigma) {
  if (!std::isfinite(a) || !std::isfinite(mu)) {
    return absl::InvalidArgumentError(
        absl::StrCat("release and mean must be finite, got ", a, " and ", mu));
  }
  if (!(sigma > 0.0)) {
    return absl::InvalidArgumentError("sigma must be positive");
  }
  if (absl::Status s = noise.Validate(); !s.ok()) return s;
  const double d = a - mu - noise.mean;
  if (noise.family == NoiseFamily::kTabulated) {
    return TabulatedPosteriorMeanSign(d, *noise.table, sigma);
  }
  return d >= 0.0 ? 1 : -1;
}

absl::StatusOr<SignEstimate> EstimateSigns(world::SharedTranscript transcript,
                                           double sigma) {
  SignEstimate estimate;
  estimate.signs.reserve(transcript.size());
  estimate.per_round_loglr.reserve(transcript.size());
  for (const world::SharedRound& round : transcript) {
    absl::StatusOr<double> llr = SignLogLikelihoodRatio(
        round.release, round.query.mean, round.declared, sigma);
    if (!llr.ok()) return llr.status();
    absl::StatusOr<int> sign = BayesSignClassify(
        round.release, round.query.mean, round.declared, sigma);
    if (!sign.ok()) return sign.status();
    estimate.per_round_loglr.push_back(*llr);
    estimate.signs.push_back(*sign);
  }
  return estimate;
}

absl::StatusOr<world::QuerySpec> SelectBayesFinal(
    world::SharedTranscript transcript, double sigma, double declared_zk_mean) {
  const int m = static_cast<int>(transcript.size());
  if (m < 1) {
    return absl::FailedPreconditionError(
        "the sign adversary needs at least one earlier round");
  }
  const double s2 = sigma * sigma;
  const double tol = world::kPsdTolerance * s2;
  for (int i = 0; i < m; ++i) {
    const world::QuerySpec& q = transcript[i].query;
    bool ok = std::abs(q.variance - s2) <= tol;
    for (double c : q.cov_with_history) ok = ok && std::abs(c) <= tol;
    if (!ok) {
      return absl::FailedPreconditionError(absl::StrCat(
          "assumption violated: round ", i + 1,
          " is not an uncorrelated query with variance sigma^2"));
    }
  }
  absl::StatusOr<SignEstimate> estimate = EstimateSigns(transcript, sigma);
  if (!estimate.ok()) return estimate.status();
  const double direction = declared_zk_mean < 0.0 ? -1.0 : 1.0;
  const double magnitude = direction * s2 / std::sqrt(static_cast<double>(m));
  world::QuerySpec q;
  q.mean = 0.0;
  q.variance = s2;
  q.cov_with_history.reserve(m);
  for (int s : estimate->signs) q.cov_with_history.push_back(magnitude * s);
  return q;
}

}  // namespace adalab::adversaries
