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

#include "adalab/signopt/margin.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/normal.h"
#include "adalab/signopt/operator_a.h"

namespace adalab::signopt {
namespace {

// Half-width of the kernel support, in units of sigma.
constexpr double kKernelReach = 8.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Cubic on [0, 1] with end values f0, f1 and end derivatives d0, d1.
struct HermiteCubic {
  double f0, f1, d0, d1;

  double operator()(double s) const {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * f0 + (s3 - 2 * s2 + s) * d0 +
           (-2 * s3 + 3 * s2) * f1 + (s3 - s2) * d1;
  }

  // Integral over [0, t].
  double Integral(double t) const {
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double t4 = t3 * t;
    return (t4 / 2 - t3 + t) * f0 + (t4 / 4 - 2 * t3 / 3 + t2 / 2) * d0 +
           (-t4 / 2 + t3) * f1 + (t4 / 4 - t3 / 3) * d1;
  }

  // A root in (0, 1), assuming f0 and f1 differ in sign.
  double Root() const {
    double a = 0.0;
    double b = 1.0;
    const bool negative_left = f0 < 0.0;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (a + b);
      if (((*this)(mid) < 0.0) == negative_left) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  }
};

}  // namespace

absl::StatusOr<double> MarginRisk(const DiscretizedDistribution& p,
                                  double sigma) {
  if (!(sigma > 0.0)) {
    return absl::InvalidArgumentError("sigma must be positive");
  }
  const double extent =
      std::max(std::abs(p.grid_min()), std::abs(p.grid_max()));
  const double mean = p.Mean();
  if (std::abs(mean) > 1e-9 * std::max(extent, sigma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise distribution must have zero mean, got ", mean));
  }
  const double reach = kKernelReach * sigma;
  const double h = std::min(p.spacing() / 2.0, sigma / 16.0);
  const double lo = p.grid_min() - reach;
  const int n_out =
      static_cast<int>(std::ceil((p.grid_max() + reach - lo) / h)) + 1;
  std::vector<int> atoms;
  for (int j = 0; j < p.n_points(); ++j) {
    if (p.weights()[j] > 0.0) atoms.push_back(j);
  }
  std::vector<double> values(n_out);
  std::vector<double> slopes(n_out);
  for (int m = 0; m < n_out; ++m) {
    const double x = lo + m * h;
    const int first = static_cast<int>(
        std::ceil((x - reach - p.grid_min()) / p.spacing()));
    const int last = static_cast<int>(
        std::floor((x + reach - p.grid_min()) / p.spacing()));
    double value = 0.0;
    double slope = 0.0;
    for (int j = std::max(first, 0); j <= std::min(last, p.n_points() - 1);
         ++j) {
      const double w = p.weights()[j];
      if (w > 0.0) {
        const double u = p.point(j) - x;
        value += w * HalfNormalKernel(u, sigma);
        slope -= w * HalfNormalKernelSlope(u, sigma);
      }
    }
    values[m] = value;
    slopes[m] = slope;
  }
  // Integrates |Ap| over each interval with the cubic Hermite interpolant,
  // splitting at its root where the endpoint values differ in sign.
  double integral = 0.0;
  for (int m = 0; m + 1 < n_out; ++m) {
    const HermiteCubic cubic{values[m], values[m + 1], h * slopes[m],
                             h * slopes[m + 1]};
    if ((cubic.f0 < 0.0) != (cubic.f1 < 0.0) && cubic.f0 != 0.0 &&
        cubic.f1 != 0.0) {
      const double root = cubic.Root();
      const double left = cubic.Integral(root);
      integral += h * (std::abs(left) + std::abs(cubic.Integral(1.0) - left));
    } else {
      integral += h * std::abs(cubic.Integral(1.0));
    }
  }
  return 0.5 * integral;
}

double MarginLowerBound(double sigma, double w) {
  if (w * w < sigma * sigma) return sigma / (2.0 * kSqrt3);
  const double s2 = sigma * sigma;
  return s2 / (kSqrt3 * w) - s2 * s2 / (2.0 * kSqrt3 * w * w * w);
}

absl::StatusOr<DiscretizedDistribution> Discretize(
    const mechanisms::NoiseSpec& noise, int n_points, double half_width) {
  if (n_points < 3 || n_points % 2 == 0 || !(half_width > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need an odd number of points >= 3 and a positive half width, got ",
        n_points, " and ", half_width));
  }
  if (noise.mean != 0.0) {
    return absl::InvalidArgumentError("only zero-mean noise is discretized");
  }
  const double h = 2.0 * half_width / (n_points - 1);
  std::vector<double> weights(n_points, 0.0);
  const int center = n_points / 2;
  // Mass of [a, b] under the noise law.
  auto mass = [&](double a, double b) -> double {
    switch (noise.family) {
      case mechanisms::NoiseFamily::kGaussian:
        return NormalCdf(b / noise.scale) - NormalCdf(a / noise.scale);
      case mechanisms::NoiseFamily::kUniform: {
        const double edge = kSqrt3 * noise.scale;
        return std::max(0.0, std::min(b, edge) - std::max(a, -edge)) /
               (2.0 * edge);
      }
      default:
        return 0.0;
    }
  };
  const bool atom = noise.family == mechanisms::NoiseFamily::kPointMass ||
                    (noise.family != mechanisms::NoiseFamily::kTabulated &&
                     noise.scale == 0.0);
  if (atom) {
    weights[center] = 1.0;
  } else if (noise.family == mechanisms::NoiseFamily::kTabulated) {
    return absl::InvalidArgumentError("tabulated noise is already discrete");
  } else {
    for (int i = 0; i < n_points; ++i) {
      const double x = (i - center) * h;
      const double a = i == 0 ? -kInf : x - 0.5 * h;
      const double b = i == n_points - 1 ? kInf : x + 0.5 * h;
      weights[i] = mass(a, b);
    }
    // Symmetrize so the mean is zero to rounding.
    for (int i = 0; i < center; ++i) {
      const double avg = 0.5 * (weights[i] + weights[n_points - 1 - i]);
      weights[i] = weights[n_points - 1 - i] = avg;
    }
  }
  return DiscretizedDistribution::FromWeights(-half_width, half_width,
                                              std::move(weights));
}

}  // namespace adalab::signopt
