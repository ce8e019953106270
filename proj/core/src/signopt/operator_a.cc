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

#include "adalab/signopt/operator_a.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/diagnostics.h"
#include "adalab/common/normal.h"
#include "boost/math/quadrature/gauss.hpp"

namespace adalab::signopt {
namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;

// Four-point Lagrange interpolation of grid values at x; zero outside.
double Interpolate(std::span<const double> f, const UniformGrid& grid,
                   double x) {
  const double u = (x - grid.min) / grid.spacing;
  if (u < -1e-12 || u > grid.n - 1 + 1e-12) return 0.0;
  int base = static_cast<int>(std::floor(u)) - 1;
  base = std::clamp(base, 0, std::max(grid.n - 4, 0));
  const int count = std::min(4, grid.n);
  double value = 0.0;
  for (int a = 0; a < count; ++a) {
    double weight = 1.0;
    for (int b = 0; b < count; ++b) {
      if (b != a) weight *= (u - (base + b)) / static_cast<double>(a - b);
    }
    value += weight * f[base + a];
  }
  return value;
}

}  // namespace

double HalfNormalKernel(double u, double sigma) {
  return u * kSqrt2 * kInvSqrtPi / sigma * std::exp(-u * u / (2 * sigma * sigma));
}

double HalfNormalKernelSlope(double u, double sigma) {
  const double z2 = u * u / (sigma * sigma);
  return kSqrt2 * kInvSqrtPi / sigma * (1.0 - z2) * std::exp(-0.5 * z2);
}

absl::StatusOr<std::vector<double>> OperatorAApply(
    std::span<const double> f_grid, const UniformGrid& grid, double sigma,
    const QuadratureOptions& options) {
  if (!(sigma > 0.0)) {
    return absl::InvalidArgumentError("sigma must be positive");
  }
  if (grid.n < 4 || static_cast<int>(f_grid.size()) != grid.n ||
      !(grid.spacing > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need at least 4 grid values matching the grid, got ", f_grid.size()));
  }
  if (options.panels < 1 || !(options.cutoff_sigmas > 0.0)) {
    return absl::InvalidArgumentError("invalid quadrature options");
  }
  if (grid.spacing > sigma / 4) {
    Warn(absl::StrCat("grid spacing ", grid.spacing,
                      " is coarser than sigma/4; A is poorly resolved"));
  }
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double width = options.cutoff_sigmas * sigma / options.panels;
  std::vector<double> nodes;
  std::vector<double> weights;
  for (int panel = 0; panel < options.panels; ++panel) {
    const double mid = (panel + 0.5) * width;
    for (std::size_t i = 0; i < Rule::abscissa().size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        const double t = mid + sign * 0.5 * width * Rule::abscissa()[i];
        nodes.push_back(t);
        weights.push_back(0.5 * width * Rule::weights()[i] *
                          HalfNormalKernel(t, sigma));
      }
    }
  }
  std::vector<double> out(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.point(i);
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      sum += weights[q] * (Interpolate(f_grid, grid, x + nodes[q]) -
                           Interpolate(f_grid, grid, x - nodes[q]));
    }
    out[i] = sum;
  }
  return out;
}

std::vector<int> InteriorIndices(const UniformGrid& grid, double sigma,
                                 const QuadratureOptions& options) {
  std::vector<int> out;
  const double reach = options.cutoff_sigmas * sigma;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.point(i);
    if (x - reach >= grid.min && x + reach <= grid.max()) out.push_back(i);
  }
  return out;
}

}  // namespace adalab::signopt
