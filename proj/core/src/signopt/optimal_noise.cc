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

#include "adalab/signopt/optimal_noise.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "Eigen/SparseCore"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/diagnostics.h"
#include "adalab/common/normal.h"
#include "adalab/signopt/operator_a.h"

namespace adalab::signopt {
namespace {

constexpr double kKernelReach = 8.0;

}  // namespace

absl::StatusOr<OptimalNoise> SolveOptimalNoise(double sigma, double w,
                                               const GridConfig& grid) {
  if (!(sigma > 0.0) || !(w >= 0.0) || !std::isfinite(w)) {
    return absl::InvalidArgumentError(
        absl::StrCat("need sigma > 0 and w >= 0, got ", sigma, " and ", w));
  }
  if (grid.n_points < 3 || grid.n_points % 2 == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "n_points must be odd and >= 3, got ", grid.n_points));
  }
  if (grid.output_refinement < 1) {
    return absl::InvalidArgumentError("output_refinement must be >= 1");
  }
  const double half_width = grid.half_width > 0.0
                                ? grid.half_width
                                : std::max(8.0 * sigma, 2.0 * kSqrt3 * w);
  const double required = std::max(6.0 * sigma, 2.0 * kSqrt3 * w);
  if (half_width < required * (1.0 - 1e-12)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "infeasible grid: half width ", half_width,
        " does not cover the required ", required));
  }
  const int half = grid.n_points / 2;
  const double spacing = half_width / half;
  if (spacing > sigma / 4) {
    Warn(absl::StrCat("grid spacing ", spacing,
                      " is coarser than sigma/4; the optimum is poorly "
                      "resolved"));
  }

  std::vector<double> weights(grid.n_points, 0.0);
  if (w == 0.0) {
    weights[half] = 1.0;
    absl::StatusOr<DiscretizedDistribution> p =
        DiscretizedDistribution::FromWeights(-half_width, half_width,
                                             std::move(weights));
    if (!p.ok()) return p.status();
    const double objective = 2.0 * sigma * kSqrtTwoOverPi;
    return OptimalNoise{*std::move(p), objective, 0.5 * objective, 0};
  }

  // Variables: q_0 (mass at 0), q_j (mass at each of +-g_j, j = 1..half),
  // then positive and negative parts of Ap at x_m = m h, m = 1..rows, then
  // the slack of the second-moment row. Ap is odd for symmetric p, so
  // |Ap|_1 = 2 int_0^inf |Ap|.
  const double h = spacing / grid.output_refinement;
  const int rows =
      static_cast<int>(std::ceil((half_width + kKernelReach * sigma) / h));
  const int nq = half + 1;
  const int n = nq + 2 * rows + 1;
  const int m = rows + 2;
  std::vector<Eigen::Triplet<double>> entries;
  const double reach = kKernelReach * sigma;
  for (int j = 0; j < nq; ++j) {
    const double g = j * spacing;
    for (int r = 0; r < rows; ++r) {
      const double x = (r + 1) * h;
      double value = 0.0;
      if (std::abs(g - x) <= reach) value += HalfNormalKernel(g - x, sigma);
      if (j > 0 && g + x <= reach) value += HalfNormalKernel(-g - x, sigma);
      if (value != 0.0) entries.emplace_back(r, j, value);
    }
    entries.emplace_back(rows, j, j == 0 ? 1.0 : 2.0);
    if (j > 0) entries.emplace_back(rows + 1, j, 2.0 * g * g / (w * w));
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < rows; ++r) {
    entries.emplace_back(r, nq + r, -1.0);
    entries.emplace_back(r, nq + rows + r, 1.0);
    const double trapezoid = r == rows - 1 ? 0.5 * h : h;
    c[nq + r] = trapezoid;
    c[nq + rows + r] = trapezoid;
  }
  entries.emplace_back(rows + 1, n - 1, 1.0);
  LinearProgram lp;
  lp.a.resize(m, n);
  lp.a.setFromTriplets(entries.begin(), entries.end());
  lp.b = Eigen::VectorXd::Zero(m);
  lp.b[rows] = 1.0;
  lp.b[rows + 1] = 1.0;
  lp.c = std::move(c);

  absl::StatusOr<LpSolution> solution = SolveLinearProgram(lp, grid.lp);
  if (!solution.ok()) return solution.status();
  for (int j = 0; j < nq; ++j) {
    const double q = std::max(solution->z[j], 0.0);
    weights[half + j] = q;
    weights[half - j] = q;
  }
  absl::StatusOr<DiscretizedDistribution> p =
      DiscretizedDistribution::FromWeights(-half_width, half_width,
                                           std::move(weights));
  if (!p.ok()) return p.status();
  const double margin = solution->primal_objective;
  return OptimalNoise{*std::move(p), 2.0 * margin, margin,
                      solution->iterations};
}

}  // namespace adalab::signopt
