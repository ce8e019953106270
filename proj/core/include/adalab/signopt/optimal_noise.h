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

#ifndef ADALAB_SIGNOPT_OPTIMAL_NOISE_H_
#define ADALAB_SIGNOPT_OPTIMAL_NOISE_H_

#include "absl/status/statusor.h"
#include "adalab/common/discretized_distribution.h"
#include "adalab/signopt/lp_solver.h"

namespace adalab::signopt {

struct GridConfig {
  // Odd, so that 0 is a grid point.
  int n_points = 2001;
  // Half width L of the grid [-L, L]; 0 selects max(8 sigma, 2 sqrt(3) w).
  double half_width = 0.0;
  // Output points per decision-grid spacing when evaluating |Ap|_1.
  int output_refinement = 2;
  LpOptions lp;
};

struct OptimalNoise {
  DiscretizedDistribution p;
  // |Ap|_1 at the optimum; the margin risk is half of it.
  double primal_objective = 0.0;
  double margin = 0.0;
  int iterations = 0;
};

// Minimizes |Ap|_1 over zero-mean distributions p on the grid with second
// moment at most w^2, as a linear program. The problem is symmetric and
// convex, so the search is restricted to symmetric p without loss.
absl::StatusOr<OptimalNoise> SolveOptimalNoise(double sigma, double w,
                                               const GridConfig& grid = {});

}  // namespace adalab::signopt

#endif  // ADALAB_SIGNOPT_OPTIMAL_NOISE_H_
