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

#ifndef ADALAB_SIGNOPT_OPERATOR_A_H_
#define ADALAB_SIGNOPT_OPERATOR_A_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace adalab::signopt {

// Points min + i * spacing for i = 0..n-1.
struct UniformGrid {
  double min = 0.0;
  double spacing = 1.0;
  int n = 0;

  double point(int i) const { return min + i * spacing; }
  double max() const { return point(n - 1); }
};

struct QuadratureOptions {
  // Gauss-Legendre panels over [0, cutoff_sigmas * sigma].
  int panels = 32;
  double cutoff_sigmas = 8.0;
};

// The half-normal kernel of A applied to a point mass: for an atom at g,
// (A delta_g)(x) = h(g - x) with h(u) = u sqrt(2) / (sigma sqrt(pi))
// exp(-u^2 / (2 sigma^2)).
double HalfNormalKernel(double u, double sigma);

// d/du of HalfNormalKernel.
double HalfNormalKernelSlope(double u, double sigma);

// (Af)(x) = int_0^inf t [f(x + t) - f(x - t)] sqrt(2)/(sigma sqrt(pi))
// exp(-t^2/(2 sigma^2)) dt at every grid point, with f interpolated by
// local cubics between grid values and taken as 0 outside the grid.
// Warns when the spacing exceeds sigma / 4.
absl::StatusOr<std::vector<double>> OperatorAApply(
    std::span<const double> f_grid, const UniformGrid& grid, double sigma,
    const QuadratureOptions& options = {});

// Indices of grid points whose quadrature window stays inside the grid.
std::vector<int> InteriorIndices(const UniformGrid& grid, double sigma,
                                 const QuadratureOptions& options = {});

}  // namespace adalab::signopt

#endif  // ADALAB_SIGNOPT_OPERATOR_A_H_
