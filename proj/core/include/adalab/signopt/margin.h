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

#ifndef ADALAB_SIGNOPT_MARGIN_H_
#define ADALAB_SIGNOPT_MARGIN_H_

#include "absl/status/statusor.h"
#include "adalab/common/discretized_distribution.h"
#include "adalab/mechanisms/noise_spec.h"

namespace adalab::signopt {

// E[s X] for X ~ N(0, sigma^2), noise Z ~ p with p a zero-mean distribution
// of atoms, and s the Bayes estimate of sign(X) from X + Z. Evaluated as
// 0.5 |Ap|_1 by trapezoid quadrature on a grid finer than the atoms.
absl::StatusOr<double> MarginRisk(const DiscretizedDistribution& p,
                                  double sigma);

// sigma^2/(sqrt(3) w) - sigma^4/(2 sqrt(3) w^3) for w >= sigma and
// sigma/(2 sqrt(3)) below.
double MarginLowerBound(double sigma, double w);

// Cell masses of a zero-mean gaussian, uniform or point-mass noise on the
// symmetric grid of n_points over [-half_width, half_width].
absl::StatusOr<DiscretizedDistribution> Discretize(
    const mechanisms::NoiseSpec& noise, int n_points, double half_width);

}  // namespace adalab::signopt

#endif  // ADALAB_SIGNOPT_MARGIN_H_
