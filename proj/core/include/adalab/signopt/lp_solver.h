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

#ifndef ADALAB_SIGNOPT_LP_SOLVER_H_
#define ADALAB_SIGNOPT_LP_SOLVER_H_

#include "Eigen/Core"
#include "Eigen/SparseCore"
#include "absl/status/statusor.h"

namespace adalab::signopt {

// minimize c^T z subject to a z = b, z >= 0.
struct LinearProgram {
  Eigen::SparseMatrix<double> a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpOptions {
  double tolerance = 1e-7;
  // When progress stalls for `stall_iterations`, the best iterate is
  // returned if its error is below this level.
  double acceptable_tolerance = 1e-6;
  int stall_iterations = 10;
  int max_iterations = 200;
};

struct LpSolution {
  Eigen::VectorXd z;
  // Equality multipliers and reduced costs: a^T y + s = c.
  Eigen::VectorXd y;
  Eigen::VectorXd s;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  int iterations = 0;
};

// Mehrotra predictor-corrector interior point method on the normal
// equations. Columns with a single nonzero enter the normal matrix as a
// diagonal update, so problems with many slack columns stay cheap.
absl::StatusOr<LpSolution> SolveLinearProgram(const LinearProgram& lp,
                                              const LpOptions& options = {});

}  // namespace adalab::signopt

#endif  // ADALAB_SIGNOPT_LP_SOLVER_H_
