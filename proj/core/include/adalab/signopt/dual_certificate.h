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

#ifndef ADALAB_SIGNOPT_DUAL_CERTIFICATE_H_
#define ADALAB_SIGNOPT_DUAL_CERTIFICATE_H_

#include "absl/status/statusor.h"

namespace adalab::signopt {

// Feasible multipliers of the dual of min |Ap|_1: u1 for the second-moment
// constraint, v1 for the mass constraint and v2 for the mean constraint.
struct DualCertificate {
  double u1 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  // -u1 w^2 + v1, a lower bound on min |Ap|_1.
  double objective_bound = 0.0;
};

// u1 = sigma^2/(sqrt(3) w^3), v2 = 0, v1 = sqrt(3) sigma^2/w -
// sigma^4/(sqrt(3) w^3). Valid for w >= sigma.
absl::StatusOr<DualCertificate> DualCertificateFor(double sigma, double w);

}  // namespace adalab::signopt

#endif  // ADALAB_SIGNOPT_DUAL_CERTIFICATE_H_
