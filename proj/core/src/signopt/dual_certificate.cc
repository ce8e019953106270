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

#include "adalab/signopt/dual_certificate.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/common/normal.h"

namespace adalab::signopt {

absl::StatusOr<DualCertificate> DualCertificateFor(double sigma, double w) {
  if (!(sigma > 0.0) || !(w >= sigma)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "the certificate needs w >= sigma > 0, got sigma = ", sigma,
        ", w = ", w));
  }
  const double s2 = sigma * sigma;
  const double w3 = w * w * w;
  DualCertificate cert;
  cert.u1 = s2 / (kSqrt3 * w3);
  cert.v2 = 0.0;
  cert.v1 = kSqrt3 * s2 / w - s2 * s2 / (kSqrt3 * w3);
  cert.objective_bound = -cert.u1 * w * w + cert.v1;
  return cert;
}

}  // namespace adalab::signopt
