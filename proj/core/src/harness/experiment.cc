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

#include "adalab/harness/experiment.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace adalab::harness {

absl::string_view ConjunctionName(Conjunction conjunction) {
  switch (conjunction) {
    case Conjunction::kMax:
      return "max";
    case Conjunction::kSum:
      return "sum";
    case Conjunction::kProduct:
      return "product";
  }
  return "unknown";
}

absl::StatusOr<Conjunction> ParseConjunction(absl::string_view name) {
  for (Conjunction c :
       {Conjunction::kMax, Conjunction::kSum, Conjunction::kProduct}) {
    if (ConjunctionName(c) == name) return c;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown conjunction '", name, "' (expected max, sum or product)"));
}

double Combine(Conjunction conjunction, std::span<const double> values) {
  if (values.empty()) return 0.0;
  switch (conjunction) {
    case Conjunction::kMax:
      return *std::max_element(values.begin(), values.end());
    case Conjunction::kSum: {
      double s = 0.0;
      for (double v : values) s += v;
      return s;
    }
    case Conjunction::kProduct: {
      double p = 1.0;
      for (double v : values) p *= v;
      return p;
    }
  }
  return 0.0;
}

absl::Status ExperimentConfig::Validate() const {
  if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError("sigma must be > 0 and finite");
  }
  if (replications < 1) {
    return absl::InvalidArgumentError("replications must be >= 1");
  }
  if (absl::Status s = mechanism.Validate(k); !s.ok()) return s;
  if (absl::Status s = adversary.Validate(k); !s.ok()) return s;
  if (std::abs(adversary.sigma - sigma) > 1e-12 * sigma) {
    return absl::InvalidArgumentError(absl::StrCat(
        "adversary sigma ", adversary.sigma,
        " must equal the world's sigma ", sigma));
  }
  return absl::OkStatus();
}

}  // namespace adalab::harness
