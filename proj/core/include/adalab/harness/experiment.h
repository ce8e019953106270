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

#ifndef ADALAB_HARNESS_EXPERIMENT_H_
#define ADALAB_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <span>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/adversaries/adversary.h"
#include "adalab/mechanisms/mechanism.h"

namespace adalab::harness {

// How per-round expected losses combine into one risk.
enum class Conjunction { kMax, kSum, kProduct };

absl::string_view ConjunctionName(Conjunction conjunction);
absl::StatusOr<Conjunction> ParseConjunction(absl::string_view name);
double Combine(Conjunction conjunction, std::span<const double> values);

struct ExperimentConfig {
  int k = 1;
  double sigma = 1.0;
  mechanisms::MechanismConfig mechanism;
  adversaries::AdversaryConfig adversary;
  std::int64_t replications = 100000;
  std::uint64_t seed = 0;
  Conjunction conjunction = Conjunction::kMax;

  absl::Status Validate() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

}  // namespace adalab::harness

#endif  // ADALAB_HARNESS_EXPERIMENT_H_
