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

#ifndef ADALAB_MECHANISMS_NOISE_SPEC_H_
#define ADALAB_MECHANISMS_NOISE_SPEC_H_

#include <memory>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/common/discretized_distribution.h"

namespace adalab {
class CounterRng;
}  // namespace adalab

namespace adalab::mechanisms {

enum class NoiseFamily { kGaussian, kUniform, kPointMass, kTabulated };

absl::string_view NoiseFamilyName(NoiseFamily family);
absl::StatusOr<NoiseFamily> ParseNoiseFamily(absl::string_view name);

// A declared noise distribution. For kUniform, `scale` is the standard
// deviation w and the support is [mean - sqrt(3) w, mean + sqrt(3) w]. For
// kTabulated, the noise is `mean` plus an atom of `table`.
struct NoiseSpec {
  NoiseFamily family = NoiseFamily::kPointMass;
  double mean = 0.0;
  double scale = 0.0;
  std::shared_ptr<const DiscretizedDistribution> table;

  static NoiseSpec Gaussian(double mean, double sd);
  static NoiseSpec Uniform(double mean, double sd);
  static NoiseSpec PointMass(double at);
  static NoiseSpec Tabulated(double mean, DiscretizedDistribution table);

  absl::Status Validate() const;
  double DeclaredMean() const;
  double DeclaredVariance() const;
  double Sample(CounterRng& rng) const;

  friend bool operator==(const NoiseSpec& a, const NoiseSpec& b);
};

}  // namespace adalab::mechanisms

#endif  // ADALAB_MECHANISMS_NOISE_SPEC_H_
