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

#include "adalab/mechanisms/noise_spec.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "adalab/common/counter_rng.h"
#include "adalab/common/normal.h"

namespace adalab::mechanisms {

absl::string_view NoiseFamilyName(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::kGaussian:
      return "gaussian";
    case NoiseFamily::kUniform:
      return "uniform";
    case NoiseFamily::kPointMass:
      return "point_mass";
    case NoiseFamily::kTabulated:
      return "tabulated";
  }
  return "unknown";
}

absl::StatusOr<NoiseFamily> ParseNoiseFamily(absl::string_view name) {
  for (NoiseFamily f : {NoiseFamily::kGaussian, NoiseFamily::kUniform,
                        NoiseFamily::kPointMass, NoiseFamily::kTabulated}) {
    if (NoiseFamilyName(f) == name) return f;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown noise family '", name,
      "' (expected gaussian, uniform, point_mass or tabulated)"));
}

NoiseSpec NoiseSpec::Gaussian(double mean, double sd) {
  return {NoiseFamily::kGaussian, mean, sd, nullptr};
}

NoiseSpec NoiseSpec::Uniform(double mean, double sd) {
  return {NoiseFamily::kUniform, mean, sd, nullptr};
}

NoiseSpec NoiseSpec::PointMass(double at) {
  return {NoiseFamily::kPointMass, at, 0.0, nullptr};
}

NoiseSpec NoiseSpec::Tabulated(double mean, DiscretizedDistribution table) {
  return {NoiseFamily::kTabulated, mean, 0.0,
          std::make_shared<const DiscretizedDistribution>(std::move(table))};
}

absl::Status NoiseSpec::Validate() const {
  if (!std::isfinite(mean)) {
    return absl::InvalidArgumentError("noise mean must be finite");
  }
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise scale must be finite and >= 0, got ", scale));
  }
  if (family == NoiseFamily::kTabulated && table == nullptr) {
    return absl::InvalidArgumentError("tabulated noise needs a table");
  }
  return absl::OkStatus();
}

double NoiseSpec::DeclaredMean() const {
  if (family == NoiseFamily::kTabulated) return mean + table->Mean();
  return mean;
}

double NoiseSpec::DeclaredVariance() const {
  switch (family) {
    case NoiseFamily::kGaussian:
    case NoiseFamily::kUniform:
      return scale * scale;
    case NoiseFamily::kPointMass:
      return 0.0;
    case NoiseFamily::kTabulated:
      return table->Variance();
  }
  return 0.0;
}

double NoiseSpec::Sample(CounterRng& rng) const {
  switch (family) {
    case NoiseFamily::kGaussian:
      return scale > 0.0 ? mean + scale * StandardNormal(rng) : mean;
    case NoiseFamily::kUniform:
      return mean + scale * kSqrt3 * (2.0 * rng.Uniform() - 1.0);
    case NoiseFamily::kPointMass:
      return mean;
    case NoiseFamily::kTabulated:
      return mean + table->point(table->Quantile(rng.Uniform()));
  }
  return mean;
}

bool operator==(const NoiseSpec& a, const NoiseSpec& b) {
  if (a.family != b.family || a.mean != b.mean || a.scale != b.scale) {
    return false;
  }
  if (a.table == b.table) return true;
  if (a.table == nullptr || b.table == nullptr) return false;
  return *a.table == *b.table;
}

}  // namespace adalab::mechanisms
