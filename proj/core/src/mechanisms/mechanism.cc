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

#include "adalab/mechanisms/mechanism.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "adalab/common/counter_rng.h"

namespace adalab::mechanisms {

absl::string_view MechanismKindName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kGaussianSchedule:
      return "gaussian_schedule";
    case MechanismKind::kZeroNoise:
      return "zero_noise";
    case MechanismKind::kUniformSchedule:
      return "uniform_schedule";
    case MechanismKind::kCustom:
      return "custom";
  }
  return "unknown";
}

absl::StatusOr<MechanismKind> ParseMechanismKind(absl::string_view name) {
  for (MechanismKind k :
       {MechanismKind::kGaussianSchedule, MechanismKind::kZeroNoise,
        MechanismKind::kUniformSchedule, MechanismKind::kCustom}) {
    if (MechanismKindName(k) == name) return k;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown mechanism kind '", name,
      "' (expected gaussian_schedule, zero_noise, uniform_schedule or "
      "custom)"));
}

absl::Status MechanismConfig::Validate(int k) const {
  if (static_cast<int>(w_schedule.size()) != k) {
    return absl::InvalidArgumentError(
        absl::StrCat("w_schedule has length ", w_schedule.size(),
                     ", expected k = ", k));
  }
  for (double w : w_schedule) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      return absl::InvalidArgumentError(
          absl::StrCat("w_schedule entries must be finite and >= 0, got ", w));
    }
  }
  if (kind == MechanismKind::kCustom && table == nullptr) {
    return absl::InvalidArgumentError("custom mechanism needs a noise table");
  }
  return absl::OkStatus();
}

bool operator==(const MechanismConfig& a, const MechanismConfig& b) {
  if (a.kind != b.kind || a.w_schedule != b.w_schedule ||
      a.table_path != b.table_path) {
    return false;
  }
  if (a.table == b.table) return true;
  if (a.table == nullptr || b.table == nullptr) return false;
  return *a.table == *b.table;
}

absl::StatusOr<MechanismConfig> DefaultSchedule(int k, double sigma) {
  return ConstantSchedule(MechanismKind::kGaussianSchedule, k,
                          std::pow(k - 1.0, 0.25) * sigma, 0.0);
}

absl::StatusOr<MechanismConfig> ConstantSchedule(MechanismKind kind, int k,
                                                 double w, double final_w) {
  if (k < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be >= 1, got ", k));
  }
  if (!(w >= 0.0) || !(final_w >= 0.0) || !std::isfinite(w) ||
      !std::isfinite(final_w)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "noise scales must be finite and >= 0, got ", w, " and ", final_w));
  }
  MechanismConfig config;
  config.kind = kind;
  config.w_schedule.assign(k, kind == MechanismKind::kZeroNoise ? 0.0 : w);
  config.w_schedule.back() =
      kind == MechanismKind::kZeroNoise ? 0.0 : final_w;
  return config;
}

NoiseSpec DeclareNoise(const MechanismConfig& config, int round) {
  const double w = config.w_schedule[round - 1];
  switch (config.kind) {
    case MechanismKind::kGaussianSchedule:
      return w > 0.0 ? NoiseSpec::Gaussian(0.0, w) : NoiseSpec::PointMass(0.0);
    case MechanismKind::kUniformSchedule:
      return w > 0.0 ? NoiseSpec::Uniform(0.0, w) : NoiseSpec::PointMass(0.0);
    case MechanismKind::kZeroNoise:
      return NoiseSpec::PointMass(0.0);
    case MechanismKind::kCustom:
      if (w > 0.0) return {NoiseFamily::kTabulated, 0.0, 0.0, config.table};
      return NoiseSpec::PointMass(0.0);
  }
  return NoiseSpec::PointMass(0.0);
}

absl::StatusOr<NoisePolicy> MakeNoisePolicy(const MechanismConfig& config,
                                            int k) {
  if (absl::Status s = config.Validate(k); !s.ok()) return s;
  return NoisePolicy([config](int round, const world::GameHistory&) {
    return DeclareNoise(config, round);
  });
}

Released Release(double phi, const NoiseSpec& noise, CounterRng& rng) {
  const double z = noise.Sample(rng);
  return {phi + z, z};
}

}  // namespace adalab::mechanisms
