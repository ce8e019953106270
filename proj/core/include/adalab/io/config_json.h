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

#ifndef ADALAB_IO_CONFIG_JSON_H_
#define ADALAB_IO_CONFIG_JSON_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "adalab/harness/experiment.h"

namespace adalab::io {

// Parses one experiment (a JSON object) or a sweep (a JSON array of them).
// Unknown keys are rejected. Relative table paths resolve against base_dir.
absl::StatusOr<std::vector<harness::ExperimentConfig>> ParseConfigText(
    absl::string_view text, const std::filesystem::path& base_dir = {});
absl::StatusOr<std::vector<harness::ExperimentConfig>> ParseConfigFile(
    const std::filesystem::path& path);

// Emits a config with every field explicit, so parsing it back reproduces
// the same config.
std::string EmitConfig(const harness::ExperimentConfig& config);
std::string EmitConfigs(const std::vector<harness::ExperimentConfig>& configs);

// Input of the noise optimization command.
struct NoiseOptConfig {
  double sigma = 1.0;
  std::vector<double> w_values;
  int n_points = 2001;
};

absl::StatusOr<NoiseOptConfig> ParseNoiseOptText(absl::string_view text);
absl::StatusOr<NoiseOptConfig> ParseNoiseOptFile(
    const std::filesystem::path& path);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

}  // namespace adalab::io

#endif  // ADALAB_IO_CONFIG_JSON_H_
