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

#ifndef ADALAB_IO_DENSITY_IO_H_
#define ADALAB_IO_DENSITY_IO_H_

#include <filesystem>
#include <string>

#include "absl/status/statusor.h"
#include "adalab/common/discretized_distribution.h"

namespace adalab::io {

// Two whitespace-separated columns per line: grid point and weight.
std::string FormatDensity(const DiscretizedDistribution& p);
absl::StatusOr<DiscretizedDistribution> ParseDensity(const std::string& text);
absl::StatusOr<DiscretizedDistribution> LoadDensity(
    const std::filesystem::path& path);

}  // namespace adalab::io

#endif  // ADALAB_IO_DENSITY_IO_H_
