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

#ifndef ADALAB_COMMON_DIAGNOSTICS_H_
#define ADALAB_COMMON_DIAGNOSTICS_H_

#include <functional>
#include <string>

#include "absl/strings/string_view.h"

namespace adalab {

// Non-fatal conditions (coarse grids, degenerate bounds) are reported through
// a process-wide sink. The default sink writes to stderr.
using WarningSink = std::function<void(absl::string_view)>;

// Installs `sink` and returns the previous one. Passing nullptr restores the
// stderr sink.
WarningSink SetWarningSink(WarningSink sink);

void Warn(absl::string_view message);

// Captures warnings for the lifetime of the object; used by tests.
class ScopedWarningCapture {
 public:
  ScopedWarningCapture();
  ~ScopedWarningCapture();
  ScopedWarningCapture(const ScopedWarningCapture&) = delete;
  ScopedWarningCapture& operator=(const ScopedWarningCapture&) = delete;

  const std::string& text() const { return text_; }
  int count() const { return count_; }

 private:
  WarningSink previous_;
  std::string text_;
  int count_ = 0;
};

}  // namespace adalab

#endif  // ADALAB_COMMON_DIAGNOSTICS_H_
