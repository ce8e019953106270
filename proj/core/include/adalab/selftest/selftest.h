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

#ifndef ADALAB_SELFTEST_SELFTEST_H_
#define ADALAB_SELFTEST_SELFTEST_H_

#include <string>
#include <vector>

#include "adalab/signopt/operator_a.h"

namespace adalab::selftest {

struct SelftestOptions {
  signopt::QuadratureOptions quadrature;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  // One "PASS name: detail" or "FAIL name: detail" line per check.
  std::string Format() const;
};

// The fast invariant suite: operator identities, the recursion oracle,
// bound arithmetic, the dual certificate, and replay determinism. Fixed
// seeds make the report identical across runs.
SelftestReport RunSelftest(const SelftestOptions& options = {});

}  // namespace adalab::selftest

#endif  // ADALAB_SELFTEST_SELFTEST_H_
