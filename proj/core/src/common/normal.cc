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

#include "adalab/common/normal.h"

#include <cmath>
#include <numbers>

#include "adalab/common/counter_rng.h"

namespace adalab {

double StandardNormal(CounterRng& rng) {
  double u, v, s;
  do {
    u = 2.0 * rng.Uniform() - 1.0;
    v = 2.0 * rng.Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

double NormalPdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double LogNormalCdf(double x) {
  if (x > -30.0) return std::log(NormalCdf(x));
  // Asymptotic Mills-ratio expansion for the far lower tail.
  const double z = -x;
  const double z2 = z * z;
  const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
  return -0.5 * z2 - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) +
         std::log(series);
}

}  // namespace adalab
