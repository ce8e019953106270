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

#ifndef ADALAB_COMMON_NORMAL_H_
#define ADALAB_COMMON_NORMAL_H_

namespace adalab {

class CounterRng;

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt3 = 1.73205080756887729353;
inline constexpr double kSqrtTwoOverPi = 0.79788456080286535588;

// Standard normal draw (polar method, no cached second variate so a stream's
// k-th draw depends only on its first k uses).
double StandardNormal(CounterRng& rng);

// Standard normal density and distribution functions.
double NormalPdf(double x);
double NormalCdf(double x);
// log Phi(x), accurate far into the lower tail.
double LogNormalCdf(double x);

}  // namespace adalab

#endif  // ADALAB_COMMON_NORMAL_H_
