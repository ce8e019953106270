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

#ifndef ADALAB_COMMON_COUNTER_RNG_H_
#define ADALAB_COMMON_COUNTER_RNG_H_

#include <cstdint>
#include <limits>

namespace adalab {

// Purposes that partition the random streams of one replication. Every
// (seed, replication, round, purpose) tuple addresses its own stream, so the
// order in which replications or rounds are evaluated never changes a draw.
enum class DrawPurpose : std::uint64_t {
  kWorld = 1,
  kNoise = 2,
  kAdversary = 3,
  kData = 4,
};

// Counter-based 64-bit generator: output n is a SplitMix64 finalization of
// key + n * golden_gamma. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream,
             std::uint64_t substream = 0);
  CounterRng(std::uint64_t seed, std::uint64_t stream, DrawPurpose purpose)
      : CounterRng(seed, stream, static_cast<std::uint64_t>(purpose)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix(key_ + kGamma * ++counter_); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static std::uint64_t Mix(std::uint64_t z);

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Seed of replication `replication` of an experiment seeded with `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t replication);

}  // namespace adalab

#endif  // ADALAB_COMMON_COUNTER_RNG_H_
