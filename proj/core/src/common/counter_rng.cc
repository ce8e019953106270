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

#include "adalab/common/counter_rng.h"

namespace adalab {

std::uint64_t CounterRng::Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t substream) {
  std::uint64_t key = Mix(seed + kGamma);
  key = Mix(key ^ (stream * 0xd1b54a32d192ed03ULL + 1));
  key = Mix(key ^ (substream * 0xaef17502108ef2d9ULL + 2));
  key_ = key;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t replication) {
  return CounterRng::Mix(CounterRng::Mix(seed) ^
                         CounterRng::Mix(replication + 0x632be59bd9b4e019ULL));
}

}  // namespace adalab
