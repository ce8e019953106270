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

#ifndef ADALAB_COMMON_PARALLEL_H_
#define ADALAB_COMMON_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace adalab {

// Runs task(i) for i in [0, n) on up to `workers` threads. Tasks are claimed
// dynamically, so callers must make each task's output depend only on i.
void ParallelFor(std::int64_t n, int workers,
                 const std::function<void(std::int64_t)>& task);

// Worker count from the ADA_LAB_WORKERS environment variable, else the
// hardware concurrency (at least 1).
int DefaultWorkerCount();

}  // namespace adalab

#endif  // ADALAB_COMMON_PARALLEL_H_
