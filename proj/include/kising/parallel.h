// Copyright 2026 The kicked-ising Authors
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

#ifndef KISING_PARALLEL_H
#define KISING_PARALLEL_H

#include <cstdint>
#include <functional>

namespace kising {

/// Worker count from KISING_THREADS, defaulting to the hardware concurrency.
int thread_count();

/// Calls body(i) for i in [0, count) split into contiguous chunks across
/// thread_count() workers. Each index is visited exactly once; the first
/// exception thrown by any worker is rethrown after all workers finish.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)> &body);

}  // namespace kising

#endif
