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

#include "kising/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace kising {

int thread_count() {
    if (const char *env = std::getenv("KISING_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)> &body) {
    if (count <= 0) {
        return;
    }
    const std::int64_t workers = std::min<std::int64_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = count * w / workers;
        const std::int64_t end = count * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::int64_t i = begin; i < end; ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace kising
