// Copyright 2026 The qspect authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qspect/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace qspect {

namespace {
std::atomic<unsigned> g_workers{0};
} // namespace

unsigned worker_count() noexcept {
    unsigned w = g_workers.load();
    if (w == 0) {
        w = std::thread::hardware_concurrency();
    }
    return w == 0 ? 1 : w;
}

void set_worker_count(unsigned workers) noexcept { g_workers.store(workers); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn) {
    const unsigned workers = worker_count();
    if (n == 0) {
        return;
    }
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }

    // Dynamic index dispatch; safe because every index owns its output slot.
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex_t *unused = nullptr;
    (void)unused;

    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned spawn =
        static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) {
        pool.emplace_back(body);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace qspect
