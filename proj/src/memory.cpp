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

#include "qspect/memory.hpp"

#include <atomic>
#include <string>

#include "qspect/errors.hpp"

namespace qspect {

namespace {
std::atomic<std::size_t> g_memory_cap{std::size_t{2} << 30};
} // namespace

std::size_t memory_cap() noexcept { return g_memory_cap.load(); }

void set_memory_cap(std::size_t bytes) noexcept { g_memory_cap.store(bytes); }

void check_capacity(std::uint64_t bytes, const char *what) {
    const std::uint64_t cap = g_memory_cap.load();
    if (bytes > cap) {
        throw CapacityError(std::string(what) + ": requested " +
                            std::to_string(bytes) + " bytes exceeds the " +
                            std::to_string(cap) + "-byte memory cap");
    }
}

} // namespace qspect
