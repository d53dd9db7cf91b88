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

#pragma once

#include <cstddef>
#include <cstdint>

namespace qspect {

/// Process-wide cap on the size of any single matrix allocation, in bytes.
/// Default is 2 GiB; a 2^13-dimensional complex matrix (1 GiB) fits, a
/// 2^14-dimensional one does not.
std::size_t memory_cap() noexcept;
void set_memory_cap(std::size_t bytes) noexcept;

/// Throws CapacityError if `bytes` exceeds the configured cap. `what` names
/// the allocation in the error message.
void check_capacity(std::uint64_t bytes, const char *what);

} // namespace qspect
