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
#include <exception>
#include <functional>

namespace qspect {

/// Number of workers used by parallel_for. 0 selects
/// std::thread::hardware_concurrency(). Results are required to be
/// byte-identical for every setting; only wall time may change.
unsigned worker_count() noexcept;
void set_worker_count(unsigned workers) noexcept;

/// Runs fn(i) for i in [0, n). Each index is processed exactly once by one
/// worker; fn must write only to index-owned slots so the aggregate result
/// is independent of scheduling. Exceptions are captured and rethrown on the
/// calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace qspect
