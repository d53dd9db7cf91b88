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

#include <stdexcept>
#include <string>

namespace qspect {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Requested allocation would exceed the configured memory cap.
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string &msg) : Error(msg) {}
};

/// Input violates a documented precondition (dimensions, ranges, state
/// validity).
class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string &msg) : Error(msg) {}
};

/// Iterative procedure failed to reach its target within the iteration cap.
class ConvergenceError : public Error {
  public:
    explicit ConvergenceError(const std::string &msg) : Error(msg) {}
};

} // namespace qspect
