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

#include <cmath>
#include <cstdint>

namespace qspect {

// Experiment outputs must be byte-identical across platforms and worker
// counts, so randomness never goes through std::random distributions
// (their output is implementation defined). Everything below is fixed
// bit-for-bit: a splitmix64 mixer used for seeding and substream
// derivation, and a xoshiro256** generator for the streams themselves.

inline std::uint64_t splitmix64_next(std::uint64_t &state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto &word : s_) {
            word = splitmix64_next(sm);
        }
    }

    /// Independent substream for (seed, index) pairs; used for per-shot and
    /// per-instance streams so that work can be distributed over workers
    /// without changing results.
    static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64_next(sm);
        sm = index ^ 0x5851f42d4c957f2dULL;
        std::uint64_t b = splitmix64_next(sm);
        return Rng(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) noexcept {
        // 64-bit multiply-shift; the modulo bias is < 2^-64 relative and
        // irrelevant next to statistical tolerances used downstream.
        unsigned __int128 wide =
            static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    /// Standard normal via Box-Muller; consumes two uniforms per pair and
    /// caches the second value.
    double next_gaussian() noexcept {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        while (u1 <= 0.0) {
            u1 = next_unit();
        }
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace qspect
