// Copyright 2026 The aevqc Authors

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

#include <cstdint>
#include <random>
#include <string_view>

namespace aevqc {

/**
 * @brief Seeded random stream used everywhere randomness is needed.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard,
 * and derives uniform/normal/integer draws from it by hand so results do
 * not depend on the standard library's distribution implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent sub-stream keyed by name, e.g. `Rng::stream(seed, "init")`.
    static Rng stream(std::uint64_t seed, std::string_view name);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; caches the second variate.
    double normal();

    /// Uniform integer in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// SplitMix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x);

} // namespace aevqc
