// Copyright 2026 The qpsurf Authors
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

#ifndef QPSURF_RNG_H
#define QPSURF_RNG_H

#include <cstdint>
#include <random>

namespace qpsurf {

/// splitmix64 finalizer. Used to derive independent per-sample seeds.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Random source owned by one worker for one sample.
///
/// The stream is a pure function of (master seed, stream index), so a sample
/// reproduces identically no matter which worker runs it.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed) : engine_(mix64(seed)) {
    }
    Rng(uint64_t master_seed, uint64_t stream) : engine_(mix64(mix64(master_seed) ^ mix64(~stream))) {
    }

    static constexpr result_type min() {
        return std::mt19937_64::min();
    }
    static constexpr result_type max() {
        return std::mt19937_64::max();
    }
    result_type operator()() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qpsurf

#endif
