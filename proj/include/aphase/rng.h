// Copyright 2026 The aphase Authors
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

#ifndef APHASE_RNG_H
#define APHASE_RNG_H

#include <cmath>
#include <cstdint>
#include <random>

namespace aphase {

/// SplitMix64 finalizer; used to derive independent stream seeds from a
/// master seed and a counter.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Thin wrapper over mt19937_64 with distribution conversions that do not
/// depend on the standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    /// Standard normal via Box-Muller.
    double normal();

    uint64_t next() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
};

inline double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0) {
        u1 = uniform();
    }
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace aphase

#endif
