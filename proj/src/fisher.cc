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

#include "aphase/fisher.h"

#include <cmath>
#include <string>

#include "aphase/errors.h"
#include "aphase/optimize1d.h"

namespace aphase {

namespace {
constexpr double kZeroProbability = 1e-12;
constexpr double kZeroSlope = 1e-4;
}  // namespace

double fisher_information(const HarmonicLikelihood &L, double delta) {
    double f = 0;
    for (size_t x = 0; x < L.num_outcomes(); x++) {
        double p = L.probability(x, delta);
        double dp = L.derivative(x, delta);
        if (p < kZeroProbability) {
            if (std::abs(dp) > kZeroSlope) {
                return kFisherDivergent;
            }
            // P ~ P'' h^2 / 2 and P' ~ P'' h near a zero, so P'^2 / P -> 2 P''.
            f += 2 * std::max(0.0, L.second_derivative(x, delta));
            continue;
        }
        f += dp * dp / p;
    }
    return f;
}

FisherSummary fisher_summary(const HarmonicLikelihood &L, int grid) {
    if (grid < 256) {
        throw ConfigError("Fisher scan needs at least 256 grid points, got " + std::to_string(grid));
    }
    FisherSummary s{-1, 0, 0, {}};
    s.curve.reserve(static_cast<size_t>(grid));
    size_t best = 0;
    for (int k = 0; k < grid; k++) {
        double delta = kTwoPi * k / grid;
        double f = fisher_information(L, delta);
        s.curve.emplace_back(delta, f);
        if (std::isfinite(f) && f > s.max_fisher) {
            s.max_fisher = f;
            best = static_cast<size_t>(k);
        }
    }
    if (s.max_fisher < 0) {
        throw InvariantViolation("Fisher information diverges at every grid point");
    }
    s.argmax_delta = s.curve[best].first;
    double h = kTwoPi / grid;
    auto objective = [&](double d) {
        double f = fisher_information(L, d);
        return std::isfinite(f) ? f : -1.0;
    };
    auto [d, f] = golden_section_maximize(objective, s.argmax_delta - h, s.argmax_delta + h, 60);
    if (f > s.max_fisher) {
        s.max_fisher = f;
        s.argmax_delta = std::fmod(d + kTwoPi, kTwoPi);
    }
    s.fisher_length = s.max_fisher > 0 ? 1 / std::sqrt(s.max_fisher) : kFisherDivergent;
    return s;
}

double cramer_rao_bound(double fisher, int repetitions) {
    if (!(fisher > 0)) {
        throw ConfigError("Cramer-Rao bound needs positive Fisher information");
    }
    if (repetitions < 1) {
        throw ConfigError("Cramer-Rao bound needs at least one repetition");
    }
    return 1 / std::sqrt(repetitions * fisher);
}

}  // namespace aphase
