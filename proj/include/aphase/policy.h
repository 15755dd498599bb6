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

#ifndef APHASE_POLICY_H
#define APHASE_POLICY_H

#include <cstdint>

#include "aphase/likelihood.h"
#include "aphase/posterior.h"
#include "aphase/rng.h"

namespace aphase {

enum class PolicyObjective {
    /// Maximize sum_x |u_x(theta)|, u_x the unnormalized posterior a_1.
    ExpectedSharpness,
    /// Minimize sum_x P(x) V_H(posterior_x), skipping branches with vanishing a_1.
    ExpectedHolevoVariance,
};

struct PolicyConfig {
    int grid_points = 1024;
    int refine_iterations = 40;
    uint64_t rng_seed = 0;
    PolicyObjective objective = PolicyObjective::ExpectedSharpness;

    void validate() const;
};

/// Expected posterior sharpness after one detection at feedback phase theta.
double expected_sharpness(const PhasePosterior &p, const HarmonicLikelihood &L, double theta);

/// Expected posterior Holevo variance after one detection at theta.
double expected_holevo_variance(const PhasePosterior &p, const HarmonicLikelihood &L, double theta);

/// Feedback phase optimizing the configured objective: dense grid scan, then
/// golden-section refinement around the best grid point. Grid points within
/// 1e-12 of the best are tied and one is drawn from `rng`; a flat objective
/// yields a uniformly random theta.
double adaptive_theta(const PhasePosterior &p, const HarmonicLikelihood &L, const PolicyConfig &cfg, Rng &rng);
/// As above with a generator seeded from cfg.rng_seed.
double adaptive_theta(const PhasePosterior &p, const HarmonicLikelihood &L, const PolicyConfig &cfg);

/// theta0 + index * pi / N, wrapped to [0, 2 pi).
double nonadaptive_theta(int total_resources, int index, double theta0);

}  // namespace aphase

#endif
