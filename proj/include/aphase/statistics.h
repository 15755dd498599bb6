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

#ifndef APHASE_STATISTICS_H
#define APHASE_STATISTICS_H

#include <cstdint>
#include <span>
#include <vector>

namespace aphase {

/// Wraps an angle to (-pi, pi].
double wrap_pi(double angle);

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// sqrt(S^-2 - 1) with S = |mean exp(i error)|; +infinity if S vanishes.
double holevo_deviation(std::span<const double> errors);
double holevo_variance_of(std::span<const double> errors);

struct BootstrapConfig {
    int samples = 1000000;
    double level = 0.95;
    uint64_t seed = 0;
    /// 0 = OpenMP default.
    int workers = 0;
};

/// Percentile bootstrap of the Holevo deviation. Resamples are generated in
/// fixed-size chunks with counter-derived seeds, so the interval does not
/// depend on the worker count. The input is put in canonical (sorted) order
/// first, so any permutation of `errors` gives the same interval.
Interval bootstrap_ci(std::span<const double> errors, const BootstrapConfig &cfg);
/// Single-threaded reference for `bootstrap_ci`; identical output.
Interval bootstrap_ci_serial(std::span<const double> errors, const BootstrapConfig &cfg);

/// Phase-estimation statistics over a set of independent trials.
struct TrialStatistics {
    std::vector<double> estimates;
    /// wrap_pi(estimate - truth), in trial order.
    std::vector<double> errors;
    double holevo_variance = 0;
    double holevo_deviation = 0;
    double sqrtN_scaled_deviation = 0;
    Interval bootstrap_ci;
    int total_resources = 0;
    size_t undefined_estimates = 0;
};

/// Builds statistics from per-trial estimates and true phases. Reductions run
/// over the errors in sorted order, so the result is invariant under
/// permutation of the trials.
TrialStatistics summarize_trials(
    std::vector<double> estimates,
    std::span<const double> truths,
    int total_resources,
    size_t undefined_estimates,
    const BootstrapConfig &bootstrap);

/// 10 log10(v1 / v2).
double db_improvement(double v1, double v2);

}  // namespace aphase

#endif
