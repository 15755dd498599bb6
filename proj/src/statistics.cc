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

#include "aphase/statistics.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "aphase/errors.h"
#include "aphase/likelihood.h"
#include "aphase/parallel.h"
#include "aphase/rng.h"

namespace aphase {

namespace {

constexpr int kBootstrapChunk = 1024;

double deviation_from_sums(double c, double s, size_t n) {
    double sharp = std::hypot(c, s) / static_cast<double>(n);
    if (sharp <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::sqrt(std::max(0.0, 1 / (sharp * sharp) - 1));
}

void check_bootstrap(std::span<const double> errors, const BootstrapConfig &cfg) {
    if (errors.empty()) {
        throw ConfigError("bootstrap needs at least one error value");
    }
    if (cfg.samples < 1000) {
        throw ConfigError("bootstrap needs at least 1000 resamples, got " + std::to_string(cfg.samples));
    }
    if (!(cfg.level > 0 && cfg.level < 1)) {
        throw ConfigError("bootstrap level must lie in (0, 1)");
    }
}

struct CanonicalErrors {
    std::vector<double> cos;
    std::vector<double> sin;
};

CanonicalErrors canonical(std::span<const double> errors) {
    std::vector<double> sorted(errors.begin(), errors.end());
    std::sort(sorted.begin(), sorted.end());
    CanonicalErrors c;
    for (double e : sorted) {
        c.cos.push_back(std::cos(e));
        c.sin.push_back(std::sin(e));
    }
    return c;
}

void resample_chunk(const CanonicalErrors &c, const BootstrapConfig &cfg, int chunk, std::vector<double> &out) {
    Rng rng(derive_seed(cfg.seed, static_cast<uint64_t>(chunk)));
    size_t n = c.cos.size();
    int begin = chunk * kBootstrapChunk;
    int end = std::min(cfg.samples, begin + kBootstrapChunk);
    for (int b = begin; b < end; b++) {
        double sc = 0;
        double ss = 0;
        for (size_t k = 0; k < n; k++) {
            size_t i = rng.below(n);
            sc += c.cos[i];
            ss += c.sin[i];
        }
        out[static_cast<size_t>(b)] = deviation_from_sums(sc, ss, n);
    }
}

// Linear-interpolated quantile of sorted data.
double quantile(const std::vector<double> &sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    if (frac == 0 || sorted[lo] == sorted[hi]) {
        return sorted[lo];
    }
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Interval percentile_interval(std::vector<double> &devs, double level) {
    std::sort(devs.begin(), devs.end());
    return {quantile(devs, (1 - level) / 2), quantile(devs, (1 + level) / 2)};
}

int chunk_count(int samples) {
    return (samples + kBootstrapChunk - 1) / kBootstrapChunk;
}

}  // namespace

double wrap_pi(double angle) {
    double w = std::remainder(angle, kTwoPi);
    if (w <= -kPi) {
        w += kTwoPi;
    }
    return w;
}

double holevo_variance_of(std::span<const double> errors) {
    if (errors.empty()) {
        throw ConfigError("Holevo variance of an empty set");
    }
    auto c = canonical(errors);
    double sc = 0;
    double ss = 0;
    for (size_t k = 0; k < c.cos.size(); k++) {
        sc += c.cos[k];
        ss += c.sin[k];
    }
    double sharp = std::hypot(sc, ss) / static_cast<double>(errors.size());
    if (sharp <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::max(0.0, 1 / (sharp * sharp) - 1);
}

double holevo_deviation(std::span<const double> errors) {
    return std::sqrt(holevo_variance_of(errors));
}

Interval bootstrap_ci_serial(std::span<const double> errors, const BootstrapConfig &cfg) {
    check_bootstrap(errors, cfg);
    auto c = canonical(errors);
    std::vector<double> devs(static_cast<size_t>(cfg.samples));
    for (int chunk = 0; chunk < chunk_count(cfg.samples); chunk++) {
        resample_chunk(c, cfg, chunk, devs);
    }
    return percentile_interval(devs, cfg.level);
}

Interval bootstrap_ci(std::span<const double> errors, const BootstrapConfig &cfg) {
    check_bootstrap(errors, cfg);
    auto c = canonical(errors);
    std::vector<double> devs(static_cast<size_t>(cfg.samples));
    int chunks = chunk_count(cfg.samples);
    int workers = resolve_workers(cfg.workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int chunk = 0; chunk < chunks; chunk++) {
        resample_chunk(c, cfg, chunk, devs);
    }
    return percentile_interval(devs, cfg.level);
}

TrialStatistics summarize_trials(
    std::vector<double> estimates,
    std::span<const double> truths,
    int total_resources,
    size_t undefined_estimates,
    const BootstrapConfig &bootstrap) {
    if (estimates.size() != truths.size()) {
        throw ConfigError("estimates and truths differ in length");
    }
    if (estimates.size() < 2) {
        throw ConfigError("statistics need at least two trials");
    }
    TrialStatistics s;
    s.estimates = std::move(estimates);
    for (size_t i = 0; i < truths.size(); i++) {
        s.errors.push_back(wrap_pi(s.estimates[i] - truths[i]));
    }
    s.holevo_variance = holevo_variance_of(s.errors);
    s.holevo_deviation = std::sqrt(s.holevo_variance);
    s.total_resources = total_resources;
    s.sqrtN_scaled_deviation = s.holevo_deviation * std::sqrt(static_cast<double>(total_resources));
    s.undefined_estimates = undefined_estimates;
    s.bootstrap_ci = bootstrap_ci(s.errors, bootstrap);
    return s;
}

double db_improvement(double v1, double v2) {
    if (!(v1 > 0 && v2 > 0)) {
        throw ConfigError("dB comparison needs positive variances");
    }
    return 10 * std::log10(v1 / v2);
}

}  // namespace aphase
