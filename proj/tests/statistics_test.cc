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
#include <random>

#include "gtest/gtest.h"

#include "aphase/errors.h"
#include "aphase/likelihood.h"

using namespace aphase;

namespace {

std::vector<double> wrapped_normal(size_t n, double sigma, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0, sigma);
    std::vector<double> v(n);
    for (auto &e : v) {
        e = wrap_pi(g(rng));
    }
    return v;
}

// Holevo deviation of a wrapped normal, from the characteristic function.
double wrapped_normal_deviation(double sigma) {
    return std::sqrt(std::exp(sigma * sigma) - 1);
}

}  // namespace

TEST(WrapPi, range) {
    EXPECT_DOUBLE_EQ(wrap_pi(0.5), 0.5);
    EXPECT_NEAR(wrap_pi(kTwoPi + 0.5), 0.5, 1e-15);
    EXPECT_NEAR(wrap_pi(-kTwoPi - 0.5), -0.5, 1e-15);
    EXPECT_DOUBLE_EQ(wrap_pi(kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_pi(-kPi), kPi);
    for (int k = -100; k <= 100; k++) {
        double w = wrap_pi(0.37 * k);
        EXPECT_GT(w, -kPi);
        EXPECT_LE(w, kPi);
        EXPECT_NEAR(std::cos(w), std::cos(0.37 * k), 1e-12);
    }
}

TEST(HolevoDeviation, symmetric_pair) {
    std::vector<double> e = {0.4, -0.4, 0.4, -0.4};
    EXPECT_NEAR(holevo_deviation(e), std::tan(0.4), 1e-14);
    EXPECT_NEAR(holevo_variance_of(e), std::tan(0.4) * std::tan(0.4), 1e-14);
    std::vector<double> zero = {0, 0, 0};
    EXPECT_EQ(holevo_deviation(zero), 0);
    std::vector<double> opposite = {0, kPi};
    EXPECT_GT(holevo_variance_of(opposite), 1e30);
    EXPECT_THROW(holevo_variance_of(std::vector<double>{}), ConfigError);
}

TEST(HolevoDeviation, wrapped_normal_quadrature) {
    for (double sigma : {0.1, 0.3, 0.8}) {
        auto e = wrapped_normal(400000, sigma, 12);
        double oracle = wrapped_normal_deviation(sigma);
        EXPECT_NEAR(holevo_deviation(e), oracle, 0.01 * oracle) << sigma;
    }
    EXPECT_NEAR(wrapped_normal_deviation(0.3), 0.3069, 1e-4);
}

TEST(HolevoDeviation, offset_invariance) {
    auto e = wrapped_normal(1000, 0.5, 3);
    std::vector<double> shifted;
    for (double v : e) {
        shifted.push_back(wrap_pi(v + 2.0));
    }
    EXPECT_NEAR(holevo_deviation(e), holevo_deviation(shifted), 1e-12);
}

TEST(BootstrapCI, serial_and_parallel_identical) {
    auto e = wrapped_normal(800, 0.3, 5);
    BootstrapConfig cfg{.samples = 5000, .seed = 42};
    auto s = bootstrap_ci_serial(e, cfg);
    for (int w : {1, 2, 3, 8}) {
        cfg.workers = w;
        auto p = bootstrap_ci(e, cfg);
        EXPECT_EQ(p.lo, s.lo);
        EXPECT_EQ(p.hi, s.hi);
    }
}

TEST(BootstrapCI, permutation_invariant) {
    auto e = wrapped_normal(500, 0.3, 6);
    BootstrapConfig cfg{.samples = 2000, .seed = 9};
    auto a = bootstrap_ci(e, cfg);
    std::mt19937_64 rng(1);
    std::shuffle(e.begin(), e.end(), rng);
    auto b = bootstrap_ci(e, cfg);
    EXPECT_EQ(a.lo, b.lo);
    EXPECT_EQ(a.hi, b.hi);
}

TEST(BootstrapCI, coverage_on_wrapped_normal) {
    const double sigma = 0.3;
    const double oracle = wrapped_normal_deviation(sigma);
    int covered = 0;
    const int datasets = 200;
    for (int d = 0; d < datasets; d++) {
        auto e = wrapped_normal(500, sigma, 1000 + static_cast<uint64_t>(d));
        auto ci = bootstrap_ci(e, {.samples = 1000, .seed = static_cast<uint64_t>(d)});
        EXPECT_LT(ci.lo, ci.hi);
        double point = holevo_deviation(e);
        EXPECT_LE(ci.lo, point);
        EXPECT_GE(ci.hi, point);
        covered += (ci.lo <= oracle && oracle <= ci.hi);
    }
    EXPECT_GE(covered, 180);
    EXPECT_LE(covered, 199);
}

TEST(BootstrapCI, config_validation) {
    std::vector<double> e = {0.1, 0.2};
    EXPECT_THROW(bootstrap_ci(e, {.samples = 999}), ConfigError);
    EXPECT_THROW(bootstrap_ci(e, {.samples = 1000, .level = 1.0}), ConfigError);
    EXPECT_THROW(bootstrap_ci(std::vector<double>{}, {.samples = 1000}), ConfigError);
}

TEST(SummarizeTrials, wraps_errors_and_scales) {
    std::vector<double> est = {0.1, 6.2, 3.0, 3.3};
    std::vector<double> truth = {0.0, 0.1, 3.1, 3.2};
    auto s = summarize_trials(est, truth, 9, 1, {.samples = 1000, .seed = 1});
    ASSERT_EQ(s.errors.size(), 4u);
    EXPECT_NEAR(s.errors[0], 0.1, 1e-15);
    EXPECT_NEAR(s.errors[1], 6.1 - kTwoPi, 1e-14);
    EXPECT_NEAR(s.errors[2], -0.1, 1e-15);
    EXPECT_NEAR(s.sqrtN_scaled_deviation, 3 * s.holevo_deviation, 1e-15);
    EXPECT_NEAR(s.holevo_deviation * s.holevo_deviation, s.holevo_variance, 1e-15);
    EXPECT_EQ(s.undefined_estimates, 1u);
    EXPECT_EQ(s.total_resources, 9);
    EXPECT_THROW(summarize_trials({0.1}, truth, 9, 0, {}), ConfigError);
}

TEST(DbImprovement, ratio) {
    EXPECT_NEAR(db_improvement(2, 1), 3.0103, 1e-4);
    EXPECT_NEAR(db_improvement(1, 1), 0, 1e-15);
    EXPECT_LT(db_improvement(1, 2), 0);
    EXPECT_THROW(db_improvement(0, 1), ConfigError);
}
