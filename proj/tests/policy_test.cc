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

#include "aphase/policy.h"

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "aphase/errors.h"

using namespace aphase;

namespace {

// Objective rebuilt from full Bayes updates: P(x) times the posterior
// sharpness of each branch.
double branch_sharpness(const PhasePosterior &p, const HarmonicLikelihood &L, double theta) {
    double s = 0;
    for (size_t x = 0; x < L.num_outcomes(); x++) {
        double px = predictive_probability(p, L, x, theta);
        if (px > 1e-14) {
            s += px * sharpness(bayes_update(p, L, x, theta));
        }
    }
    return s;
}

double branch_variance(const PhasePosterior &p, const HarmonicLikelihood &L, double theta) {
    double s = 0;
    for (size_t x = 0; x < L.num_outcomes(); x++) {
        double px = predictive_probability(p, L, x, theta);
        if (px > 1e-14) {
            auto q = bayes_update(p, L, x, theta);
            if (sharpness(q) > 1e-12) {
                s += px * holevo_variance(q);
            }
        }
    }
    return s;
}

PhasePosterior cosine_prior(int capacity) {
    return bayes_update(uniform_prior(capacity), ideal_single_photon(), 0, 0);
}

PhasePosterior random_posterior(std::mt19937_64 &rng, int steps) {
    std::uniform_real_distribution<double> u(0, 1);
    auto p = uniform_prior(64);
    std::vector<HarmonicLikelihood> models = {
        experimental_fixture(ExperimentalFixture::SinglePhoton),
        experimental_fixture(ExperimentalFixture::Biphoton),
        experimental_fixture(ExperimentalFixture::FourPhoton),
    };
    for (int k = 0; k < steps; k++) {
        const auto &L = models[rng() % 3];
        double theta = kTwoPi * u(rng);
        auto probs = L.probabilities(1.0 - theta);
        double r = u(rng);
        size_t x = 0;
        while (x + 1 < probs.size() && r >= probs[x]) {
            r -= probs[x++];
        }
        p = bayes_update(p, L, x, theta);
    }
    return p;
}

}  // namespace

TEST(ExpectedSharpness, uniform_prior_single_photon) {
    auto p = uniform_prior(2);
    for (double theta : {0.0, 0.9, 3.0}) {
        EXPECT_NEAR(expected_sharpness(p, ideal_single_photon(), theta), 0.5, 1e-15);
    }
}

TEST(ExpectedSharpness, cosine_prior_examples) {
    auto p = cosine_prior(3);
    auto A = ideal_single_photon();
    EXPECT_NEAR(expected_sharpness(p, A, kPi / 2), std::sqrt(2.0) / 2, 1e-15);
    EXPECT_NEAR(expected_sharpness(p, A, 0), 0.5, 1e-15);
    PolicyConfig cfg;
    Rng rng(4);
    for (int k = 0; k < 10; k++) {
        double t = adaptive_theta(p, A, cfg, rng);
        double d = std::min(std::abs(t - kPi / 2), std::abs(t - 3 * kPi / 2));
        EXPECT_LT(d, 1e-6) << t;
    }
}

TEST(ExpectedSharpness, tie_break_visits_both_maxima) {
    auto p = cosine_prior(3);
    PolicyConfig cfg;
    Rng rng(17);
    std::set<int> seen;
    for (int k = 0; k < 40; k++) {
        seen.insert(static_cast<int>(std::lround(adaptive_theta(p, ideal_single_photon(), cfg, rng) / (kPi / 2))));
    }
    EXPECT_EQ(seen, (std::set<int>{1, 3}));
}

TEST(ExpectedSharpness, matches_branch_updates) {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 10; rep++) {
        auto p = random_posterior(rng, 6);
        for (const auto &L : {experimental_fixture(ExperimentalFixture::SinglePhoton), ideal_four_photon(),
                              experimental_fixture(ExperimentalFixture::FourPhoton)}) {
            for (int k = 0; k < 16; k++) {
                double theta = 0.17 + 0.39 * k;
                EXPECT_NEAR(expected_sharpness(p, L, theta), branch_sharpness(p, L, theta), 1e-12);
                EXPECT_NEAR(expected_holevo_variance(p, L, theta), branch_variance(p, L, theta),
                            1e-9 * (1 + branch_variance(p, L, theta)));
            }
        }
    }
}

TEST(AdaptiveTheta, reaches_dense_search_optimum) {
    std::mt19937_64 rng(8);
    auto L = experimental_fixture(ExperimentalFixture::FourPhoton);
    for (int rep = 0; rep < 5; rep++) {
        auto p = random_posterior(rng, 5);
        double best = 0;
        for (int k = 0; k < 100000; k++) {
            best = std::max(best, branch_sharpness(p, L, kTwoPi * k / 100000));
        }
        PolicyConfig cfg;
        cfg.rng_seed = 3;
        double theta = adaptive_theta(p, L, cfg);
        EXPECT_GE(theta, 0);
        EXPECT_LT(theta, kTwoPi);
        EXPECT_GE(expected_sharpness(p, L, theta), best - 1e-9);
    }
}

TEST(AdaptiveTheta, flat_objective_gives_random_uniform_theta) {
    auto p = uniform_prior(2);
    PolicyConfig cfg;
    Rng rng(5);
    double sum_cos = 0;
    double sum_sin = 0;
    const int n = 2000;
    for (int k = 0; k < n; k++) {
        double t = adaptive_theta(p, ideal_single_photon(), cfg, rng);
        ASSERT_GE(t, 0);
        ASSERT_LT(t, kTwoPi);
        sum_cos += std::cos(t);
        sum_sin += std::sin(t);
    }
    EXPECT_LT(std::hypot(sum_cos, sum_sin) / n, 0.1);
}

TEST(AdaptiveTheta, deterministic_for_fixed_seed) {
    std::mt19937_64 rng(2);
    auto p = random_posterior(rng, 3);
    PolicyConfig cfg;
    cfg.rng_seed = 77;
    auto L = ideal_biphoton();
    EXPECT_EQ(adaptive_theta(p, L, cfg), adaptive_theta(p, L, cfg));
}

TEST(AdaptiveTheta, variance_objective_minimizes) {
    std::mt19937_64 rng(12);
    auto L = experimental_fixture(ExperimentalFixture::Biphoton);
    for (int rep = 0; rep < 5; rep++) {
        auto p = random_posterior(rng, 4);
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 1024; k++) {
            best = std::min(best, expected_holevo_variance(p, L, kTwoPi * k / 1024));
        }
        PolicyConfig cfg;
        cfg.objective = PolicyObjective::ExpectedHolevoVariance;
        EXPECT_LE(expected_holevo_variance(p, L, adaptive_theta(p, L, cfg)), best + 1e-12);
    }
}

TEST(AdaptiveTheta, variance_objective_skips_vanishing_branches) {
    // At theta = 0 the x = 1 branch of the cosine prior has a_1 = 0 and is left out.
    auto p = cosine_prior(3);
    auto A = ideal_single_photon();
    auto keep = bayes_update(p, A, 0, 0);
    EXPECT_NEAR(expected_holevo_variance(p, A, 0), predictive_probability(p, A, 0, 0) * holevo_variance(keep), 1e-12);
}

TEST(AdaptiveTheta, rotation_covariance) {
    std::mt19937_64 rng(30);
    auto L = experimental_fixture(ExperimentalFixture::FourPhoton);
    auto p = random_posterior(rng, 4);
    const double c = 0.83;
    std::vector<std::complex<double>> rotated = p.moments();
    for (size_t j = 0; j < rotated.size(); j++) {
        rotated[j] *= std::polar(1.0, static_cast<double>(j) * c);
    }
    auto q = PhasePosterior::from_moments(rotated, p.degree());
    for (int k = 0; k < 64; k++) {
        double theta = kTwoPi * k / 64;
        EXPECT_NEAR(expected_sharpness(q, L, theta + c), expected_sharpness(p, L, theta), 1e-10);
    }
    PolicyConfig cfg;
    cfg.rng_seed = 1;
    double tp = adaptive_theta(p, L, cfg);
    double tq = adaptive_theta(q, L, cfg);
    EXPECT_NEAR(expected_sharpness(q, L, tq), expected_sharpness(p, L, tp), 1e-10);
}

TEST(AdaptiveTheta, config_validation) {
    PolicyConfig cfg;
    cfg.grid_points = 10;
    EXPECT_THROW(adaptive_theta(uniform_prior(2), ideal_single_photon(), cfg), ConfigError);
    cfg.grid_points = 1024;
    cfg.refine_iterations = -1;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(NonadaptiveTheta, schedule) {
    EXPECT_DOUBLE_EQ(nonadaptive_theta(4, 0, 0.3), 0.3);
    EXPECT_NEAR(nonadaptive_theta(4, 3, 0.3), 0.3 + 3 * kPi / 4, 1e-15);
    EXPECT_NEAR(nonadaptive_theta(2, 1, 5.0), 5.0 + kPi / 2 - kTwoPi, 1e-15);
    for (int i = 0; i < 9; i++) {
        double t = nonadaptive_theta(9, i, 6.2);
        EXPECT_GE(t, 0);
        EXPECT_LT(t, kTwoPi);
    }
    EXPECT_THROW(nonadaptive_theta(4, 4, 0), ConfigError);
    EXPECT_THROW(nonadaptive_theta(4, -1, 0), ConfigError);
    EXPECT_THROW(nonadaptive_theta(0, 0, 0), ConfigError);
}
