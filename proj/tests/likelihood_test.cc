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

#include "aphase/likelihood.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "aphase/errors.h"

using namespace aphase;

namespace {

double direct_sum(const HarmonicLikelihood &L, size_t x, double delta) {
    double s = 0;
    for (size_t y = 0; y <= L.harmonic_count(); y++) {
        s += L.coeff(x, y) * std::cos(L.stride() * static_cast<double>(y) * delta);
    }
    return s;
}

}  // namespace

TEST(HarmonicLikelihood, ideal_single_photon_values) {
    auto A = ideal_single_photon();
    EXPECT_DOUBLE_EQ(A.probability(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(A.probability(1, 0), 0.0);
    EXPECT_NEAR(A.probability(0, kPi / 2), 0.5, 1e-15);
    EXPECT_NEAR(A.probability(1, kPi), 1.0, 1e-15);
    EXPECT_EQ(A.max_frequency(), 1);
    EXPECT_EQ(A.photon_cost(), 1);
}

TEST(HarmonicLikelihood, four_photon_values) {
    auto G = ideal_four_photon();
    EXPECT_NEAR(G.probability(0, 0), 1.0, 1e-15);
    EXPECT_NEAR(G.probability(1, 0), 0.0, 1e-15);
    EXPECT_NEAR(G.probability(2, 0), 0.0, 1e-15);
    EXPECT_NEAR(G.probability(1, kPi / 4), 24.0 / 32, 1e-15);
    EXPECT_EQ(G.max_frequency(), 4);
}

TEST(HarmonicLikelihood, probabilities_sum_to_one_everywhere) {
    std::vector<HarmonicLikelihood> models = {
        ideal_single_photon(),
        ideal_biphoton(),
        ideal_four_photon(),
        experimental_fixture(ExperimentalFixture::SinglePhoton),
        experimental_fixture(ExperimentalFixture::Biphoton),
        experimental_fixture(ExperimentalFixture::FourPhoton),
        noon_likelihood(3, 0.8),
    };
    for (const auto &L : models) {
        double tol = L.colsum_tol() * static_cast<double>(L.harmonic_count()) + 1e-12;
        for (int k = 0; k < 500; k++) {
            double d = -7 + 14.0 * k / 499;
            double s = 0;
            for (size_t x = 0; x < L.num_outcomes(); x++) {
                double p = L.probability(x, d);
                EXPECT_GE(p, -1e-9);
                EXPECT_NEAR(p, direct_sum(L, x, d), 1e-14);
                s += p;
            }
            EXPECT_NEAR(s, 1, tol);
        }
    }
}

TEST(HarmonicLikelihood, derivatives_match_finite_differences) {
    const double h = 1e-5;
    for (const auto &L : {ideal_four_photon(), experimental_fixture(ExperimentalFixture::FourPhoton)}) {
        for (int k = 0; k < 50; k++) {
            double d = 0.1 + 0.123 * k;
            for (size_t x = 0; x < L.num_outcomes(); x++) {
                double fd1 = (L.probability(x, d + h) - L.probability(x, d - h)) / (2 * h);
                double fd2 = (L.probability(x, d + h) - 2 * L.probability(x, d) + L.probability(x, d - h)) / (h * h);
                EXPECT_NEAR(L.derivative(x, d), fd1, 1e-8);
                EXPECT_NEAR(L.second_derivative(x, d), fd2, 1e-4);
            }
        }
    }
}

TEST(HarmonicLikelihood, experimental_four_photon_sign_correction) {
    auto raw = printed_four_photon_experimental();
    double printed = raw[0][1] + raw[1][1] + raw[2][1];
    EXPECT_NEAR(printed, 20.847 / 32, 1e-12);
    EXPECT_THROW(HarmonicLikelihood(2, raw, {"a", "b", "c"}, 4, kExperimentalColsumTol), InvariantViolation);
    auto G = experimental_fixture(ExperimentalFixture::FourPhoton);
    EXPECT_NEAR(G.coeff(2, 1), -10.423 / 32, 1e-15);
    double corrected = G.coeff(0, 1) + G.coeff(1, 1) + G.coeff(2, 1);
    EXPECT_LE(std::abs(corrected), kExperimentalColsumTol);
}

TEST(HarmonicLikelihood, rejects_invalid_models) {
    // Constant column does not sum to one.
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, 0.5}, {0.6, -0.5}}, {"a", "b"}, 1), InvariantViolation);
    // Harmonic column does not cancel.
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, 0.5}, {0.5, -0.4}}, {"a", "b"}, 1), InvariantViolation);
    // Column sums fine but a row goes negative.
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, 0.7}, {0.5, -0.7}}, {"a", "b"}, 1), InvariantViolation);
    EXPECT_THROW(HarmonicLikelihood(0, {{1.0}}, {"a"}, 1), ConfigError);
    EXPECT_THROW(HarmonicLikelihood(1, {{1.0}}, {"a"}, 0), ConfigError);
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, 0.5}, {0.5}}, {"a", "b"}, 1), ConfigError);
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, 0.5}, {0.5, -0.5}}, {"a"}, 1), ConfigError);
    EXPECT_THROW(HarmonicLikelihood(1, {{0.5, NAN}, {0.5, -0.5}}, {"a", "b"}, 1), ConfigError);
}

TEST(HarmonicLikelihood, outcome_range_checked) {
    auto A = ideal_single_photon();
    EXPECT_NO_THROW(probability(A, 1, 0.3));
    EXPECT_THROW(probability(A, 2, 0.3), ConfigError);
}

TEST(NoonLikelihood, visibility_and_period) {
    auto L = noon_likelihood(4, 0.9);
    EXPECT_NEAR(L.probability(0, 0), 0.95, 1e-15);
    EXPECT_NEAR(L.probability(0, kPi / 4), 0.05, 1e-15);
    EXPECT_NEAR(L.probability(0, kPi / 2), 0.95, 1e-15);
    EXPECT_EQ(L.photon_cost(), 4);
    EXPECT_THROW(noon_likelihood(0, 1), ConfigError);
    EXPECT_THROW(noon_likelihood(2, 1.1), ConfigError);
    EXPECT_TRUE(approx_equal(noon_likelihood(1, 1), ideal_single_photon(), 0));
    EXPECT_TRUE(approx_equal(noon_likelihood(2, 1), ideal_biphoton(), 0));
}

TEST(IndependentProduct, matches_product_of_probabilities) {
    auto a = ideal_single_photon();
    auto b = experimental_fixture(ExperimentalFixture::FourPhoton);
    auto p = independent_product(a, b);
    EXPECT_EQ(p.stride(), 1);
    EXPECT_EQ(p.num_outcomes(), 6u);
    EXPECT_EQ(p.max_frequency(), 5);
    EXPECT_EQ(p.photon_cost(), 5);
    EXPECT_EQ(p.labels()[1], "delta=-1&|delta|=2");
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int k = 0; k < 200; k++) {
        double d = u(rng);
        for (size_t x1 = 0; x1 < 2; x1++) {
            for (size_t x2 = 0; x2 < 3; x2++) {
                EXPECT_NEAR(p.probability(x1 * 3 + x2, d), a.probability(x1, d) * b.probability(x2, d), 1e-14);
            }
        }
    }
}

TEST(IndependentProduct, two_noon_copies_keep_stride) {
    auto p = independent_product(noon_likelihood(2, 0.94), noon_likelihood(2, 0.94));
    EXPECT_EQ(p.stride(), 2);
    EXPECT_EQ(p.harmonic_count(), 2u);
}
