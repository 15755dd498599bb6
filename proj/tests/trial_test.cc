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

#include "aphase/trial.h"

#include <cmath>

#include "gtest/gtest.h"

#include "aphase/errors.h"
#include "aphase/statistics.h"

using namespace aphase;

namespace {

SequencePlan single_block(int photons, int reps) {
    return SequencePlan({{StateClass::dual_fock(photons), reps}});
}

}  // namespace

TEST(RunTrial, single_photon_deviation_is_root_three) {
    LikelihoodSet ideal(FixtureSet::Ideal);
    auto plan = single_block(1, 1);
    TrialOptions opts;
    Rng draw(5);
    std::vector<double> errors;
    for (int i = 0; i < 40000; i++) {
        double phi = draw.uniform() * kTwoPi;
        auto rec = run_trial(plan, ideal, phi, opts, draw.next());
        ASSERT_TRUE(rec.estimate_defined);
        EXPECT_NEAR(sharpness(rec.final_posterior), 0.5, 1e-15);
        errors.push_back(wrap_pi(rec.estimate - phi));
    }
    EXPECT_NEAR(holevo_deviation(errors), std::sqrt(3.0), 0.05);
}

TEST(RunTrial, deterministic_for_seed) {
    LikelihoodSet lab(FixtureSet::Experimental);
    auto plan = SequencePlan({{StateClass::dual_fock(1), 3}, {StateClass::dual_fock(4), 2}});
    TrialOptions opts;
    auto a = run_trial(plan, lab, 1.0, opts, 99);
    auto b = run_trial(plan, lab, 1.0, opts, 99);
    ASSERT_EQ(a.detections.size(), b.detections.size());
    for (size_t i = 0; i < a.detections.size(); i++) {
        EXPECT_EQ(a.detections[i].theta, b.detections[i].theta);
        EXPECT_EQ(a.detections[i].outcome, b.detections[i].outcome);
    }
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.final_posterior.moments(), b.final_posterior.moments());
}

TEST(RunTrial, record_shape) {
    LikelihoodSet lab(FixtureSet::Experimental);
    auto plan = demonstrated_plan(25);
    auto rec = run_trial(plan, lab, 2.0, {}, 3);
    EXPECT_EQ(rec.total_resources, 25);
    EXPECT_EQ(rec.detections.size(), 18u);
    EXPECT_EQ(rec.retained_count(), 18u);
    EXPECT_EQ(rec.final_posterior.degree(), 13 * 1 + 4 * 2 + 1 * 4);
    EXPECT_EQ(rec.detections[0].state, StateClass::dual_fock(1));
    EXPECT_EQ(rec.detections[17].state, StateClass::dual_fock(4));
    for (const auto &d : rec.detections) {
        EXPECT_GE(d.theta, 0);
        EXPECT_LT(d.theta, kTwoPi);
        EXPECT_LT(d.outcome, d.state.photons == 4 ? 3u : 2u);
    }
}

TEST(RunTrial, nonadaptive_schedule_is_exact) {
    LikelihoodSet lab(FixtureSet::Experimental);
    auto plan = demonstrated_plan(15);
    TrialOptions opts;
    opts.policy = PolicyKind::Nonadaptive;
    auto rec = run_trial(plan, lab, 0.5, opts, 12);
    EXPECT_GE(rec.theta0, 0);
    EXPECT_LT(rec.theta0, kTwoPi);
    for (size_t i = 0; i < rec.detections.size(); i++) {
        EXPECT_EQ(rec.detections[i].theta, nonadaptive_theta(15, static_cast<int>(i), rec.theta0));
    }
}

TEST(RunTrial, state_loss_retries_discarded_detections) {
    LikelihoodSet lab(FixtureSet::Experimental);
    auto plan = demonstrated_plan(48);
    TrialOptions opts;
    opts.state_loss = laboratory_retention_table();
    size_t discarded = 0;
    for (uint64_t s = 0; s < 20; s++) {
        auto rec = run_trial(plan, lab, 1.0, opts, s);
        EXPECT_EQ(rec.retained_count(), static_cast<size_t>(plan.total_detections()));
        EXPECT_EQ(rec.total_resources, 48);
        discarded += rec.detections.size() - rec.retained_count();
    }
    EXPECT_GT(discarded, 0u);
}

TEST(SimulateStateLoss, identity_retention) {
    std::vector<Detection> stream(1000, Detection{StateClass::dual_fock(1), 0.0, 0, false});
    auto out = simulate_state_loss(stream, RetentionVector({1.0, 1.0}), 7);
    for (const auto &d : out) {
        EXPECT_FALSE(d.discarded);
    }
}

TEST(SimulateStateLoss, binomial_discard_rate) {
    const size_t n = 100000;
    std::vector<Detection> stream;
    for (size_t i = 0; i < n; i++) {
        stream.push_back({StateClass::dual_fock(1), 0.0, i % 2, false});
    }
    auto out = simulate_state_loss(stream, RetentionVector({0.5, 1.0}), 11);
    size_t lost0 = 0;
    size_t lost1 = 0;
    for (const auto &d : out) {
        (d.outcome == 0 ? lost0 : lost1) += d.discarded;
    }
    double half = n / 2.0;
    double sigma = std::sqrt(half * 0.25);
    EXPECT_NEAR(static_cast<double>(lost0), half * 0.5, 3 * sigma);
    EXPECT_EQ(lost1, 0u);

    RetentionTable table{{StateClass::dual_fock(1), RetentionVector({0.5, 1.0})}};
    auto via_table = simulate_state_loss(stream, table, 11);
    for (size_t i = 0; i < n; i++) {
        EXPECT_EQ(via_table[i].discarded, out[i].discarded);
    }
    std::vector<Detection> other = {{StateClass::dual_fock(2), 0.0, 0, false}};
    EXPECT_FALSE(simulate_state_loss(other, table, 1)[0].discarded);
}

TEST(PolicyKind, parse) {
    EXPECT_EQ(parse_policy_kind("adaptive"), PolicyKind::Adaptive);
    EXPECT_EQ(parse_policy_kind("sql"), PolicyKind::Nonadaptive);
    EXPECT_EQ(policy_kind_name(PolicyKind::Nonadaptive), "sql");
    EXPECT_THROW(parse_policy_kind("greedy"), ConfigError);
}
