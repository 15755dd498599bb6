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

#include "aphase/plan.h"

#include <functional>
#include <set>

#include "gtest/gtest.h"

#include "aphase/errors.h"

using namespace aphase;

namespace {

// Ordered sequences of blocks, each class used at most once, summing to N.
size_t count_block_sequences(int remaining, const std::vector<int> &costs, std::vector<bool> &used) {
    if (remaining == 0) {
        return 1;
    }
    size_t total = 0;
    for (size_t i = 0; i < costs.size(); i++) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        for (int reps = 1; reps * costs[i] <= remaining; reps++) {
            total += count_block_sequences(remaining - reps * costs[i], costs, used);
        }
        used[i] = false;
    }
    return total;
}

size_t oracle_count(int N, const std::vector<int> &costs) {
    std::vector<bool> used(costs.size(), false);
    return count_block_sequences(N, costs, used);
}

}  // namespace

TEST(StateClass, parse_and_name) {
    EXPECT_EQ(StateClass::parse("n1"), StateClass::dual_fock(1));
    EXPECT_EQ(StateClass::parse("n4").photons, 4);
    auto noon = StateClass::parse("noon-6");
    EXPECT_EQ(noon.kind, StateClass::Kind::Noon);
    EXPECT_EQ(noon.photons, 6);
    EXPECT_EQ(noon.name(), "noon-6");
    EXPECT_EQ(StateClass::dual_fock(2).name(), "n2");
    EXPECT_THROW(StateClass::parse("n3"), ConfigError);
    EXPECT_THROW(StateClass::parse("noon-"), ConfigError);
    EXPECT_THROW(StateClass::parse("noon-x"), ConfigError);
    EXPECT_THROW(StateClass::parse(""), ConfigError);
}

TEST(SequencePlan, totals_and_description) {
    SequencePlan p({{StateClass::dual_fock(1), 7}, {StateClass::dual_fock(2), 1}});
    EXPECT_EQ(p.total_resources(), 9);
    EXPECT_EQ(p.total_detections(), 8);
    EXPECT_EQ(p.describe(), "[7x1, 1x2]");
    SequencePlan q({{StateClass::noon(4), 3}});
    EXPECT_EQ(q.describe(), "[3xnoon-4]");
    EXPECT_THROW(SequencePlan({}), ConfigError);
    EXPECT_THROW(SequencePlan({{StateClass::dual_fock(1), 0}}), ConfigError);
}

TEST(EnumeratePlans, small_N) {
    auto plans = enumerate_plans(4);
    EXPECT_EQ(plans.size(), 5u);
    std::set<std::string> names;
    for (const auto &p : plans) {
        names.insert(p.describe());
    }
    EXPECT_EQ(names, (std::set<std::string>{"[4x1]", "[2x1, 1x2]", "[1x2, 2x1]", "[2x2]", "[1x4]"}));
    EXPECT_EQ(enumerate_plans(1).size(), 1u);
    EXPECT_EQ(enumerate_plans(3).size(), 3u);
}

TEST(EnumeratePlans, matches_recursive_count) {
    for (int N = 1; N <= 30; N++) {
        auto plans = enumerate_plans(N);
        EXPECT_EQ(plans.size(), oracle_count(N, {1, 2, 4})) << N;
        std::set<std::string> names;
        for (const auto &p : plans) {
            EXPECT_EQ(p.total_resources(), N);
            names.insert(p.describe());
        }
        EXPECT_EQ(names.size(), plans.size());
    }
    std::vector<StateClass> with_noon = {StateClass::dual_fock(1), StateClass::noon(3), StateClass::dual_fock(4)};
    for (int N = 1; N <= 20; N++) {
        EXPECT_EQ(enumerate_plans(N, with_noon).size(), oracle_count(N, {1, 3, 4})) << N;
    }
}

TEST(EnumeratePlans, duplicate_classes_are_merged) {
    auto a = enumerate_plans(6, {StateClass::dual_fock(2), StateClass::dual_fock(1), StateClass::dual_fock(2)});
    EXPECT_EQ(a.size(), oracle_count(6, {1, 2}));
    EXPECT_THROW(enumerate_plans(0), ConfigError);
}

TEST(DemonstratedPlan, totals) {
    for (int N : demonstrated_resource_counts()) {
        EXPECT_EQ(demonstrated_plan(N).total_resources(), N);
    }
    EXPECT_EQ(demonstrated_plan(9).describe(), "[7x1, 1x2]");
    EXPECT_EQ(demonstrated_plan(48).describe(), "[10x2, 8x1, 5x4]");
    EXPECT_THROW(demonstrated_plan(10), ConfigError);
}

TEST(LikelihoodSet, resolution_and_overrides) {
    LikelihoodSet ideal(FixtureSet::Ideal);
    EXPECT_TRUE(approx_equal(ideal.resolve(StateClass::dual_fock(4)), ideal_four_photon(), 0));
    LikelihoodSet exp(FixtureSet::Experimental);
    EXPECT_TRUE(approx_equal(
        exp.resolve(StateClass::dual_fock(2)), experimental_fixture(ExperimentalFixture::Biphoton), 0));
    EXPECT_TRUE(approx_equal(exp.resolve(StateClass::noon(3)), noon_likelihood(3, 1), 0));
    exp.set_override(StateClass::dual_fock(1), noon_likelihood(1, 0.5));
    EXPECT_NEAR(exp.resolve(StateClass::dual_fock(1)).coeff(0, 1), 0.25, 1e-15);
    EXPECT_EQ(parse_fixture_set("ideal"), FixtureSet::Ideal);
    EXPECT_EQ(fixture_set_name(FixtureSet::Experimental), "experimental");
    EXPECT_THROW(parse_fixture_set("lab"), ConfigError);
}
