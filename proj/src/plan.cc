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

#include <algorithm>
#include <map>
#include <numeric>

#include "aphase/errors.h"

namespace aphase {

StateClass StateClass::dual_fock(int photons) {
    if (photons != 1 && photons != 2 && photons != 4) {
        throw ConfigError("dual Fock inputs exist for 1, 2 or 4 photons, got " + std::to_string(photons));
    }
    return {Kind::DualFock, photons};
}

StateClass StateClass::noon(int photons) {
    if (photons < 1) {
        throw ConfigError("NOON photon number must be positive");
    }
    return {Kind::Noon, photons};
}

StateClass StateClass::parse(const std::string &name) {
    if (name == "n1") {
        return dual_fock(1);
    }
    if (name == "n2") {
        return dual_fock(2);
    }
    if (name == "n4") {
        return dual_fock(4);
    }
    if (name.rfind("noon-", 0) == 0) {
        std::string digits = name.substr(5);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3) {
            throw ConfigError("bad NOON class '" + name + "'; expected noon-<k>");
        }
        return noon(std::stoi(digits));
    }
    throw ConfigError("unknown state class '" + name + "'; expected n1, n2, n4 or noon-<k>");
}

std::string StateClass::name() const {
    if (kind == Kind::Noon) {
        return "noon-" + std::to_string(photons);
    }
    return "n" + std::to_string(photons);
}

SequencePlan::SequencePlan(std::vector<PlanBlock> blocks) : blocks_(std::move(blocks)), total_(0) {
    if (blocks_.empty()) {
        throw ConfigError("a sequence plan needs at least one block");
    }
    for (const auto &b : blocks_) {
        if (b.reps < 1) {
            throw ConfigError("block repetitions must be >= 1, got " + std::to_string(b.reps));
        }
        if (b.state.photons < 1) {
            throw ConfigError("block photon count must be positive");
        }
        total_ += b.reps * b.state.photons;
    }
}

int SequencePlan::total_detections() const {
    int d = 0;
    for (const auto &b : blocks_) {
        d += b.reps;
    }
    return d;
}

std::string SequencePlan::describe() const {
    std::string s = "[";
    for (size_t i = 0; i < blocks_.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += std::to_string(blocks_[i].reps) + "x";
        s += blocks_[i].state.kind == StateClass::Kind::Noon ? blocks_[i].state.name()
                                                             : std::to_string(blocks_[i].state.photons);
    }
    return s + "]";
}

FixtureSet parse_fixture_set(const std::string &name) {
    if (name == "ideal") {
        return FixtureSet::Ideal;
    }
    if (name == "experimental") {
        return FixtureSet::Experimental;
    }
    throw ConfigError("unknown fixture set '" + name + "'; expected ideal or experimental");
}

std::string fixture_set_name(FixtureSet f) {
    return f == FixtureSet::Ideal ? "ideal" : "experimental";
}

LikelihoodSet::LikelihoodSet(FixtureSet fixtures) : fixtures_(fixtures) {
    if (fixtures == FixtureSet::Ideal) {
        dual_fock_ = {ideal_single_photon(), ideal_biphoton(), ideal_four_photon()};
    } else {
        dual_fock_ = {
            experimental_fixture(ExperimentalFixture::SinglePhoton),
            experimental_fixture(ExperimentalFixture::Biphoton),
            experimental_fixture(ExperimentalFixture::FourPhoton),
        };
    }
}

void LikelihoodSet::set_override(const StateClass &state, HarmonicLikelihood model) {
    overrides_.insert_or_assign(state, std::move(model));
}

HarmonicLikelihood LikelihoodSet::resolve(const StateClass &state) const {
    if (auto it = overrides_.find(state); it != overrides_.end()) {
        return it->second;
    }
    if (state.kind == StateClass::Kind::Noon) {
        return noon_likelihood(state.photons, 1.0);
    }
    switch (state.photons) {
        case 1:
            return dual_fock_[0];
        case 2:
            return dual_fock_[1];
        case 4:
            return dual_fock_[2];
        default:
            throw ConfigError("no likelihood for state class " + state.name());
    }
}

namespace {

void multiplicities(
    int remaining,
    size_t index,
    const std::vector<StateClass> &classes,
    std::vector<int> &current,
    std::vector<std::vector<int>> &out) {
    if (index == classes.size()) {
        if (remaining == 0) {
            out.push_back(current);
        }
        return;
    }
    for (int m = 0; m * classes[index].photons <= remaining; m++) {
        current[index] = m;
        multiplicities(remaining - m * classes[index].photons, index + 1, classes, current, out);
    }
    current[index] = 0;
}

}  // namespace

std::vector<SequencePlan> enumerate_plans(int N, const std::vector<StateClass> &classes) {
    if (N < 1) {
        throw ConfigError("plan enumeration needs N >= 1");
    }
    std::vector<StateClass> sorted = classes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::vector<int>> counts;
    std::vector<int> current(sorted.size(), 0);
    multiplicities(N, 0, sorted, current, counts);

    std::vector<SequencePlan> plans;
    for (const auto &mult : counts) {
        std::vector<size_t> used;
        for (size_t i = 0; i < mult.size(); i++) {
            if (mult[i] > 0) {
                used.push_back(i);
            }
        }
        do {
            std::vector<PlanBlock> blocks;
            for (size_t i : used) {
                blocks.push_back({sorted[i], mult[i]});
            }
            plans.emplace_back(std::move(blocks));
        } while (std::next_permutation(used.begin(), used.end()));
    }
    return plans;
}

std::vector<SequencePlan> enumerate_plans(int N) {
    return enumerate_plans(N, {StateClass::dual_fock(1), StateClass::dual_fock(2), StateClass::dual_fock(4)});
}

SequencePlan demonstrated_plan(int N) {
    auto n = [](int photons, int reps) {
        return PlanBlock{StateClass::dual_fock(photons), reps};
    };
    switch (N) {
        case 4:
            return SequencePlan({n(1, 4)});
        case 9:
            return SequencePlan({n(1, 7), n(2, 1)});
        case 15:
            return SequencePlan({n(1, 9), n(2, 3)});
        case 25:
            return SequencePlan({n(1, 13), n(2, 4), n(4, 1)});
        case 37:
            return SequencePlan({n(2, 8), n(1, 9), n(4, 3)});
        case 48:
            return SequencePlan({n(2, 10), n(1, 8), n(4, 5)});
        default:
            throw ConfigError("no demonstrated sequence for N=" + std::to_string(N) +
                              "; choose one of 4, 9, 15, 25, 37, 48 or supply a plan file");
    }
}

std::vector<int> demonstrated_resource_counts() {
    return {4, 9, 15, 25, 37, 48};
}

}  // namespace aphase
