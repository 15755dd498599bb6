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

#ifndef APHASE_PLAN_H
#define APHASE_PLAN_H

#include <map>
#include <string>
#include <vector>

#include "aphase/likelihood.h"

namespace aphase {

/// A kind of probe state fed into the interferometer.
struct StateClass {
    enum class Kind { DualFock, Noon };
    Kind kind = Kind::DualFock;
    /// Photons consumed per use: 1 (|1,0>), 2 (|1,1>), 4 (|2,2>), or the NOON n.
    int photons = 1;

    static StateClass dual_fock(int photons);
    static StateClass noon(int photons);
    /// "n1", "n2", "n4" or "noon-k".
    static StateClass parse(const std::string &name);
    std::string name() const;

    bool operator==(const StateClass &) const = default;
    auto operator<=>(const StateClass &) const = default;
};

struct PlanBlock {
    StateClass state;
    int reps = 1;

    bool operator==(const PlanBlock &) const = default;
};

/// Ordered blocks of repeated detections. Resources N = sum photons * reps.
class SequencePlan {
   public:
    explicit SequencePlan(std::vector<PlanBlock> blocks);

    const std::vector<PlanBlock> &blocks() const {
        return blocks_;
    }
    int total_resources() const {
        return total_;
    }
    int total_detections() const;
    /// e.g. "[7x1, 1x2]" (reps x photons; NOON blocks print as "3xnoon-4").
    std::string describe() const;

    bool operator==(const SequencePlan &) const = default;

   private:
    std::vector<PlanBlock> blocks_;
    int total_;
};

enum class FixtureSet { Ideal, Experimental };

FixtureSet parse_fixture_set(const std::string &name);
std::string fixture_set_name(FixtureSet f);

/// Resolves each state class to its detection likelihood under a fixture set.
/// Ideal: A, B, Gamma. Experimental: A', B', sign-corrected Gamma'.
/// NOON classes always resolve to the unit-visibility NOON likelihood.
class LikelihoodSet {
   public:
    explicit LikelihoodSet(FixtureSet fixtures);

    FixtureSet fixtures() const {
        return fixtures_;
    }
    HarmonicLikelihood resolve(const StateClass &state) const;
    /// Replaces the model used for one class (e.g. a reduced-visibility
    /// single-photon fringe for reference schemes).
    void set_override(const StateClass &state, HarmonicLikelihood model);

   private:
    FixtureSet fixtures_;
    std::vector<HarmonicLikelihood> dual_fock_;
    std::map<StateClass, HarmonicLikelihood> overrides_;
};

/// Every block-structured plan with total resources N: all multiplicity
/// vectors (one block per class used) and every ordering of the used blocks.
/// Ordering of the output: by multiplicity vector, then lexicographic block
/// order.
std::vector<SequencePlan> enumerate_plans(int N, const std::vector<StateClass> &classes);
std::vector<SequencePlan> enumerate_plans(int N);

/// Sequences used in the laboratory demonstration for
/// N in {4, 9, 15, 25, 37, 48}; throws ConfigError for other N.
SequencePlan demonstrated_plan(int N);
std::vector<int> demonstrated_resource_counts();

}  // namespace aphase

#endif
