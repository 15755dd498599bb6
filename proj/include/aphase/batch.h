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

#ifndef APHASE_BATCH_H
#define APHASE_BATCH_H

#include <cstdint>
#include <vector>

#include "aphase/plan.h"
#include "aphase/statistics.h"
#include "aphase/trial.h"

namespace aphase {

enum class PhiMode {
    /// phi_true uniform on [0, 2 pi) per trial.
    Random,
    /// phi_true fixed; the random initial theta of each trial supplies the
    /// equivalence to an unknown phase.
    Fixed,
};

struct BatchConfig {
    int trials = 1000;
    uint64_t master_seed = 0;
    PhiMode phi_mode = PhiMode::Random;
    double fixed_phi = 0;
    TrialOptions trial;
    BootstrapConfig bootstrap{.samples = 10000};
    /// 0 = OpenMP default.
    int workers = 0;
};

struct TrialOutcome {
    double phi_true = 0;
    double estimate = 0;
    double error = 0;
    bool estimate_defined = false;
};

struct BatchResult {
    std::vector<TrialOutcome> trials;
    TrialStatistics stats;
};

/// Trial i draws phi_true and its trial seed from a stream seeded by
/// (master_seed, i); the same master seed therefore gives every plan the same
/// phases and seeds (common random numbers). Trials run in parallel; results
/// are identical for any worker count.
BatchResult run_batch(const SequencePlan &plan, const LikelihoodSet &likelihoods, const BatchConfig &cfg);
/// Serial reference for `run_batch`; identical output.
BatchResult run_batch_serial(const SequencePlan &plan, const LikelihoodSet &likelihoods, const BatchConfig &cfg);

}  // namespace aphase

#endif
