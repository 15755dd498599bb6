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

#ifndef APHASE_TRIAL_H
#define APHASE_TRIAL_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "aphase/calibration.h"
#include "aphase/plan.h"
#include "aphase/policy.h"
#include "aphase/posterior.h"

namespace aphase {

enum class PolicyKind { Adaptive, Nonadaptive };

PolicyKind parse_policy_kind(const std::string &name);
std::string policy_kind_name(PolicyKind k);

/// Per-class retention used to simulate software-discarded detections.
using RetentionTable = std::map<StateClass, RetentionVector>;

struct TrialOptions {
    PolicyKind policy = PolicyKind::Adaptive;
    PolicyConfig policy_config;
    /// When set, detections are discarded with probability loss(outcome);
    /// discarded detections are retried and do not count towards N.
    std::optional<RetentionTable> state_loss;
};

struct Detection {
    StateClass state;
    double theta = 0;
    size_t outcome = 0;
    bool discarded = false;
};

struct MeasurementRecord {
    std::vector<Detection> detections;
    double phi_true = 0;
    /// Initial phase of the nonadaptive schedule (unused for adaptive runs).
    double theta0 = 0;
    /// arg(a_1); 0 when the posterior a_1 vanishes (see estimate_defined).
    double estimate = 0;
    bool estimate_defined = false;
    int total_resources = 0;
    PhasePosterior final_posterior = PhasePosterior::uniform(1);

    size_t retained_count() const;
};

/// Runs one simulated phase measurement: for every detection, choose theta by
/// the policy, sample an outcome from P(x | phi_true - theta) and update the
/// posterior. Deterministic in `seed`.
MeasurementRecord run_trial(
    const SequencePlan &plan,
    const LikelihoodSet &likelihoods,
    double phi_true,
    const TrialOptions &options,
    uint64_t seed);

/// Discards each detection independently with probability loss(outcome) of
/// its class. Already-discarded entries stay discarded.
std::vector<Detection> simulate_state_loss(
    std::span<const Detection> stream, const RetentionTable &retention, uint64_t seed);
/// Same retention for every detection in the stream.
std::vector<Detection> simulate_state_loss(
    std::span<const Detection> stream, const RetentionVector &retention, uint64_t seed);

/// Laboratory loss table as a RetentionTable for n1, n2 and n4.
RetentionTable laboratory_retention_table();

}  // namespace aphase

#endif
