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
#include <string>

#include "aphase/errors.h"

namespace aphase {

PolicyKind parse_policy_kind(const std::string &name) {
    if (name == "adaptive") {
        return PolicyKind::Adaptive;
    }
    if (name == "sql" || name == "nonadaptive") {
        return PolicyKind::Nonadaptive;
    }
    throw ConfigError("unknown policy '" + name + "'; expected adaptive or sql");
}

std::string policy_kind_name(PolicyKind k) {
    return k == PolicyKind::Adaptive ? "adaptive" : "sql";
}

size_t MeasurementRecord::retained_count() const {
    size_t n = 0;
    for (const auto &d : detections) {
        n += d.discarded ? 0 : 1;
    }
    return n;
}

namespace {

size_t sample_outcome(const HarmonicLikelihood &L, double delta, Rng &rng) {
    std::vector<double> p = L.probabilities(delta);
    double total = 0;
    for (double &v : p) {
        if (v < -1e-9) {
            throw InvariantViolation("negative outcome probability " + std::to_string(v));
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (std::abs(total - 1) > L.colsum_tol() * static_cast<double>(L.harmonic_count() + 1) + 1e-9) {
        throw InvariantViolation("outcome probabilities sum to " + std::to_string(total));
    }
    double u = rng.uniform() * total;
    double acc = 0;
    for (size_t x = 0; x < p.size(); x++) {
        acc += p[x];
        if (u < acc) {
            return x;
        }
    }
    // u landed in the rounding gap at the top; take the last possible outcome.
    for (size_t x = p.size(); x-- > 0;) {
        if (p[x] > 0) {
            return x;
        }
    }
    return p.size() - 1;
}

bool keep_detection(const RetentionTable &table, const StateClass &state, size_t outcome, Rng &rng) {
    auto it = table.find(state);
    if (it == table.end()) {
        return true;
    }
    const auto &r = it->second.retention;
    if (outcome >= r.size()) {
        throw ConfigError("retention vector for " + state.name() + " has no entry for outcome " + std::to_string(outcome));
    }
    return rng.uniform() < r[outcome];
}

}  // namespace

MeasurementRecord run_trial(
    const SequencePlan &plan,
    const LikelihoodSet &likelihoods,
    double phi_true,
    const TrialOptions &options,
    uint64_t seed) {
    Rng rng(seed);
    MeasurementRecord rec;
    rec.phi_true = phi_true;
    rec.total_resources = plan.total_resources();

    std::vector<HarmonicLikelihood> models;
    int capacity = 0;
    for (const auto &b : plan.blocks()) {
        models.push_back(likelihoods.resolve(b.state));
        capacity += models.back().max_frequency() * b.reps;
    }
    PhasePosterior post = PhasePosterior::uniform(std::max(1, capacity));

    if (options.policy == PolicyKind::Nonadaptive) {
        rec.theta0 = rng.uniform() * kTwoPi;
    }
    int index = 0;
    for (size_t bi = 0; bi < plan.blocks().size(); bi++) {
        const auto &block = plan.blocks()[bi];
        const auto &L = models[bi];
        int kept = 0;
        while (kept < block.reps) {
            double theta = options.policy == PolicyKind::Adaptive
                               ? adaptive_theta(post, L, options.policy_config, rng)
                               : nonadaptive_theta(plan.total_resources(), index, rec.theta0);
            size_t x = sample_outcome(L, phi_true - theta, rng);
            bool keep = !options.state_loss || keep_detection(*options.state_loss, block.state, x, rng);
            rec.detections.push_back({block.state, theta, x, !keep});
            if (!keep) {
                continue;
            }
            post = bayes_update(post, L, x, theta);
            kept++;
            index++;
        }
    }

    auto e = estimate(post);
    rec.estimate_defined = e.has_value();
    rec.estimate = e.value_or(0.0);
    rec.final_posterior = std::move(post);
    return rec;
}

std::vector<Detection> simulate_state_loss(
    std::span<const Detection> stream, const RetentionTable &retention, uint64_t seed) {
    Rng rng(seed);
    std::vector<Detection> out(stream.begin(), stream.end());
    for (auto &d : out) {
        if (d.discarded) {
            continue;
        }
        d.discarded = !keep_detection(retention, d.state, d.outcome, rng);
    }
    return out;
}

std::vector<Detection> simulate_state_loss(
    std::span<const Detection> stream, const RetentionVector &retention, uint64_t seed) {
    Rng rng(seed);
    std::vector<Detection> out(stream.begin(), stream.end());
    for (auto &d : out) {
        if (d.discarded) {
            continue;
        }
        if (d.outcome >= retention.retention.size()) {
            throw ConfigError("retention vector has no entry for outcome " + std::to_string(d.outcome));
        }
        d.discarded = !(rng.uniform() < retention.retention[d.outcome]);
    }
    return out;
}

RetentionTable laboratory_retention_table() {
    RetentionTable t;
    for (int n : {1, 2, 4}) {
        t.emplace(StateClass::dual_fock(n), laboratory_retention(n));
    }
    return t;
}

}  // namespace aphase
