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

#include "aphase/batch.h"

#include <string>

#include "aphase/errors.h"
#include "aphase/parallel.h"
#include "aphase/rng.h"

namespace aphase {

namespace {

void check_config(const BatchConfig &cfg) {
    if (cfg.trials < 2) {
        throw ConfigError("a batch needs at least 2 trials, got " + std::to_string(cfg.trials));
    }
    cfg.trial.policy_config.validate();
}

TrialOutcome one_trial(const SequencePlan &plan, const LikelihoodSet &likelihoods, const BatchConfig &cfg, int index) {
    Rng stream(derive_seed(cfg.master_seed, static_cast<uint64_t>(index)));
    double phi = stream.uniform() * kTwoPi;
    if (cfg.phi_mode == PhiMode::Fixed) {
        phi = cfg.fixed_phi;
    }
    uint64_t trial_seed = stream.next();
    MeasurementRecord rec = run_trial(plan, likelihoods, phi, cfg.trial, trial_seed);
    return {phi, rec.estimate, wrap_pi(rec.estimate - phi), rec.estimate_defined};
}

BatchResult finish(std::vector<TrialOutcome> trials, const SequencePlan &plan, const BatchConfig &cfg) {
    std::vector<double> estimates;
    std::vector<double> truths;
    size_t undefined = 0;
    for (const auto &t : trials) {
        estimates.push_back(t.estimate);
        truths.push_back(t.phi_true);
        undefined += t.estimate_defined ? 0 : 1;
    }
    BootstrapConfig boot = cfg.bootstrap;
    boot.seed = derive_seed(cfg.master_seed, 0xB007);
    boot.workers = cfg.workers;
    BatchResult r{std::move(trials), {}};
    r.stats = summarize_trials(std::move(estimates), truths, plan.total_resources(), undefined, boot);
    return r;
}

}  // namespace

BatchResult run_batch_serial(const SequencePlan &plan, const LikelihoodSet &likelihoods, const BatchConfig &cfg) {
    check_config(cfg);
    std::vector<TrialOutcome> trials(static_cast<size_t>(cfg.trials));
    for (int i = 0; i < cfg.trials; i++) {
        trials[static_cast<size_t>(i)] = one_trial(plan, likelihoods, cfg, i);
    }
    BatchConfig serial = cfg;
    serial.workers = 1;
    return finish(std::move(trials), plan, serial);
}

BatchResult run_batch(const SequencePlan &plan, const LikelihoodSet &likelihoods, const BatchConfig &cfg) {
    check_config(cfg);
    std::vector<TrialOutcome> trials(static_cast<size_t>(cfg.trials));
    int workers = resolve_workers(cfg.workers);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (int i = 0; i < cfg.trials; i++) {
        try {
            trials[static_cast<size_t>(i)] = one_trial(plan, likelihoods, cfg, i);
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return finish(std::move(trials), plan, cfg);
}

}  // namespace aphase
