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

#include "aphase/sequence_search.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aphase/errors.h"

namespace aphase {

std::vector<RankedPlan> optimize_sequence(int N, const LikelihoodSet &likelihoods, const SearchConfig &cfg) {
    if (N < 1 || N > cfg.resource_cap) {
        throw ConfigError(
            "sequence search needs 1 <= N <= " + std::to_string(cfg.resource_cap) + ", got " + std::to_string(N));
    }
    BatchConfig batch;
    batch.trials = cfg.trials_per_plan;
    batch.master_seed = cfg.master_seed;
    batch.bootstrap.samples = cfg.bootstrap_samples;
    batch.workers = cfg.workers;
    batch.trial.policy = PolicyKind::Adaptive;
    batch.trial.policy_config = cfg.policy;

    std::vector<RankedPlan> ranked;
    for (const auto &plan : enumerate_plans(N, cfg.classes)) {
        BatchResult r = run_batch(plan, likelihoods, batch);
        ranked.push_back({plan, std::move(r.stats), 0, false});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const RankedPlan &a, const RankedPlan &b) {
        return a.stats.holevo_variance < b.stats.holevo_variance;
    });
    for (size_t i = 0; i < ranked.size(); i++) {
        ranked[i].rank = static_cast<int>(i) + 1;
        ranked[i].tied_with_best = ranked[i].stats.bootstrap_ci.lo <= ranked[0].stats.bootstrap_ci.hi;
    }
    return ranked;
}

HeisenbergConvention parse_heisenberg_convention(const std::string &name) {
    if (name == "tan") {
        return HeisenbergConvention::TanPiOverNPlusTwo;
    }
    if (name == "pi-over-n") {
        return HeisenbergConvention::PiOverN;
    }
    throw ConfigError("unknown Heisenberg convention '" + name + "'; expected tan or pi-over-n");
}

std::string heisenberg_convention_name(HeisenbergConvention c) {
    return c == HeisenbergConvention::TanPiOverNPlusTwo ? "tan" : "pi-over-n";
}

double heisenberg_deviation(int N, HeisenbergConvention convention) {
    if (N < 1) {
        throw ConfigError("Heisenberg reference needs N >= 1");
    }
    if (convention == HeisenbergConvention::TanPiOverNPlusTwo) {
        return std::tan(kPi / (N + 2));
    }
    return kPi / N;
}

CurveRow curve_row(const std::string &scheme, const TrialStatistics &stats) {
    return {
        stats.total_resources,
        scheme,
        stats.holevo_deviation,
        stats.sqrtN_scaled_deviation,
        stats.bootstrap_ci.lo,
        stats.bootstrap_ci.hi,
        stats.holevo_variance,
    };
}

TrialStatistics simulate_sql(int N, double visibility, const ReferenceConfig &cfg) {
    LikelihoodSet set(FixtureSet::Ideal);
    set.set_override(StateClass::dual_fock(1), noon_likelihood(1, visibility));
    BatchConfig batch;
    batch.trials = cfg.trials;
    batch.master_seed = cfg.master_seed;
    batch.bootstrap.samples = cfg.bootstrap_samples;
    batch.workers = cfg.workers;
    batch.trial.policy = PolicyKind::Nonadaptive;
    SequencePlan plan({{StateClass::dual_fock(1), N}});
    return run_batch(plan, set, batch).stats;
}

std::vector<CurveRow> reference_curves(const std::vector<int> &N_list, double visibility, const ReferenceConfig &cfg) {
    char scheme[64];
    std::snprintf(scheme, sizeof(scheme), "sql-v%.3f", visibility);
    std::vector<CurveRow> rows;
    for (int N : N_list) {
        rows.push_back(curve_row(scheme, simulate_sql(N, visibility, cfg)));
        double h = heisenberg_deviation(N, cfg.heisenberg);
        double hs = h * std::sqrt(static_cast<double>(N));
        rows.push_back({N, "heisenberg-" + heisenberg_convention_name(cfg.heisenberg), h, hs, h, h, h * h});
    }
    return rows;
}

}  // namespace aphase
