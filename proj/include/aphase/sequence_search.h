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

#ifndef APHASE_SEQUENCE_SEARCH_H
#define APHASE_SEQUENCE_SEARCH_H

#include <cstdint>
#include <string>
#include <vector>

#include "aphase/batch.h"
#include "aphase/plan.h"

namespace aphase {

inline constexpr int kDefaultResourceCap = 64;

struct SearchConfig {
    int trials_per_plan = 2000;
    uint64_t master_seed = 0;
    int bootstrap_samples = 10000;
    int workers = 0;
    int resource_cap = kDefaultResourceCap;
    std::vector<StateClass> classes = {StateClass::dual_fock(1), StateClass::dual_fock(2), StateClass::dual_fock(4)};
    PolicyConfig policy;
};

struct RankedPlan {
    SequencePlan plan;
    TrialStatistics stats;
    /// 1-based position after sorting by Holevo variance.
    int rank = 0;
    /// Bootstrap interval overlaps the interval of the first-ranked plan.
    bool tied_with_best = false;
};

/// Evaluates every block-structured plan for N under the adaptive policy with
/// common random numbers and ranks them by Holevo variance.
std::vector<RankedPlan> optimize_sequence(int N, const LikelihoodSet &likelihoods, const SearchConfig &cfg);

enum class HeisenbergConvention {
    /// tan(pi / (N + 2)), the minimal Holevo deviation for N resources.
    TanPiOverNPlusTwo,
    /// pi / N.
    PiOverN,
};

HeisenbergConvention parse_heisenberg_convention(const std::string &name);
std::string heisenberg_convention_name(HeisenbergConvention c);
double heisenberg_deviation(int N, HeisenbergConvention convention);

struct CurveRow {
    int N = 0;
    std::string scheme;
    double deviation = 0;
    double deviation_sqrtN = 0;
    /// 95% bootstrap interval of `deviation` (unscaled).
    double ci_lo = 0;
    double ci_hi = 0;
    /// Holevo variance (deviation squared); not part of the CSV layout.
    double variance = 0;
};

struct ReferenceConfig {
    int trials = 1000;
    uint64_t master_seed = 0;
    int bootstrap_samples = 10000;
    int workers = 0;
    HeisenbergConvention heisenberg = HeisenbergConvention::TanPiOverNPlusTwo;
};

/// Curve row for a simulated batch.
CurveRow curve_row(const std::string &scheme, const TrialStatistics &stats);

/// Per N: the simulated single-photon nonadaptive scheme at `visibility`
/// (scheme "sql-v<visibility>") and the Heisenberg reference line.
std::vector<CurveRow> reference_curves(const std::vector<int> &N_list, double visibility, const ReferenceConfig &cfg);

/// Statistics of the single-photon nonadaptive scheme with N photons.
TrialStatistics simulate_sql(int N, double visibility, const ReferenceConfig &cfg);

}  // namespace aphase

#endif
