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

#ifndef APHASE_FISHER_H
#define APHASE_FISHER_H

#include <limits>
#include <utility>
#include <vector>

#include "aphase/likelihood.h"

namespace aphase {

inline constexpr double kFisherDivergent = std::numeric_limits<double>::infinity();

/// Classical Fisher information of one measurement at phase difference delta,
/// sum_x P'(x)^2 / P(x) with the analytic derivative of the cosine series.
///
/// Where an outcome probability vanishes (|P| < 1e-12) the term is replaced
/// by its limit: 2 P''(delta) if the slope also vanishes, and
/// `kFisherDivergent` otherwise.
double fisher_information(const HarmonicLikelihood &L, double delta);

struct FisherSummary {
    double max_fisher;
    double argmax_delta;
    double fisher_length;
    std::vector<std::pair<double, double>> curve;
};

/// Scans `grid` points over [0, 2 pi), then refines the best finite point by
/// golden-section search. Divergent grid points stay in `curve` but are
/// skipped when locating the maximum.
FisherSummary fisher_summary(const HarmonicLikelihood &L, int grid = 256);

/// 1 / sqrt(M F).
double cramer_rao_bound(double fisher, int repetitions);

}  // namespace aphase

#endif
