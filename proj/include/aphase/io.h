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

#ifndef APHASE_IO_H
#define APHASE_IO_H

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aphase/batch.h"
#include "aphase/calibration.h"
#include "aphase/likelihood.h"
#include "aphase/plan.h"
#include "aphase/posterior.h"
#include "aphase/sequence_search.h"
#include "json.hpp"

namespace aphase {

/// {"stride", "coeffs" (row-major nested rows), "labels", "photon_cost"}.
nlohmann::json likelihood_to_json(const HarmonicLikelihood &L);
HarmonicLikelihood likelihood_from_json(const nlohmann::json &j, double colsum_tol = kExperimentalColsumTol);

/// Accepts the likelihood layout or a bare nested coefficient array.
CalibrationMatrix calibration_from_json(const nlohmann::json &j);
nlohmann::json retention_to_json(const RetentionVector &r, const std::vector<std::string> &labels);

/// {"degree", "moments": [[re, im], ...]}.
nlohmann::json posterior_to_json(const PhasePosterior &p);
PhasePosterior posterior_from_json(const nlohmann::json &j);

struct PlanFile {
    SequencePlan plan;
    FixtureSet fixtures;
};
/// {"N", "blocks": [{"class", "reps"}], "fixtures"}. A stated N must match
/// the blocks.
nlohmann::json plan_to_json(const SequencePlan &plan, FixtureSet fixtures);
PlanFile plan_from_json(const nlohmann::json &j);

nlohmann::json statistics_to_json(const TrialStatistics &s);

/// Writes "delta,fisher" rows.
void write_fisher_csv(std::ostream &out, const std::vector<std::pair<double, double>> &curve);
/// Writes "trial,phi_true,estimate,error" rows.
void write_trials_csv(std::ostream &out, const std::vector<TrialOutcome> &trials);
/// Writes "N,scheme,deviation,deviation_sqrtN,ci_lo,ci_hi" rows.
void write_curve_csv(std::ostream &out, const std::vector<CurveRow> &rows);

/// Shortest round-trip decimal representation used in all CSV output.
std::string format_number(double v);

}  // namespace aphase

#endif
