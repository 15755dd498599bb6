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

#ifndef APHASE_CALIBRATION_H
#define APHASE_CALIBRATION_H

#include <string>
#include <vector>

#include "aphase/likelihood.h"

namespace aphase {

/// Raw least-squares fringe coefficients J before state-dependent loss is
/// applied. Same layout as HarmonicLikelihood coefficients; only the constant
/// column is constrained (strictly positive).
struct CalibrationMatrix {
    int stride = 1;
    std::vector<std::vector<double>> coeffs;
    std::vector<std::string> labels;
    int photon_cost = 1;

    CalibrationMatrix() = default;
    CalibrationMatrix(int stride, std::vector<std::vector<double>> coeffs, std::vector<std::string> labels, int photon_cost);

    size_t num_outcomes() const {
        return coeffs.size();
    }
    size_t num_columns() const {
        return coeffs.empty() ? 0 : coeffs[0].size();
    }
};

/// Per-outcome retention probabilities r (max r = 1); loss = 1 - r.
struct RetentionVector {
    std::vector<double> retention;

    explicit RetentionVector(std::vector<double> retention);
    std::vector<double> loss() const;
};

/// One fringe measurement at feedback phase theta with the system phase
/// absent: normalized count frequency per outcome.
struct FringeSample {
    double theta;
    std::vector<double> frequencies;
};

/// Least-squares fit of sum_y J[x][y] cos(stride y theta) to each outcome row.
/// Needs at least 2Y + 1 distinct theta values and a full-rank design.
CalibrationMatrix fit_coefficients(const std::vector<FringeSample> &samples, int stride, int harmonics);

/// Solves sum_x r_x J[x][y] = c delta_{y,0}, so that the detection probability
/// after retention does not depend on the phase, then scales max r to 1.
RetentionVector compute_retention(const CalibrationMatrix &J);

/// Scales row x by r_x and renormalizes so the constant column sums to 1.
HarmonicLikelihood apply_retention(
    const CalibrationMatrix &J, const RetentionVector &r, double colsum_tol = kExperimentalColsumTol);

/// Loss table reported for the laboratory detector arrays, keyed by state
/// class and outcome label (n1: delta=-1 is |0,1>, delta=+1 is |1,0>).
struct LossTableEntry {
    int photon_cost;
    std::string detected_state;
    std::string outcome_label;
    double loss;
};
std::vector<LossTableEntry> laboratory_loss_table();
/// The table as a RetentionVector for one state class (1, 2 or 4 photons).
RetentionVector laboratory_retention(int photon_cost);

}  // namespace aphase

#endif
