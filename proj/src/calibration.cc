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

#include "aphase/calibration.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "aphase/errors.h"

namespace aphase {

CalibrationMatrix::CalibrationMatrix(
    int stride, std::vector<std::vector<double>> coeffs, std::vector<std::string> labels, int photon_cost)
    : stride(stride), coeffs(std::move(coeffs)), labels(std::move(labels)), photon_cost(photon_cost) {
    if (stride < 1 || photon_cost < 1) {
        throw ConfigError("calibration matrix needs positive stride and photon cost");
    }
    if (this->coeffs.empty() || this->coeffs[0].empty()) {
        throw ConfigError("calibration matrix is empty");
    }
    for (const auto &row : this->coeffs) {
        if (row.size() != this->coeffs[0].size()) {
            throw ConfigError("calibration matrix rows have unequal lengths");
        }
        if (!(row[0] > 0)) {
            throw InvariantViolation("calibration matrix constant column must be positive");
        }
    }
    if (this->labels.empty()) {
        for (size_t x = 0; x < this->coeffs.size(); x++) {
            this->labels.push_back("x=" + std::to_string(x));
        }
    }
    if (this->labels.size() != this->coeffs.size()) {
        throw ConfigError("calibration matrix label count does not match its rows");
    }
}

RetentionVector::RetentionVector(std::vector<double> r) : retention(std::move(r)) {
    if (retention.empty()) {
        throw ConfigError("retention vector is empty");
    }
    double top = 0;
    for (double v : retention) {
        if (!(v > 0 && v <= 1 + 1e-12)) {
            throw InvariantViolation("retention probabilities must lie in (0, 1], got " + std::to_string(v));
        }
        top = std::max(top, v);
    }
    if (std::abs(top - 1) > 1e-12) {
        throw InvariantViolation("largest retention probability must be 1, got " + std::to_string(top));
    }
}

std::vector<double> RetentionVector::loss() const {
    std::vector<double> out;
    for (double v : retention) {
        out.push_back(1 - v);
    }
    return out;
}

CalibrationMatrix fit_coefficients(const std::vector<FringeSample> &samples, int stride, int harmonics) {
    if (stride < 1 || harmonics < 0) {
        throw ConfigError("fit needs a positive stride and nonnegative harmonic count");
    }
    if (samples.empty()) {
        throw ConfigError("fit needs fringe samples");
    }
    size_t outcomes = samples[0].frequencies.size();
    std::set<double> distinct;
    for (const auto &s : samples) {
        if (s.frequencies.size() != outcomes || outcomes == 0) {
            throw ConfigError("fringe samples disagree on the number of outcomes");
        }
        distinct.insert(std::remainder(s.theta, kTwoPi));
    }
    size_t cols = static_cast<size_t>(harmonics) + 1;
    if (distinct.size() < 2 * static_cast<size_t>(harmonics) + 1) {
        throw ConfigError(
            "fit of " + std::to_string(harmonics) + " harmonics needs at least " + std::to_string(2 * harmonics + 1) +
            " distinct theta values, got " + std::to_string(distinct.size()));
    }

    Eigen::MatrixXd design(samples.size(), cols);
    Eigen::MatrixXd target(samples.size(), outcomes);
    for (size_t i = 0; i < samples.size(); i++) {
        for (size_t y = 0; y < cols; y++) {
            design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(y)) =
                std::cos(stride * static_cast<double>(y) * samples[i].theta);
        }
        for (size_t x = 0; x < outcomes; x++) {
            target(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(x)) = samples[i].frequencies[x];
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < static_cast<Eigen::Index>(cols)) {
        throw ConfigError("fringe design matrix is rank deficient; theta samples do not separate the harmonics");
    }
    Eigen::MatrixXd solution = qr.solve(target);

    std::vector<std::vector<double>> coeffs(outcomes, std::vector<double>(cols));
    for (size_t x = 0; x < outcomes; x++) {
        for (size_t y = 0; y < cols; y++) {
            coeffs[x][y] = solution(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
        }
    }
    return CalibrationMatrix(stride, std::move(coeffs), {}, 1);
}

RetentionVector compute_retention(const CalibrationMatrix &J) {
    auto rows = static_cast<Eigen::Index>(J.num_outcomes());
    auto cols = static_cast<Eigen::Index>(J.num_columns());
    if (cols > rows) {
        throw InvariantViolation(
            "calibration system is overdetermined: " + std::to_string(cols) + " harmonic columns for " +
            std::to_string(rows) + " outcomes");
    }
    // Rows of the system are harmonics; missing harmonics are zero rows.
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, rows);
    for (Eigen::Index x = 0; x < rows; x++) {
        for (Eigen::Index y = 0; y < cols; y++) {
            system(y, x) = J.coeffs[static_cast<size_t>(x)][static_cast<size_t>(y)];
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) {
        throw InvariantViolation("calibration matrix is singular; retention is not determined");
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    rhs(0) = 1;
    Eigen::VectorXd r = lu.solve(rhs);
    double top = r.maxCoeff();
    if (!(top > 0)) {
        throw InvariantViolation("calibration yields no positive retention");
    }
    std::vector<double> out(static_cast<size_t>(rows));
    for (Eigen::Index x = 0; x < rows; x++) {
        double v = r(x) / top;
        if (!(v > 0)) {
            throw InvariantViolation(
                "invalid calibration: retention for " + J.labels[static_cast<size_t>(x)] + " is " + std::to_string(v));
        }
        out[static_cast<size_t>(x)] = v;
    }
    return RetentionVector(std::move(out));
}

HarmonicLikelihood apply_retention(const CalibrationMatrix &J, const RetentionVector &r, double colsum_tol) {
    if (r.retention.size() != J.num_outcomes()) {
        throw ConfigError(
            "retention has " + std::to_string(r.retention.size()) + " entries for " +
            std::to_string(J.num_outcomes()) + " outcomes");
    }
    auto coeffs = J.coeffs;
    double constant = 0;
    for (size_t x = 0; x < coeffs.size(); x++) {
        constant += r.retention[x] * coeffs[x][0];
    }
    for (size_t x = 0; x < coeffs.size(); x++) {
        for (double &c : coeffs[x]) {
            c *= r.retention[x] / constant;
        }
    }
    return HarmonicLikelihood(J.stride, std::move(coeffs), J.labels, J.photon_cost, colsum_tol);
}

std::vector<LossTableEntry> laboratory_loss_table() {
    return {
        {1, "|1,0>", "delta=+1", 0.0},
        {1, "|0,1>", "delta=-1", 0.1276},
        {2, "|1,1>", "|delta|=0", 0.1975},
        {2, "|2,0> or |0,2>", "|delta|=2", 0.0},
        {4, "|2,2>", "|delta|=0", 0.2304},
        {4, "|3,1> or |1,3>", "|delta|=2", 0.3395},
        {4, "|4,0> or |0,4>", "|delta|=4", 0.0},
    };
}

RetentionVector laboratory_retention(int photon_cost) {
    switch (photon_cost) {
        case 1:
            return RetentionVector({1 - 0.1276, 1.0});
        case 2:
            return RetentionVector({1 - 0.1975, 1.0});
        case 4:
            return RetentionVector({1 - 0.2304, 1 - 0.3395, 1.0});
        default:
            throw ConfigError("no laboratory loss table for " + std::to_string(photon_cost) + "-photon states");
    }
}

}  // namespace aphase
