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

#include "aphase/likelihood.h"

#include <cmath>
#include <numeric>

#include "aphase/errors.h"

namespace aphase {

namespace {

constexpr size_t kNonnegativityGrid = 4096;
constexpr double kNonnegativityTol = 1e-9;
constexpr double kConstantColumnTol = 1e-9;

}  // namespace

HarmonicLikelihood::HarmonicLikelihood(
    int stride,
    std::vector<std::vector<double>> coeffs,
    std::vector<std::string> labels,
    int photon_cost,
    double colsum_tol)
    : stride_(stride), rows_(coeffs.size()), cols_(0), photon_cost_(photon_cost), colsum_tol_(colsum_tol) {
    if (stride < 1) {
        throw ConfigError("likelihood stride must be positive, got " + std::to_string(stride));
    }
    if (photon_cost < 1) {
        throw ConfigError("likelihood photon cost must be positive, got " + std::to_string(photon_cost));
    }
    if (rows_ == 0 || coeffs[0].empty()) {
        throw ConfigError("likelihood needs at least one outcome row and one harmonic column");
    }
    cols_ = coeffs[0].size();
    coeffs_.reserve(rows_ * cols_);
    for (const auto &r : coeffs) {
        if (r.size() != cols_) {
            throw ConfigError("likelihood coefficient rows have unequal lengths");
        }
        for (double c : r) {
            if (!std::isfinite(c)) {
                throw ConfigError("likelihood coefficients must be finite");
            }
        }
        coeffs_.insert(coeffs_.end(), r.begin(), r.end());
    }
    if (labels.empty()) {
        for (size_t x = 0; x < rows_; x++) {
            labels.push_back("x=" + std::to_string(x));
        }
    }
    if (labels.size() != rows_) {
        throw ConfigError("likelihood has " + std::to_string(rows_) + " rows but " + std::to_string(labels.size()) + " labels");
    }
    labels_ = std::move(labels);

    for (size_t y = 0; y < cols_; y++) {
        double s = 0;
        for (size_t x = 0; x < rows_; x++) {
            s += coeff(x, y);
        }
        if (y == 0 && std::abs(s - 1) > kConstantColumnTol) {
            throw InvariantViolation("constant column sums to " + std::to_string(s) + ", not 1");
        }
        if (y > 0 && std::abs(s) > colsum_tol_) {
            throw InvariantViolation(
                "harmonic column y=" + std::to_string(y) + " sums to " + std::to_string(s) +
                " (tolerance " + std::to_string(colsum_tol_) + ")");
        }
    }

    double period = kTwoPi / stride_;
    for (size_t k = 0; k < kNonnegativityGrid; k++) {
        double delta = period * static_cast<double>(k) / kNonnegativityGrid;
        for (size_t x = 0; x < rows_; x++) {
            double p = probability(x, delta);
            if (p < -kNonnegativityTol) {
                throw InvariantViolation(
                    "outcome " + labels_[x] + " has negative probability " + std::to_string(p) +
                    " at delta=" + std::to_string(delta));
            }
        }
    }
}

std::vector<std::vector<double>> HarmonicLikelihood::coeff_rows() const {
    std::vector<std::vector<double>> out;
    for (size_t x = 0; x < rows_; x++) {
        auto r = row(x);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

double HarmonicLikelihood::probability(size_t x, double delta) const {
    double p = 0;
    for (size_t y = 0; y < cols_; y++) {
        p += coeff(x, y) * std::cos(stride_ * static_cast<double>(y) * delta);
    }
    return p;
}

double HarmonicLikelihood::derivative(size_t x, double delta) const {
    double d = 0;
    for (size_t y = 1; y < cols_; y++) {
        double w = stride_ * static_cast<double>(y);
        d -= coeff(x, y) * w * std::sin(w * delta);
    }
    return d;
}

double HarmonicLikelihood::second_derivative(size_t x, double delta) const {
    double d = 0;
    for (size_t y = 1; y < cols_; y++) {
        double w = stride_ * static_cast<double>(y);
        d -= coeff(x, y) * w * w * std::cos(w * delta);
    }
    return d;
}

std::vector<double> HarmonicLikelihood::probabilities(double delta) const {
    std::vector<double> out(rows_);
    for (size_t x = 0; x < rows_; x++) {
        out[x] = probability(x, delta);
    }
    return out;
}

bool approx_equal(const HarmonicLikelihood &a, const HarmonicLikelihood &b, double tol) {
    if (a.stride() != b.stride() || a.num_outcomes() != b.num_outcomes() ||
        a.harmonic_count() != b.harmonic_count() || a.photon_cost() != b.photon_cost()) {
        return false;
    }
    for (size_t x = 0; x < a.num_outcomes(); x++) {
        for (size_t y = 0; y <= a.harmonic_count(); y++) {
            if (std::abs(a.coeff(x, y) - b.coeff(x, y)) > tol) {
                return false;
            }
        }
    }
    return true;
}

double probability(const HarmonicLikelihood &L, size_t x, double delta) {
    if (x >= L.num_outcomes()) {
        throw ConfigError("outcome index " + std::to_string(x) + " out of range");
    }
    return L.probability(x, delta);
}

HarmonicLikelihood ideal_single_photon() {
    return HarmonicLikelihood(1, {{0.5, 0.5}, {0.5, -0.5}}, {"delta=-1", "delta=+1"}, 1);
}

HarmonicLikelihood ideal_biphoton() {
    return HarmonicLikelihood(2, {{0.5, 0.5}, {0.5, -0.5}}, {"|delta|=0", "|delta|=2"}, 2);
}

HarmonicLikelihood ideal_four_photon() {
    return HarmonicLikelihood(
        2,
        {{11.0 / 32, 12.0 / 32, 9.0 / 32}, {12.0 / 32, 0.0, -12.0 / 32}, {9.0 / 32, -12.0 / 32, 3.0 / 32}},
        {"|delta|=0", "|delta|=2", "|delta|=4"},
        4);
}

std::vector<std::vector<double>> printed_four_photon_experimental() {
    return {
        {11.206 / 32, 9.829 / 32, 7.596 / 32},
        {12.901 / 32, 0.595 / 32, -10.192 / 32},
        {7.893 / 32, 10.423 / 32, 2.596 / 32},
    };
}

HarmonicLikelihood experimental_fixture(ExperimentalFixture which) {
    switch (which) {
        case ExperimentalFixture::SinglePhoton:
            return HarmonicLikelihood(
                1, {{0.999 / 2, 0.976 / 2}, {1.001 / 2, -0.976 / 2}}, {"delta=-1", "delta=+1"}, 1,
                kExperimentalColsumTol);
        case ExperimentalFixture::Biphoton:
            return HarmonicLikelihood(
                2, {{0.989 / 2, 0.940 / 2}, {1.011 / 2, -0.940 / 2}}, {"|delta|=0", "|delta|=2"}, 2,
                kExperimentalColsumTol);
        case ExperimentalFixture::FourPhoton: {
            auto c = printed_four_photon_experimental();
            c[2][1] = -c[2][1];
            return HarmonicLikelihood(2, c, {"|delta|=0", "|delta|=2", "|delta|=4"}, 4, kExperimentalColsumTol);
        }
    }
    throw ConfigError("unknown experimental fixture");
}

HarmonicLikelihood noon_likelihood(int n, double visibility) {
    if (n < 1) {
        throw ConfigError("NOON photon number must be positive, got " + std::to_string(n));
    }
    if (!(visibility >= 0 && visibility <= 1)) {
        throw ConfigError("visibility must lie in [0, 1], got " + std::to_string(visibility));
    }
    return HarmonicLikelihood(n, {{0.5, 0.5 * visibility}, {0.5, -0.5 * visibility}}, {"x=0", "x=1"}, n);
}

HarmonicLikelihood independent_product(const HarmonicLikelihood &a, const HarmonicLikelihood &b) {
    int g = std::gcd(a.stride(), b.stride());
    size_t ka = a.harmonic_count() * static_cast<size_t>(a.stride() / g);
    size_t kb = b.harmonic_count() * static_cast<size_t>(b.stride() / g);
    size_t cols = ka + kb + 1;
    std::vector<std::vector<double>> coeffs;
    std::vector<std::string> labels;
    for (size_t x1 = 0; x1 < a.num_outcomes(); x1++) {
        for (size_t x2 = 0; x2 < b.num_outcomes(); x2++) {
            std::vector<double> r(cols, 0.0);
            for (size_t y1 = 0; y1 <= a.harmonic_count(); y1++) {
                for (size_t y2 = 0; y2 <= b.harmonic_count(); y2++) {
                    long f1 = static_cast<long>(y1) * (a.stride() / g);
                    long f2 = static_cast<long>(y2) * (b.stride() / g);
                    double c = a.coeff(x1, y1) * b.coeff(x2, y2);
                    // cos(u) cos(v) = (cos(u + v) + cos(u - v)) / 2
                    r[static_cast<size_t>(f1 + f2)] += c / 2;
                    r[static_cast<size_t>(std::labs(f1 - f2))] += c / 2;
                }
            }
            coeffs.push_back(std::move(r));
            labels.push_back(a.labels()[x1] + "&" + b.labels()[x2]);
        }
    }
    double tol = a.colsum_tol() + b.colsum_tol() + a.colsum_tol() * b.colsum_tol();
    return HarmonicLikelihood(g, std::move(coeffs), std::move(labels), a.photon_cost() + b.photon_cost(), tol);
}

}  // namespace aphase
