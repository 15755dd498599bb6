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

#include "aphase/posterior.h"

#include <cmath>
#include <limits>
#include <string>

#include "aphase/errors.h"

namespace aphase {

namespace {
constexpr double kVanishingSharpness = 1e-12;
}

PhasePosterior::PhasePosterior(std::vector<std::complex<double>> moments, int degree)
    : moments_(std::move(moments)), degree_(degree) {
}

PhasePosterior PhasePosterior::uniform(int capacity) {
    if (capacity < 1) {
        throw ConfigError("posterior needs at least one harmonic, got capacity " + std::to_string(capacity));
    }
    std::vector<std::complex<double>> m(static_cast<size_t>(capacity) + 1);
    m[0] = 1;
    return PhasePosterior(std::move(m), 0);
}

PhasePosterior PhasePosterior::from_moments(std::vector<std::complex<double>> moments, int degree) {
    if (moments.size() < 2) {
        throw ConfigError("posterior snapshot needs at least two moments");
    }
    if (moments[0] != std::complex<double>(1, 0)) {
        throw InvariantViolation("posterior snapshot is not normalized (a_0 != 1)");
    }
    if (degree < 0 || degree >= static_cast<int>(moments.size())) {
        throw ConfigError("posterior snapshot degree out of range");
    }
    return PhasePosterior(std::move(moments), degree);
}

std::complex<double> PhasePosterior::moment(int j) const {
    if (j < 0) {
        return std::conj(moment(-j));
    }
    if (j > degree_) {
        return 0;
    }
    return moments_[static_cast<size_t>(j)];
}

PhasePosterior uniform_prior(int capacity) {
    return PhasePosterior::uniform(capacity);
}

namespace {

// Unnormalized moment j of P(phi) * P(x | phi, theta).
std::complex<double> updated_moment(const PhasePosterior &p, const HarmonicLikelihood &L, size_t x, double theta, int j) {
    std::complex<double> acc = L.coeff(x, 0) * p.moment(j);
    for (size_t y = 1; y <= L.harmonic_count(); y++) {
        int f = L.stride() * static_cast<int>(y);
        std::complex<double> rot = std::polar(1.0, f * theta);
        acc += L.coeff(x, y) * 0.5 * (std::conj(rot) * p.moment(j + f) + rot * p.moment(j - f));
    }
    return acc;
}

}  // namespace

double predictive_probability(const PhasePosterior &p, const HarmonicLikelihood &L, size_t x, double theta) {
    return updated_moment(p, L, x, theta, 0).real();
}

PhasePosterior bayes_update(const PhasePosterior &p, const HarmonicLikelihood &L, size_t x, double theta) {
    if (x >= L.num_outcomes()) {
        throw ConfigError("outcome index " + std::to_string(x) + " out of range");
    }
    int degree = p.degree() + L.max_frequency();
    if (degree > p.capacity()) {
        throw InvariantViolation(
            "posterior capacity " + std::to_string(p.capacity()) + " too small for degree " + std::to_string(degree));
    }
    double norm = updated_moment(p, L, x, theta, 0).real();
    if (!(norm > 0)) {
        throw InvariantViolation("outcome " + L.labels()[x] + " is impossible under the current posterior");
    }
    std::vector<std::complex<double>> m(p.moments().size());
    m[0] = 1;
    for (int j = 1; j <= degree; j++) {
        m[static_cast<size_t>(j)] = updated_moment(p, L, x, theta, j) / norm;
    }
    return PhasePosterior(std::move(m), degree);
}

double sharpness(const PhasePosterior &p) {
    return std::abs(p.moment(1));
}

std::optional<double> estimate(const PhasePosterior &p) {
    std::complex<double> a1 = p.moment(1);
    if (std::abs(a1) < kVanishingSharpness) {
        return std::nullopt;
    }
    double e = std::arg(a1);
    if (e < 0) {
        e += kTwoPi;
    }
    return e >= kTwoPi ? 0.0 : e;
}

double holevo_variance(const PhasePosterior &p) {
    double s = sharpness(p);
    if (s < kVanishingSharpness) {
        return std::numeric_limits<double>::infinity();
    }
    return 1 / (s * s) - 1;
}

double density(const PhasePosterior &p, double phi) {
    double acc = 1;
    for (int j = 1; j <= p.degree(); j++) {
        acc += 2 * (p.moment(j) * std::polar(1.0, -j * phi)).real();
    }
    return acc / kTwoPi;
}

}  // namespace aphase
