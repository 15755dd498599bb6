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

#include "aphase/policy.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "aphase/errors.h"
#include "aphase/optimize1d.h"

namespace aphase {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kVanishingBranch = 1e-12;

double wrap_2pi(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0) {
        w += kTwoPi;
    }
    return w >= kTwoPi ? 0.0 : w;
}

/// Post-detection moments as trigonometric polynomials in theta:
///     moment_j(theta) = sum_{k=-Y..Y} coef[x][k + Y] * exp(i k stride theta).
/// Kept for j = 0 (predictive probability) and j = 1 (unnormalized a_1).
class BranchPolynomials {
   public:
    BranchPolynomials(const PhasePosterior &p, const HarmonicLikelihood &L)
        : outcomes_(L.num_outcomes()), harmonics_(static_cast<int>(L.harmonic_count())), stride_(L.stride()) {
        size_t width = static_cast<size_t>(2 * harmonics_ + 1);
        first_.assign(outcomes_ * width, 0.0);
        zeroth_.assign(outcomes_ * width, 0.0);
        for (size_t x = 0; x < outcomes_; x++) {
            std::complex<double> *u = &first_[x * width + static_cast<size_t>(harmonics_)];
            std::complex<double> *z = &zeroth_[x * width + static_cast<size_t>(harmonics_)];
            u[0] = L.coeff(x, 0) * p.moment(1);
            z[0] = L.coeff(x, 0);
            for (int y = 1; y <= harmonics_; y++) {
                int f = stride_ * y;
                double c = 0.5 * L.coeff(x, static_cast<size_t>(y));
                u[-y] = c * p.moment(1 + f);
                u[y] = c * p.moment(1 - f);
                z[-y] = c * p.moment(f);
                z[y] = c * p.moment(-f);
            }
        }
    }

    /// Fills per-outcome (probability, unnormalized a_1) at theta.
    void evaluate(double theta, std::vector<double> &prob, std::vector<std::complex<double>> &first) const {
        size_t width = static_cast<size_t>(2 * harmonics_ + 1);
        std::complex<double> phases[17];
        std::complex<double> w = std::polar(1.0, stride_ * theta);
        phases[harmonics_] = 1;
        for (int k = 1; k <= harmonics_; k++) {
            phases[harmonics_ + k] = phases[harmonics_ + k - 1] * w;
            phases[harmonics_ - k] = std::conj(phases[harmonics_ + k]);
        }
        prob.resize(outcomes_);
        first.resize(outcomes_);
        for (size_t x = 0; x < outcomes_; x++) {
            std::complex<double> u = 0;
            std::complex<double> z = 0;
            for (size_t k = 0; k < width; k++) {
                u += first_[x * width + k] * phases[k];
                z += zeroth_[x * width + k] * phases[k];
            }
            prob[x] = z.real();
            first[x] = u;
        }
    }

    double sharpness_objective(double theta) const {
        evaluate(theta, prob_, first_buf_);
        double s = 0;
        for (const auto &u : first_buf_) {
            s += std::abs(u);
        }
        return s;
    }

    double variance_objective(double theta) const {
        evaluate(theta, prob_, first_buf_);
        double v = 0;
        for (size_t x = 0; x < outcomes_; x++) {
            double u2 = std::norm(first_buf_[x]);
            if (prob_[x] <= 0 || u2 < kVanishingBranch * kVanishingBranch) {
                continue;
            }
            v += prob_[x] * (prob_[x] * prob_[x] / u2 - 1);
        }
        return v;
    }

   private:
    size_t outcomes_;
    int harmonics_;
    int stride_;
    std::vector<std::complex<double>> first_;
    std::vector<std::complex<double>> zeroth_;
    mutable std::vector<double> prob_;
    mutable std::vector<std::complex<double>> first_buf_;
};

}  // namespace

void PolicyConfig::validate() const {
    if (grid_points < 64) {
        throw ConfigError("policy grid needs at least 64 points, got " + std::to_string(grid_points));
    }
    if (refine_iterations < 0) {
        throw ConfigError("policy refine iterations must be nonnegative");
    }
}

double expected_sharpness(const PhasePosterior &p, const HarmonicLikelihood &L, double theta) {
    return BranchPolynomials(p, L).sharpness_objective(theta);
}

double expected_holevo_variance(const PhasePosterior &p, const HarmonicLikelihood &L, double theta) {
    return BranchPolynomials(p, L).variance_objective(theta);
}

double adaptive_theta(const PhasePosterior &p, const HarmonicLikelihood &L, const PolicyConfig &cfg, Rng &rng) {
    cfg.validate();
    if (L.harmonic_count() > 8) {
        throw ConfigError("policy supports at most 8 harmonics per likelihood");
    }
    BranchPolynomials branches(p, L);
    auto score = [&](double theta) {
        return cfg.objective == PolicyObjective::ExpectedSharpness ? branches.sharpness_objective(theta)
                                                                   : -branches.variance_objective(theta);
    };

    size_t grid = static_cast<size_t>(cfg.grid_points);
    double step = kTwoPi / static_cast<double>(grid);
    std::vector<double> values(grid);
    double best = -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    for (size_t g = 0; g < grid; g++) {
        values[g] = score(step * static_cast<double>(g));
        best = std::max(best, values[g]);
        worst = std::min(worst, values[g]);
    }
    if (best - worst <= kTieTol) {
        return rng.uniform() * kTwoPi;
    }
    std::vector<size_t> tied;
    for (size_t g = 0; g < grid; g++) {
        if (values[g] >= best - kTieTol) {
            tied.push_back(g);
        }
    }
    size_t pick = tied.size() == 1 ? tied[0] : tied[rng.below(tied.size())];
    double theta = step * static_cast<double>(pick);
    if (cfg.refine_iterations > 0) {
        auto [t, v] = golden_section_maximize(score, theta - step, theta + step, cfg.refine_iterations);
        if (v > values[pick]) {
            theta = t;
        }
    }
    return wrap_2pi(theta);
}

double adaptive_theta(const PhasePosterior &p, const HarmonicLikelihood &L, const PolicyConfig &cfg) {
    Rng rng(cfg.rng_seed);
    return adaptive_theta(p, L, cfg, rng);
}

double nonadaptive_theta(int total_resources, int index, double theta0) {
    if (total_resources < 1) {
        throw ConfigError("nonadaptive schedule needs N >= 1");
    }
    if (index < 0 || index >= total_resources) {
        throw ConfigError("nonadaptive index " + std::to_string(index) + " outside [0, " +
                          std::to_string(total_resources) + ")");
    }
    return wrap_2pi(theta0 + index * kPi / total_resources);
}

}  // namespace aphase
