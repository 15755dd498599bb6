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

#include "aphase/fock.h"

#include <cmath>
#include <numeric>

#include "aphase/errors.h"

namespace aphase {

namespace {

constexpr double kNormTol = 1e-12;
constexpr size_t kProjectionGrid = 256;
constexpr double kFitResidualTol = 1e-10;

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; i++) {
        f *= i;
    }
    return f;
}

double binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

void check_cap(int n, int cap) {
    if (n < 0) {
        throw ConfigError("photon numbers must be nonnegative");
    }
    if (n > cap) {
        throw ConfigError("state has " + std::to_string(n) + " photons, above the cap of " + std::to_string(cap));
    }
}

std::complex<double> ipow(int k) {
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[k % 4];
}

}  // namespace

TwoModeFockState::TwoModeFockState(std::vector<std::complex<double>> amplitudes, int photon_cap)
    : amplitudes_(std::move(amplitudes)), photon_cap_(photon_cap) {
    if (amplitudes_.empty()) {
        throw ConfigError("a two-mode state needs at least one amplitude");
    }
    check_cap(total_photons(), photon_cap_);
    double nrm = norm_squared();
    if (std::abs(nrm - 1) > kNormTol) {
        throw InvariantViolation("state is not normalized: |psi|^2 = " + std::to_string(nrm));
    }
}

TwoModeFockState TwoModeFockState::number_state(int n1, int n2, int photon_cap) {
    check_cap(n1, photon_cap);
    check_cap(n2, photon_cap);
    check_cap(n1 + n2, photon_cap);
    std::vector<std::complex<double>> amps(static_cast<size_t>(n1 + n2 + 1));
    amps[static_cast<size_t>(n1)] = 1;
    return TwoModeFockState(std::move(amps), photon_cap);
}

TwoModeFockState TwoModeFockState::noon(int n, int photon_cap) {
    if (n < 1) {
        throw ConfigError("NOON state needs at least one photon");
    }
    check_cap(n, photon_cap);
    std::vector<std::complex<double>> amps(static_cast<size_t>(n + 1));
    amps[0] = M_SQRT1_2;
    amps[static_cast<size_t>(n)] = M_SQRT1_2;
    return TwoModeFockState(std::move(amps), photon_cap);
}

double TwoModeFockState::norm_squared() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

double OutcomeDistribution::probability_of(int photons_out_one) const {
    for (const auto &e : entries) {
        if (e.photons_out_one == photons_out_one) {
            return e.probability;
        }
    }
    return 0;
}

TwoModeFockState beamsplitter(const TwoModeFockState &state) {
    int n = state.total_photons();
    std::vector<std::complex<double>> out(static_cast<size_t>(n + 1));
    double scale = std::pow(2.0, -0.5 * n);
    for (int m = 0; m <= n; m++) {
        std::complex<double> c = state.amplitude(m);
        if (c == 0.0) {
            continue;
        }
        int p = n - m;
        double in_norm = std::sqrt(factorial(m) * factorial(p));
        // (a + i b)^m (i a + b)^p, term a^(j + k) b^(n - j - k).
        for (int j = 0; j <= m; j++) {
            for (int k = 0; k <= p; k++) {
                int q = j + k;
                double w = binomial(m, j) * binomial(p, k) * scale * std::sqrt(factorial(q) * factorial(n - q)) / in_norm;
                out[static_cast<size_t>(q)] += c * w * ipow(m - j + k);
            }
        }
    }
    return TwoModeFockState(std::move(out), state.photon_cap());
}

TwoModeFockState apply_phases(const TwoModeFockState &state, double phi, double theta) {
    int n = state.total_photons();
    std::vector<std::complex<double>> out(static_cast<size_t>(n + 1));
    for (int m = 0; m <= n; m++) {
        out[static_cast<size_t>(m)] = state.amplitude(m) * std::polar(1.0, m * phi + (n - m) * theta);
    }
    return TwoModeFockState(std::move(out), state.photon_cap());
}

OutcomeDistribution output_distribution_from_arms(const TwoModeFockState &inside, double phi, double theta) {
    TwoModeFockState out = beamsplitter(apply_phases(inside, phi, theta));
    OutcomeDistribution dist{out.total_photons(), {}};
    for (int m = 0; m <= out.total_photons(); m++) {
        dist.entries.push_back({m, out.total_photons() - m, std::norm(out.amplitude(m))});
    }
    return dist;
}

OutcomeDistribution output_distribution(const TwoModeFockState &input, double phi, double theta) {
    return output_distribution_from_arms(beamsplitter(input), phi, theta);
}

OutcomeGrouping default_grouping(int total_photons) {
    OutcomeGrouping g;
    int n = total_photons;
    if (n % 2 == 1) {
        for (int x = 0; x <= n; x++) {
            int delta = -n + 2 * x;
            g.labels.push_back(std::string("delta=") + (delta > 0 ? "+" : "") + std::to_string(delta));
        }
        g.classify = [](int n_g, int) {
            return static_cast<size_t>(n_g);
        };
    } else {
        for (int x = 0; x <= n / 2; x++) {
            g.labels.push_back("|delta|=" + std::to_string(2 * x));
        }
        g.classify = [](int n_g, int n_h) {
            return static_cast<size_t>(std::abs(n_g - n_h) / 2);
        };
    }
    return g;
}

namespace {

HarmonicLikelihood project_onto_harmonics(
    const std::function<OutcomeDistribution(double)> &distribution_at, int n, const OutcomeGrouping &grouping) {
    size_t rows = grouping.labels.size();
    std::vector<std::vector<double>> samples(rows, std::vector<double>(kProjectionGrid, 0.0));
    std::vector<double> deltas(kProjectionGrid);
    for (size_t k = 0; k < kProjectionGrid; k++) {
        deltas[k] = kTwoPi * static_cast<double>(k) / kProjectionGrid;
        OutcomeDistribution d = distribution_at(deltas[k]);
        for (const auto &e : d.entries) {
            size_t x = grouping.classify(e.photons_out_one, e.photons_out_two);
            if (x >= rows) {
                throw ConfigError("outcome grouping maps (" + std::to_string(e.photons_out_one) + "," +
                                  std::to_string(e.photons_out_two) + ") outside its label set");
            }
            samples[x][k] += e.probability;
        }
    }

    // Discrete orthogonality on the grid is exact for frequencies below 128.
    std::vector<std::vector<double>> freq(rows, std::vector<double>(static_cast<size_t>(n) + 1, 0.0));
    for (size_t x = 0; x < rows; x++) {
        for (int f = 0; f <= n; f++) {
            double acc = 0;
            for (size_t k = 0; k < kProjectionGrid; k++) {
                acc += samples[x][k] * std::cos(f * deltas[k]);
            }
            double c = acc / kProjectionGrid * (f == 0 ? 1.0 : 2.0);
            freq[x][static_cast<size_t>(f)] = std::abs(c) < 1e-15 ? 0.0 : c;
        }
    }

    int stride = 0;
    int top = 0;
    for (size_t x = 0; x < rows; x++) {
        for (int f = 1; f <= n; f++) {
            if (std::abs(freq[x][static_cast<size_t>(f)]) > 1e-12) {
                stride = std::gcd(stride, f);
                top = std::max(top, f);
            }
        }
    }
    if (stride == 0) {
        stride = 1;
    }
    size_t cols = static_cast<size_t>(top / stride) + 1;
    std::vector<std::vector<double>> coeffs(rows, std::vector<double>(cols, 0.0));
    for (size_t x = 0; x < rows; x++) {
        for (size_t y = 0; y < cols; y++) {
            coeffs[x][y] = freq[x][y * static_cast<size_t>(stride)];
        }
    }

    HarmonicLikelihood L(stride, std::move(coeffs), grouping.labels, n);
    for (size_t x = 0; x < rows; x++) {
        for (size_t k = 0; k < kProjectionGrid; k++) {
            double r = std::abs(L.probability(x, deltas[k]) - samples[x][k]);
            if (r > kFitResidualTol) {
                throw InvariantViolation("cosine series does not reproduce the output statistics (residual " +
                                         std::to_string(r) + ")");
            }
        }
    }
    return L;
}

}  // namespace

HarmonicLikelihood derive_harmonic_matrix(const TwoModeFockState &input, const OutcomeGrouping &grouping) {
    TwoModeFockState inside = beamsplitter(input);
    return project_onto_harmonics(
        [&](double delta) {
            return output_distribution_from_arms(inside, delta, 0.0);
        },
        input.total_photons(), grouping);
}

HarmonicLikelihood derive_harmonic_matrix(const TwoModeFockState &input) {
    return derive_harmonic_matrix(input, default_grouping(input.total_photons()));
}

HarmonicLikelihood derive_harmonic_matrix_from_arms(const TwoModeFockState &inside) {
    return project_onto_harmonics(
        [&](double delta) {
            return output_distribution_from_arms(inside, delta, 0.0);
        },
        inside.total_photons(), default_grouping(inside.total_photons()));
}

DetectorArrayConfig DetectorArrayConfig::equal(int detectors_one, int detectors_two) {
    if (detectors_one < 1 || detectors_two < 1) {
        throw ConfigError("each arm needs at least one detector");
    }
    return {
        std::vector<double>(static_cast<size_t>(detectors_one), 1.0 / detectors_one),
        std::vector<double>(static_cast<size_t>(detectors_two), 1.0 / detectors_two),
    };
}

void DetectorArrayConfig::validate() const {
    for (const auto *arm : {&arm_one, &arm_two}) {
        if (arm->empty()) {
            throw ConfigError("detector arm has no detectors");
        }
        double s = 0;
        for (double p : *arm) {
            if (!(p >= 0)) {
                throw ConfigError("splitting ratios must be nonnegative");
            }
            s += p;
        }
        if (std::abs(s - 1) > 1e-12) {
            throw ConfigError("splitting ratios sum to " + std::to_string(s) + ", not 1");
        }
    }
}

namespace {

// n! * e_n(p): multinomial weight of every assignment with n distinct detectors.
double all_distinct_probability(int n, const std::vector<double> &ratios) {
    if (n == 0) {
        return 1;
    }
    if (static_cast<size_t>(n) > ratios.size()) {
        return 0;
    }
    std::vector<double> e(static_cast<size_t>(n) + 1, 0.0);
    e[0] = 1;
    for (double p : ratios) {
        for (int k = n; k >= 1; k--) {
            e[static_cast<size_t>(k)] += p * e[static_cast<size_t>(k - 1)];
        }
    }
    return factorial(n) * e[static_cast<size_t>(n)];
}

}  // namespace

double projection_probability(int n_one, int n_two, const DetectorArrayConfig &config) {
    config.validate();
    if (n_one < 0 || n_two < 0) {
        throw ConfigError("photon counts must be nonnegative");
    }
    return all_distinct_probability(n_one, config.arm_one) * all_distinct_probability(n_two, config.arm_two);
}

}  // namespace aphase
