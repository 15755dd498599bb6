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

#ifndef APHASE_FOCK_H
#define APHASE_FOCK_H

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "aphase/likelihood.h"

namespace aphase {

inline constexpr int kDefaultPhotonCap = 8;

/// Pure state of two bosonic modes with a fixed total photon number n.
/// amplitude(m) is the coefficient of |m, n - m>.
class TwoModeFockState {
   public:
    /// |n1, n2>.
    static TwoModeFockState number_state(int n1, int n2, int photon_cap = kDefaultPhotonCap);
    /// (|n, 0> + |0, n>) / sqrt(2).
    static TwoModeFockState noon(int n, int photon_cap = kDefaultPhotonCap);
    /// Validates normalization (within 1e-12) and the photon cap.
    TwoModeFockState(std::vector<std::complex<double>> amplitudes, int photon_cap = kDefaultPhotonCap);

    int total_photons() const {
        return static_cast<int>(amplitudes_.size()) - 1;
    }
    int photon_cap() const {
        return photon_cap_;
    }
    std::complex<double> amplitude(int photons_in_mode_one) const {
        return amplitudes_[static_cast<size_t>(photons_in_mode_one)];
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amplitudes_;
    }
    double norm_squared() const;

   private:
    std::vector<std::complex<double>> amplitudes_;
    int photon_cap_;
};

struct Outcome {
    int photons_out_one;
    int photons_out_two;
    double probability;
};

/// Photon-number statistics at the two interferometer outputs.
struct OutcomeDistribution {
    int total_photons;
    std::vector<Outcome> entries;

    double probability_of(int photons_out_one) const;
};

/// Symmetric lossless 50/50 beamsplitter:
///     a^dag -> (a^dag + i b^dag) / sqrt(2),  b^dag -> (i a^dag + b^dag) / sqrt(2).
/// Two passes compose to i * SWAP, so a balanced interferometer at zero phase
/// difference sends |1, 0> to |0, 1> and leaves |k, k> unchanged.
TwoModeFockState beamsplitter(const TwoModeFockState &state);

/// Multiplies amplitude(m) by exp(i m phi) exp(i (n - m) theta).
TwoModeFockState apply_phases(const TwoModeFockState &state, double phi, double theta);

/// Beamsplitter, phases, beamsplitter; the input is in modes (a, b).
OutcomeDistribution output_distribution(const TwoModeFockState &input, double phi, double theta);
/// Same, but `inside` is already the state in the interferometer arms (c, d).
OutcomeDistribution output_distribution_from_arms(const TwoModeFockState &inside, double phi, double theta);

/// Maps a raw outcome (n_g, n_h) to an outcome label index.
struct OutcomeGrouping {
    std::vector<std::string> labels;
    std::function<size_t(int n_g, int n_h)> classify;
};

/// |Delta| classes for even n (x = |Delta| / 2), signed Delta for odd n
/// (x = n_g, i.e. Delta = -n + 2x).
OutcomeGrouping default_grouping(int total_photons);

/// Projects grouped output probabilities onto cos(k delta) harmonics using a
/// 256-point uniform grid in delta = phi - theta. The stride is the gcd of the
/// frequencies that carry weight.
HarmonicLikelihood derive_harmonic_matrix(const TwoModeFockState &input, const OutcomeGrouping &grouping);
HarmonicLikelihood derive_harmonic_matrix(const TwoModeFockState &input);
/// As above for a state already inside the interferometer (e.g. NOON).
HarmonicLikelihood derive_harmonic_matrix_from_arms(const TwoModeFockState &inside);

struct DetectorArrayConfig {
    /// Splitting ratios for the detectors on output arm one and arm two.
    std::vector<double> arm_one;
    std::vector<double> arm_two;

    static DetectorArrayConfig equal(int detectors_one, int detectors_two);
    void validate() const;
};

/// Probability that n photons on each arm all land on distinct
/// (unit-efficiency, non-number-resolving) detectors.
double projection_probability(int n_one, int n_two, const DetectorArrayConfig &config);

}  // namespace aphase

#endif
