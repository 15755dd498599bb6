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

#ifndef APHASE_POSTERIOR_H
#define APHASE_POSTERIOR_H

#include <complex>
#include <optional>
#include <vector>

#include "aphase/likelihood.h"

namespace aphase {

/// Phase distribution on the circle stored through its circular moments
/// a_j = <exp(i j phi)>, j = 0..capacity. Negative moments are conj(a_j).
///
/// Under cosine-series likelihoods, Bayes' rule maps a trigonometric
/// polynomial of degree d to one of degree d + stride * Y, so the moments
/// represent the posterior exactly as long as the degree stays within
/// capacity.
class PhasePosterior {
   public:
    /// Flat prior 1 / (2 pi).
    static PhasePosterior uniform(int capacity);

    int capacity() const {
        return static_cast<int>(moments_.size()) - 1;
    }
    /// Highest harmonic that can be nonzero.
    int degree() const {
        return degree_;
    }
    /// a_j for any integer j (zero outside [-capacity, capacity]).
    std::complex<double> moment(int j) const;
    const std::vector<std::complex<double>> &moments() const {
        return moments_;
    }

    /// Rebuild from stored moments, e.g. a JSON snapshot. Validates a_0 = 1.
    static PhasePosterior from_moments(std::vector<std::complex<double>> moments, int degree);

   private:
    PhasePosterior(std::vector<std::complex<double>> moments, int degree);

    std::vector<std::complex<double>> moments_;
    int degree_;

    friend PhasePosterior bayes_update(const PhasePosterior &, const HarmonicLikelihood &, size_t, double);
};

PhasePosterior uniform_prior(int capacity);

/// Posterior after observing outcome x at feedback phase theta.
/// Throws InvariantViolation if the outcome has zero predictive probability
/// or the result would exceed the moment capacity.
PhasePosterior bayes_update(const PhasePosterior &p, const HarmonicLikelihood &L, size_t x, double theta);

/// Predictive probability of outcome x at feedback phase theta.
double predictive_probability(const PhasePosterior &p, const HarmonicLikelihood &L, size_t x, double theta);

/// |a_1|.
double sharpness(const PhasePosterior &p);

/// arg(a_1) in [0, 2 pi); empty when a_1 vanishes.
std::optional<double> estimate(const PhasePosterior &p);

/// |a_1|^-2 - 1, or +infinity when a_1 vanishes.
double holevo_variance(const PhasePosterior &p);

double density(const PhasePosterior &p, double phi);

}  // namespace aphase

#endif
