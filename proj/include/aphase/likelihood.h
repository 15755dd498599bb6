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

#ifndef APHASE_LIKELIHOOD_H
#define APHASE_LIKELIHOOD_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace aphase {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2 * kPi;

/// Column-sum tolerance for matrices derived from first principles.
inline constexpr double kIdealColsumTol = 1e-12;
/// Column-sum tolerance for the fitted laboratory matrices; their printed
/// entries carry three decimals.
inline constexpr double kExperimentalColsumTol = 2e-3;

/// Detection probabilities written as a cosine series in delta = phi - theta:
///
///     P(x | delta) = sum_y C[x][y] * cos(stride * y * delta),   y = 0..Y.
///
/// Construction validates the model: the constant column sums to 1, the
/// higher columns sum to zero within `colsum_tol`, and every row is
/// nonnegative over a full period. A constructed value is always a usable
/// probability model.
class HarmonicLikelihood {
   public:
    HarmonicLikelihood(
        int stride,
        std::vector<std::vector<double>> coeffs,
        std::vector<std::string> labels,
        int photon_cost,
        double colsum_tol = kIdealColsumTol);

    int stride() const {
        return stride_;
    }
    size_t num_outcomes() const {
        return rows_;
    }
    /// Highest harmonic index Y (number of columns minus one).
    size_t harmonic_count() const {
        return cols_ - 1;
    }
    /// stride * Y: the highest Fourier frequency in phi this model produces.
    int max_frequency() const {
        return stride_ * static_cast<int>(cols_ - 1);
    }
    int photon_cost() const {
        return photon_cost_;
    }
    double colsum_tol() const {
        return colsum_tol_;
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }

    double coeff(size_t x, size_t y) const {
        return coeffs_[x * cols_ + y];
    }
    std::span<const double> row(size_t x) const {
        return {coeffs_.data() + x * cols_, cols_};
    }
    std::vector<std::vector<double>> coeff_rows() const;

    double probability(size_t x, double delta) const;
    /// d/d(delta) of `probability`.
    double derivative(size_t x, double delta) const;
    double second_derivative(size_t x, double delta) const;
    std::vector<double> probabilities(double delta) const;

    bool operator==(const HarmonicLikelihood &other) const = default;

   private:
    int stride_;
    size_t rows_;
    size_t cols_;
    std::vector<double> coeffs_;
    std::vector<std::string> labels_;
    int photon_cost_;
    double colsum_tol_;
};

/// Same (stride, shape) and coefficients within `tol`. Labels are ignored.
bool approx_equal(const HarmonicLikelihood &a, const HarmonicLikelihood &b, double tol);

double probability(const HarmonicLikelihood &L, size_t x, double delta);

/// Ideal single-photon matrix A.
HarmonicLikelihood ideal_single_photon();
/// Ideal |1,1> (two-photon NOON) matrix B = A with stride 2.
HarmonicLikelihood ideal_biphoton();
/// Ideal |2,2> matrix Gamma.
HarmonicLikelihood ideal_four_photon();

enum class ExperimentalFixture { SinglePhoton, Biphoton, FourPhoton };

/// Calibrated laboratory matrices A', B', Gamma'. Gamma' is returned with the
/// (x=2, y=1) entry as -10.423/32; see `printed_four_photon_experimental`.
HarmonicLikelihood experimental_fixture(ExperimentalFixture which);

/// Gamma' exactly as printed, with +10.423 at (x=2, y=1). Its y=1 column sums
/// to 20.847/32, so it is not a probability model and is only exposed as raw
/// coefficients.
std::vector<std::vector<double>> printed_four_photon_experimental();

/// Two-outcome n-photon NOON likelihood with fringe visibility v:
/// C = (1/2)[[1, v], [1, -v]] at stride n.
HarmonicLikelihood noon_likelihood(int n, double visibility);

/// Likelihood of the joint outcome of two independent measurements sharing
/// the same delta. Outcome (x1, x2) maps to row x1 * b.num_outcomes() + x2.
HarmonicLikelihood independent_product(const HarmonicLikelihood &a, const HarmonicLikelihood &b);

}  // namespace aphase

#endif
