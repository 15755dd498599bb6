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

#ifndef APHASE_OPTIMIZE1D_H
#define APHASE_OPTIMIZE1D_H

#include <cmath>
#include <utility>

namespace aphase {

/// Golden-section search for a maximum of `f` on [lo, hi]. Returns the best
/// of the final bracket and the two endpoints' interior probes.
template <typename F>
std::pair<double, double> golden_section_maximize(F &&f, double lo, double hi, int iterations) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations; i++) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace aphase

#endif
