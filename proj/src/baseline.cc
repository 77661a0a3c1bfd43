// Copyright 2026 The qreading Authors
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

#include "qreading/baseline.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qreading/discrimination.h"
#include "qreading/error.h"

namespace qreading {

namespace {

double half_angle_sin(double delta) {
    return std::sin(0.5 * delta);
}

void check_threshold(double q) {
    if (!(q > 0.0 && q < 0.5)) {
        throw Error(ErrorCode::InvalidThreshold, "coherent baseline needs 0 < q < 1/2, got " + std::to_string(q));
    }
}

}  // namespace

void CoherentStrategy::validate() const {
    if (!(energy >= 0.0) || std::isinf(energy)) {
        throw Error(ErrorCode::InvalidArgs, "coherent energy must be finite and non-negative");
    }
    if (!(delta > 0.0 && delta <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidDelta, "delta must lie in (0, pi], got " + std::to_string(delta));
    }
}

double CoherentStrategy::separation() const {
    return 2.0 * std::sqrt(energy) * half_angle_sin(delta);
}

double coherent_homodyne_error(double energy, double delta) {
    CoherentStrategy strategy{energy, delta};
    strategy.validate();
    // Quadrature means differ by sqrt(2) D with variance 1/2 each side.
    return 0.5 * std::erfc(strategy.separation() / std::numbers::sqrt2);
}

double coherent_helstrom_error(double energy, double delta) {
    CoherentStrategy strategy{energy, delta};
    strategy.validate();
    double s = half_angle_sin(delta);
    return error_probability(std::exp(-2.0 * energy * s * s));
}

double coherent_energy_for_error(double q, double delta) {
    check_threshold(q);
    CoherentStrategy{0.0, delta}.validate();

    double lo = 0.0;
    double hi = 1.0;
    while (coherent_homodyne_error(hi, delta) > q) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) {
            throw Error(ErrorCode::InvalidThreshold, "q too small to bracket");
        }
    }
    for (int iter = 0; iter < 400 && hi - lo > 1e-15 * hi; iter++) {
        double mid = 0.5 * (lo + hi);
        if (coherent_homodyne_error(mid, delta) > q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double coherent_helstrom_energy_for_error(double q, double delta) {
    check_threshold(q);
    CoherentStrategy{0.0, delta}.validate();
    double s = half_angle_sin(delta);
    double K = std::sqrt(4.0 * q * (1.0 - q));
    return -std::log(K) / (2.0 * s * s);
}

}  // namespace qreading
