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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qreading/design.h"
#include "qreading/error.h"

using namespace qreading;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qreading::Error";
    return ErrorCode::InvalidArgs;
}

}  // namespace

// Reference values below were evaluated with scipy.special.erfc / erfcinv.

TEST(Baseline, homodyne_examples) {
    EXPECT_EQ(coherent_homodyne_error(0.0, kPi / 4), 0.5);
    EXPECT_NEAR(coherent_homodyne_error(1.757359, kPi / 4), 0.15514546040964766, 1e-14);
    double prev = 0.5;
    for (double e = 0.5; e < 400.0; e *= 1.5) {
        double p = coherent_homodyne_error(e, kPi / 4);
        EXPECT_LT(p, prev);
        EXPECT_GT(p, 0.0);
        prev = p;
    }
    EXPECT_LT(prev, 1e-30);
}

TEST(Baseline, helstrom_examples) {
    EXPECT_EQ(coherent_helstrom_error(0.0, kPi / 3), 0.5);
    EXPECT_NEAR(coherent_helstrom_error(1.0, kPi), 0.004600070369588705, 1e-15);
    EXPECT_NEAR(coherent_helstrom_error(1.0, kPi), (1.0 - std::sqrt(1.0 - std::exp(-4.0))) / 2.0, 1e-15);
}

TEST(Baseline, separation_is_split_independent) {
    CoherentStrategy s{2.5, kPi / 5};
    // Split 2.5 = 2 + 0.5 between modes, amplitudes b1 = sqrt(2), b2 = i sqrt(0.5).
    Complex b1 = std::sqrt(2.0);
    Complex b2 = Complex(0.0, std::sqrt(0.5));
    Complex u = std::polar(1.0, kPi / 5);
    double d = std::sqrt(std::norm(b1 - u * b1) + std::norm(b2 - std::conj(u) * b2));
    EXPECT_NEAR(s.separation(), d, 1e-14);
}

TEST(Baseline, inverse_examples) {
    EXPECT_LT(coherent_energy_for_error(0.5 - 1e-9, kPi / 4), 1e-14);
    EXPECT_NEAR(coherent_energy_for_error(0.15514546040964766, kPi / 4), 1.757359, 1e-9);
    EXPECT_NEAR(coherent_energy_for_error(1e-3, kPi / 12), 140.1286468029532, 1e-7);
    EXPECT_NEAR(coherent_energy_for_error(1e-6, kPi / 12), 331.5567216888886, 1e-7);
}

TEST(Baseline, errors) {
    EXPECT_EQ(code_of([] { coherent_homodyne_error(1.0, 0.0); }), ErrorCode::InvalidDelta);
    EXPECT_EQ(code_of([] { coherent_homodyne_error(-1.0, 1.0); }), ErrorCode::InvalidArgs);
    EXPECT_EQ(code_of([] { coherent_helstrom_error(1.0, 3.5); }), ErrorCode::InvalidDelta);
    EXPECT_EQ(code_of([] { coherent_energy_for_error(0.0, 1.0); }), ErrorCode::InvalidThreshold);
    EXPECT_EQ(code_of([] { coherent_energy_for_error(0.5, 1.0); }), ErrorCode::InvalidThreshold);
    EXPECT_EQ(code_of([] { coherent_energy_for_error(0.1, -1.0); }), ErrorCode::InvalidDelta);
    EXPECT_EQ(code_of([] { coherent_helstrom_energy_for_error(0.7, 1.0); }), ErrorCode::InvalidThreshold);
}

TEST(BaselineProperty, helstrom_below_homodyne) {
    for (double delta : {kPi / 12, kPi / 4, kPi / 2, kPi}) {
        for (double e = 0.0; e < 50.0; e += 0.37) {
            EXPECT_LE(coherent_helstrom_error(e, delta), coherent_homodyne_error(e, delta) + 1e-16);
        }
    }
}

TEST(BaselineProperty, round_trips) {
    for (double delta : {kPi / 12, kPi / 4, kPi}) {
        for (int k = 0; k <= 120; k++) {
            double q = std::exp(std::log(1e-6) + k / 120.0 * (std::log(0.49) - std::log(1e-6)));
            double e = coherent_energy_for_error(q, delta);
            EXPECT_NEAR(coherent_homodyne_error(e, delta), q, 1e-10 * std::max(1.0, q));
            EXPECT_NEAR(coherent_homodyne_error(e, delta), q, 1e-9);
            double h = coherent_helstrom_energy_for_error(q, delta);
            EXPECT_NEAR(coherent_helstrom_error(h, delta), q, 1e-12);
            EXPECT_LE(h, e * (1 + 1e-12));
        }
    }
}

TEST(BaselineProperty, quantum_advantage) {
    for (double delta : {kPi / 4, kPi / 12}) {
        double plateau = candidate_energy(design_probe(delta, {Mode::Ambiguous, 0.0}).n_star, delta, 0.0);
        for (int k = 0; k <= 200; k++) {
            double q = std::exp(std::log(1e-6) + k / 200.0 * (std::log(0.49) - std::log(1e-6)));
            double optimal = design_probe(delta, {Mode::Ambiguous, q}).energy;
            EXPECT_GE(coherent_energy_for_error(q, delta), optimal) << q;
            EXPECT_LE(optimal, plateau + 1e-12);
        }
    }
    double ratio = coherent_energy_for_error(1e-3, kPi / 12) / design_probe(kPi / 12, {Mode::Ambiguous, 1e-3}).energy;
    EXPECT_GT(ratio, 25.0);
    // Coherent energy diverges as q -> 0.
    EXPECT_GT(coherent_energy_for_error(1e-12, kPi / 12), coherent_energy_for_error(1e-6, kPi / 12) * 1.5);
}
