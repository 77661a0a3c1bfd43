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

#ifndef QREADING_BASELINE_H
#define QREADING_BASELINE_H

namespace qreading {

// Coherent probes |b1, b2> with total mean photon number E. Under I vs U the
// outputs are |b1, b2> and |e^{i delta} b1, e^{-i delta} b2>, separated in
// phase space by D with D^2 = 4 E sin^2(delta / 2) for any split of E.

struct CoherentStrategy {
    double energy = 0.0;
    double delta = 0.0;

    /// Throws InvalidArgs for negative energy, InvalidDelta outside (0, pi].
    void validate() const;

    /// Phase-space distance D between the two coherent outputs.
    double separation() const;
};

/// Homodyne along the separation with midpoint threshold (vacuum quadrature
/// variance 1/2): erfc(sqrt(2 E) sin(delta / 2)) / 2.
double coherent_homodyne_error(double energy, double delta);

/// Helstrom bound on the coherent outputs, whose overlap modulus is
/// exp(-2 E sin^2(delta / 2)).
double coherent_helstrom_error(double energy, double delta);

/// Energy at which coherent_homodyne_error equals q, by bisection.
/// Throws InvalidThreshold unless 0 < q < 1/2.
double coherent_energy_for_error(double q, double delta);

/// Energy at which coherent_helstrom_error equals q (closed form).
double coherent_helstrom_energy_for_error(double q, double delta);

}  // namespace qreading

#endif
