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

#ifndef QREADING_DESIGN_H
#define QREADING_DESIGN_H

#include "qreading/discrimination.h"
#include "qreading/fock.h"

namespace qreading {

/// First positive root of tan t = 2t, i.e. delta * x* / 2 for every delta.
inline constexpr double kTangentRootLower = 1.0;
inline constexpr double kTangentRootUpper = 1.5;

/// Smallest strictly positive x with delta x = tan(delta x / 2).
/// Throws InvalidDelta unless 0 < delta <= pi.
double solve_x_star(double delta);

/// Energy n (1 - K) / (1 - cos(delta n)) of the NOON+vacuum probe that
/// saturates the overlap bound K with n photons in the NOON branch.
/// Throws DegeneratePhase when cos(delta n) = 1.
double candidate_energy(int n, double delta, double K);

struct DesignResult {
    /// Photon number of the NOON branch; 0 for the vacuum probe.
    int n_star = 0;
    double alpha = 0.0;
    ProbeState probe = ProbeState::vacuum(0);
    double energy = 0.0;
    double K = 1.0;
    /// Re <probe| U |probe>; the imaginary part vanishes for this family.
    double achieved_overlap = 1.0;
    double achieved_probability = 0.5;
    ReadingTask task;
    double delta = 0.0;
};

/// Minimum-energy probe
///   alpha (|0,n*> + |n*,0>) / sqrt(2) + sqrt(1 - alpha^2) |0,0>
/// meeting the task's error or failure budget against {I, U(delta)}.
DesignResult design_probe(double delta, const ReadingTask &task);

/// Recomputes the task probability directly from the stored probe.
double achieved_performance(const DesignResult &result);

}  // namespace qreading

#endif
