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

#include "qreading/design.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qreading/error.h"

namespace qreading {

namespace {

constexpr double kPhaseTolerance = 1e-12;

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidDelta, "delta must lie in (0, pi], got " + std::to_string(delta));
    }
}

/// First positive root of tan t = 2t. Bisection: tan has a pole at pi/2
/// inside the bracket, which makes Newton unreliable there.
double tangent_root() {
    double lo = kTangentRootLower;
    double hi = kTangentRootUpper;
    auto f = [](double t) { return std::tan(t) - 2.0 * t; };
    if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
        throw Error(ErrorCode::Infeasible, "tan t = 2t is not bracketed");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; iter++) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double one_minus_cos(double phase) {
    // 2 sin^2(phase / 2) avoids cancellation for phases near multiples of 2 pi.
    double s = std::sin(0.5 * phase);
    return 2.0 * s * s;
}

}  // namespace

double solve_x_star(double delta) {
    check_delta(delta);
    static const double root = tangent_root();
    return 2.0 * root / delta;
}

double candidate_energy(int n, double delta, double K) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgs, "candidate photon number must be >= 1");
    }
    if (!(K >= 0.0 && K <= 1.0)) {
        throw Error(ErrorCode::InvalidArgs, "overlap bound K must lie in [0, 1]");
    }
    check_delta(delta);
    double gap = one_minus_cos(delta * n);
    if (gap <= kPhaseTolerance) {
        throw Error(ErrorCode::DegeneratePhase,
                    "cos(delta n) = 1 for n = " + std::to_string(n) + ": U acts trivially on the NOON pair");
    }
    return n * (1.0 - K) / gap;
}

DesignResult design_probe(double delta, const ReadingTask &task) {
    check_delta(delta);
    DesignResult result;
    result.task = task;
    result.delta = delta;
    result.K = threshold_K(task);

    if (result.K >= 1.0) {
        // Budget met by guessing: identical outputs at zero energy.
        result.probe = ProbeState::vacuum(0);
        result.achieved_overlap = 1.0;
        result.achieved_probability = task_probability(task.mode, 1.0);
        return result;
    }

    double x_star = solve_x_star(delta);
    int lo = std::max(1, static_cast<int>(std::floor(x_star)));
    int hi = std::max(1, static_cast<int>(std::ceil(x_star)));

    int best_n = 0;
    double best_energy = std::numeric_limits<double>::infinity();
    for (int n : {lo, hi}) {
        double e;
        try {
            e = candidate_energy(n, delta, result.K);
        } catch (const Error &err) {
            if (err.code() == ErrorCode::DegeneratePhase) {
                continue;
            }
            throw;
        }
        // Strict comparison keeps the smaller n on ties.
        if (e < best_energy) {
            best_energy = e;
            best_n = n;
        }
    }
    if (best_n == 0) {
        throw Error(ErrorCode::Infeasible, "both NOON candidates are degenerate for delta = " + std::to_string(delta));
    }

    double alpha2 = (1.0 - result.K) / one_minus_cos(delta * best_n);
    if (alpha2 > 1.0 + 1e-12) {
        throw Error(ErrorCode::Infeasible, "NOON weight exceeds 1 for n* = " + std::to_string(best_n));
    }
    alpha2 = std::min(alpha2, 1.0);

    result.n_star = best_n;
    result.alpha = std::sqrt(alpha2);
    ProbeState probe(best_n);
    Complex branch = result.alpha / std::numbers::sqrt2;
    probe.set({0, best_n}, branch);
    probe.set({best_n, 0}, branch);
    probe.set({0, 0}, std::sqrt(1.0 - alpha2));
    result.probe = std::move(probe);

    result.energy = energy(result.probe);
    Complex gamma = overlap(result.probe, apply_device(result.probe, DeviceSpec(delta)));
    result.achieved_overlap = gamma.real();
    result.achieved_probability = task_probability(task.mode, gamma);
    if (result.achieved_probability > task.q + 1e-9) {
        throw Error(ErrorCode::Infeasible, "designed probe misses the threshold");
    }
    return result;
}

double achieved_performance(const DesignResult &result) {
    Complex gamma = overlap(result.probe, apply_device(result.probe, DeviceSpec(result.delta)));
    return task_probability(result.task.mode, gamma);
}

}  // namespace qreading
