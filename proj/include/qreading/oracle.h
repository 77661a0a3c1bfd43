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

#ifndef QREADING_ORACLE_H
#define QREADING_ORACLE_H

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "qreading/fock.h"

namespace qreading {

// Brute-force falsifier for the closed-form design.
//
// For a diagonal U the output overlap of any probe sum_{nm} c_nm |n,m> is
// sum |c_nm|^2 e^{i delta (n - m)}: it only sees the probability mass p_d on
// each photon-number difference d = n - m. The cheapest way to place mass p_d
// at difference d is |d,0> or |0,-d>, costing p_d |d| photons. Searching over
// distributions on d therefore covers every two-mode pure probe.

class DiagonalDistribution {
   public:
    static constexpr double kSumTolerance = 1e-12;

    DiagonalDistribution() = default;
    /// Throws InvalidArgs on negative weights or a total off 1 by > 1e-12.
    explicit DiagonalDistribution(std::map<int, double> weights);

    const std::map<int, double> &weights() const noexcept {
        return weights_;
    }
    int max_abs_difference() const;

   private:
    std::map<int, double> weights_;
};

/// Photon-number-difference marginal of a normalized probe.
DiagonalDistribution induced_distribution(const ProbeState &state);

std::complex<double> dist_overlap(const DiagonalDistribution &dist, double delta);
double dist_energy(const DiagonalDistribution &dist);

inline constexpr std::uint64_t kDefaultOracleSeed = 0xC0FFEE;
inline constexpr double kOracleFeasibilitySlack = 1e-9;
inline constexpr int kOracleGridSteps = 1000;
inline constexpr int kOracleMaxSupport = 5;

/// ceil(x*) + 3: the minimum d_max accepted by the search.
int oracle_min_d_max(double delta);

struct OracleResult {
    double energy = 0.0;
    DiagonalDistribution best;
    /// Which stage produced the minimum: "symmetric", "grid", "random" or
    /// "vacuum".
    std::string stage;
    std::uint64_t random_accepted = 0;
};

/// Least energy over feasible distributions (|overlap| <= K + 1e-9) found by
///   (a) symmetric supports {0, +n, -n} with the saturating weight,
///   (b) supports {0, +n, -m} on a 1e-3 weight grid,
///   (c) `samples` seeded random supports of size <= 5 with Dirichlet weights.
/// The result is an upper bound on the true minimum.
/// Throws InvalidArgs / InvalidDelta on bad inputs or d_max < oracle_min_d_max.
OracleResult brute_force_search(double delta, double K, int d_max, std::uint64_t samples,
                                std::uint64_t seed = kDefaultOracleSeed);

double brute_force_min_energy(double delta, double K, int d_max, std::uint64_t samples,
                              std::uint64_t seed = kDefaultOracleSeed);

}  // namespace qreading

#endif
