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

#include "qreading/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "qreading/design.h"
#include "qreading/error.h"

namespace qreading {

DiagonalDistribution::DiagonalDistribution(std::map<int, double> weights) {
    double total = 0.0;
    for (const auto &[d, w] : weights) {
        if (!(w >= 0.0)) {
            throw Error(ErrorCode::InvalidArgs, "negative weight at d = " + std::to_string(d));
        }
        total += w;
        if (w > 0.0) {
            weights_.emplace(d, w);
        }
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw Error(ErrorCode::InvalidArgs, "weights sum to " + std::to_string(total) + ", not 1");
    }
}

int DiagonalDistribution::max_abs_difference() const {
    int worst = 0;
    for (const auto &[d, w] : weights_) {
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

DiagonalDistribution induced_distribution(const ProbeState &state) {
    std::map<int, double> weights;
    for (const auto &[index, value] : state.amplitudes()) {
        weights[index.difference()] += std::norm(value);
    }
    return DiagonalDistribution(std::move(weights));
}

std::complex<double> dist_overlap(const DiagonalDistribution &dist, double delta) {
    std::complex<double> total{};
    for (const auto &[d, w] : dist.weights()) {
        total += w * std::polar(1.0, delta * d);
    }
    return total;
}

double dist_energy(const DiagonalDistribution &dist) {
    double total = 0.0;
    for (const auto &[d, w] : dist.weights()) {
        total += w * std::abs(d);
    }
    return total;
}

int oracle_min_d_max(double delta) {
    return static_cast<int>(std::ceil(solve_x_star(delta))) + 3;
}

namespace {

/// Uniform double in [0, 1) from the top 53 bits; spelled out so the stream is
/// identical across standard library implementations.
double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(bound));
}

class Search {
   public:
    Search(double delta, double K) : delta_(delta), K_(K), bound_(K + kOracleFeasibilitySlack) {
        result_.energy = std::numeric_limits<double>::infinity();
    }

    double best() const {
        return result_.energy;
    }

    /// Keeps `weights` if it is feasible and strictly cheaper.
    bool offer(const std::vector<std::pair<int, double>> &weights, double energy, const char *stage) {
        if (!(energy < result_.energy)) {
            return false;
        }
        std::complex<double> gamma{};
        for (const auto &[d, w] : weights) {
            gamma += w * std::polar(1.0, delta_ * d);
        }
        if (std::abs(gamma) > bound_) {
            return false;
        }
        std::map<int, double> table;
        double total = 0.0;
        for (const auto &[d, w] : weights) {
            table[d] += w;
            total += w;
        }
        // Re-absorb rounding into the d = 0 bin (or the heaviest bin).
        auto heaviest = std::max_element(table.begin(), table.end(),
                                         [](const auto &a, const auto &b) { return a.second < b.second; });
        heaviest->second += 1.0 - total;
        result_.energy = energy;
        result_.best = DiagonalDistribution(std::move(table));
        result_.stage = stage;
        return true;
    }

    void symmetric_supports(int d_max) {
        std::vector<std::pair<int, double>> weights;
        for (int n = 1; n <= d_max; n++) {
            double gap = 1.0 - std::cos(delta_ * n);
            if (gap <= 1e-12) {
                continue;
            }
            double mass = std::min(1.0, (1.0 - K_) / gap);
            weights = {{0, 1.0 - mass}, {n, 0.5 * mass}, {-n, 0.5 * mass}};
            offer(weights, mass * n, "symmetric");
        }
    }

    /// For each (n, m, w_n) the overlap is affine in w_m, so the feasible w_m
    /// form an interval; the cheapest grid point in it is checked directly.
    void grid_supports(int d_max) {
        const double step = 1.0 / kOracleGridSteps;
        const double bound2 = bound_ * bound_;
        for (int n = 1; n <= d_max; n++) {
            std::complex<double> plus = std::polar(1.0, delta_ * n);
            for (int m = 1; m <= d_max; m++) {
                std::complex<double> minus = std::polar(1.0, -delta_ * m);
                std::complex<double> slope = minus - 1.0;
                for (int i = 0; i <= kOracleGridSteps; i++) {
                    double wn = i * step;
                    if (!(wn * n < best())) {
                        break;
                    }
                    std::complex<double> base = (1.0 - wn) + wn * plus;
                    double a = std::norm(slope);
                    double b = 2.0 * (std::conj(base) * slope).real();
                    double c = std::norm(base) - bound2;
                    double w_low;
                    if (a < 1e-24) {
                        if (c > 0.0) {
                            continue;
                        }
                        w_low = 0.0;
                    } else {
                        double disc = b * b - 4.0 * a * c;
                        if (disc < 0.0) {
                            continue;
                        }
                        double root = (-b - std::sqrt(disc)) / (2.0 * a);
                        w_low = std::max(0.0, root);
                    }
                    int j0 = std::max(0, static_cast<int>(std::ceil(w_low / step)) - 1);
                    for (int j = j0; j <= j0 + 2 && i + j <= kOracleGridSteps; j++) {
                        double wm = j * step;
                        double energy = wn * n + wm * m;
                        if (!(energy < best())) {
                            break;
                        }
                        double w0 = 1.0 - wn - wm;
                        if (std::norm(w0 + wn * plus + wm * minus) <= bound2) {
                            offer({{0, w0}, {n, wn}, {-m, wm}}, energy, "grid");
                            break;
                        }
                    }
                }
            }
        }
    }

    void random_supports(int d_max, std::uint64_t samples, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(d_max) + 1;
        std::vector<std::pair<int, double>> weights;
        for (std::uint64_t s = 0; s < samples; s++) {
            int size = 1 + static_cast<int>(uniform_below(rng, kOracleMaxSupport));
            weights.clear();
            while (static_cast<int>(weights.size()) < size) {
                int d = static_cast<int>(uniform_below(rng, span)) - d_max;
                bool fresh = std::none_of(weights.begin(), weights.end(), [d](const auto &p) { return p.first == d; });
                if (fresh) {
                    // Exponential draws normalize to a flat Dirichlet sample.
                    weights.emplace_back(d, -std::log1p(-uniform01(rng)));
                }
            }
            double total = 0.0;
            for (const auto &p : weights) {
                total += p.second;
            }
            double energy = 0.0;
            std::complex<double> gamma{};
            for (auto &[d, w] : weights) {
                w /= total;
                energy += w * std::abs(d);
                gamma += w * std::polar(1.0, delta_ * d);
            }
            if (std::abs(gamma) > bound_) {
                continue;
            }
            result_.random_accepted++;
            offer(weights, energy, "random");
        }
    }

    OracleResult take() {
        return std::move(result_);
    }

   private:
    double delta_;
    double K_;
    double bound_;
    OracleResult result_;
};

}  // namespace

OracleResult brute_force_search(double delta, double K, int d_max, std::uint64_t samples, std::uint64_t seed) {
    if (!(delta > 0.0 && delta <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidDelta, "delta must lie in (0, pi], got " + std::to_string(delta));
    }
    if (!(K >= 0.0 && K <= 1.0)) {
        throw Error(ErrorCode::InvalidArgs, "overlap bound K must lie in [0, 1]");
    }
    int min_d_max = oracle_min_d_max(delta);
    if (d_max < min_d_max) {
        throw Error(ErrorCode::InvalidArgs,
                    "d_max = " + std::to_string(d_max) + " below ceil(x*) + 3 = " + std::to_string(min_d_max));
    }

    Search search(delta, K);
    search.offer({{0, 1.0}}, 0.0, "vacuum");
    search.symmetric_supports(d_max);
    search.grid_supports(d_max);
    search.random_supports(d_max, samples, seed);
    if (std::isinf(search.best())) {
        throw Error(ErrorCode::Infeasible, "no feasible distribution found");
    }
    return search.take();
}

double brute_force_min_energy(double delta, double K, int d_max, std::uint64_t samples, std::uint64_t seed) {
    return brute_force_search(delta, K, d_max, samples, seed).energy;
}

}  // namespace qreading
