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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qreading/baseline.h"
#include "qreading/cli.h"
#include "qreading/design.h"
#include "qreading/device.h"
#include "qreading/discrimination.h"
#include "qreading/fock.h"
#include "qreading/oracle.h"
#include "qreading/tradeoff.h"

using namespace qreading;

namespace {

constexpr double kPi = std::numbers::pi;

/// Collects failed checks for one criterion.
class Checks {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failures_.size() < 8) {
            failures_.push_back(what);
        }
        failed_ |= !ok;
    }
    void near(double got, double want, double tol, const std::string &what) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s: got %.12g want %.12g tol %.1e", what.c_str(), got, want, tol);
        expect(std::abs(got - want) <= tol, buf);
    }
    void note(const std::string &text) {
        notes_.push_back(text);
    }

    bool failed() const {
        return failed_;
    }
    const std::vector<std::string> &failures() const {
        return failures_;
    }
    const std::vector<std::string> &notes() const {
        return notes_;
    }

   private:
    bool failed_ = false;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    TradeoffOptions options;
    options.points = points;
    options.q_min = lo;
    options.q_max = hi;
    return threshold_grid(options, Mode::Ambiguous);
}

void criterion_design_values(Checks &c) {
    DesignResult a = design_probe(kPi / 4, {Mode::Ambiguous, 0.0});
    c.expect(a.n_star == 3, "pi/4: n* = 3");
    c.near(a.energy, 1.757359, 1e-6, "pi/4 energy");
    DesignResult b = design_probe(kPi / 12, {Mode::Ambiguous, 0.0});
    c.expect(b.n_star == 9, "pi/12: n* = 9");
    c.near(b.energy, 5.272078, 1e-6, "pi/12 energy");
    c.note(fmt("E(pi/4)=%.9f E(pi/12)=%.9f", a.energy, b.energy));
}

void criterion_saturation(Checks &c) {
    std::vector<double> grid = log_grid(1e-6, 0.49, 200);
    int evaluated = 0;
    for (double delta : {kPi / 12, kPi / 4, kPi / 2}) {
        DeviceSpec dev(delta);
        for (Mode mode : {Mode::Ambiguous, Mode::Unambiguous}) {
            for (double q : grid) {
                DesignResult r = design_probe(delta, {mode, q});
                std::complex<double> gamma = overlap(r.probe, apply_device(r.probe, dev));
                double K = threshold_K({mode, q});
                c.near(gamma.real(), K, 1e-9, fmt("overlap delta=%.4f q=%.3g", delta, q));
                c.expect(std::abs(gamma.imag()) <= 1e-9, fmt("real overlap delta=%.4f q=%.3g", delta, q));
                c.expect(r.achieved_probability <= q + 1e-9, fmt("P <= q delta=%.4f q=%.3g", delta, q));
                evaluated++;
            }
        }
    }
    c.note(std::to_string(evaluated) + " designs");
}

void criterion_oracle(Checks &c) {
    const std::vector<double> deltas = {kPi / 12, kPi / 8, kPi / 4, kPi / 2, 3 * kPi / 4};
    const std::vector<double> qs = {0.0, 1e-4, 1e-2, 0.1, 0.3};
    double worst_gap = 0.0;
    for (Mode mode : {Mode::Ambiguous, Mode::Unambiguous}) {
        for (double delta : deltas) {
            int d_max = static_cast<int>(std::ceil(solve_x_star(delta))) + 4;
            for (double q : qs) {
                DesignResult design = design_probe(delta, {mode, q});
                double oracle = brute_force_min_energy(delta, design.K, d_max, 100000, kDefaultOracleSeed);
                double gap = oracle - design.energy;
                worst_gap = std::max(worst_gap, std::abs(gap));
                std::string where = fmt("delta=%.4f q=%.3g", delta, q) + " " + std::string(to_string(mode));
                c.expect(gap >= -1e-6, "oracle undercuts closed form at " + where);
                c.expect(gap <= 1e-6, "oracle above closed form at " + where);
            }
        }
    }
    c.note(fmt("max |oracle - closed form| = %.3g", worst_gap));
}

std::vector<TradeoffRow> csv_rows(double delta) {
    std::ostringstream out;
    write_csv(compute_tradeoff(delta, Mode::Ambiguous, {}), out);
    std::istringstream in(out.str());
    return read_csv(in);
}

void criterion_fig1(Checks &c) {
    for (double delta : {kPi / 4, kPi / 12}) {
        std::vector<TradeoffRow> rows = csv_rows(delta);
        DesignResult perfect = design_probe(delta, {Mode::Ambiguous, 0.0});
        double plateau = perfect.energy;
        c.expect(rows.size() == 200, "200 rows");
        for (const auto &row : rows) {
            std::string where = fmt("delta=%.4f q=%.3g", delta, row.q);
            c.expect(row.energy_coherent >= row.energy_optimal, "coherent >= optimal at " + where);
            c.expect(row.energy_optimal <= plateau + 1e-12, "optimal bounded by plateau at " + where);
            if (row.q <= 1e-4) {
                c.expect(row.energy_coherent > 10.0 * plateau, "coherent > 10x plateau at " + where);
            }
        }
        c.note(fmt("delta=%.4f plateau=%.6f coherent(q=1e-6)=%.2f", delta, plateau, rows.front().energy_coherent));
        if (delta == kPi / 12) {
            double ratio = rows.front().energy_coherent / rows.front().energy_optimal;
            c.expect(std::abs(rows.front().q - 1e-6) < 1e-18, "first row at q = 1e-6");
            c.expect(ratio > 60.0, fmt("pi/12 ratio at q=1e-6 = %.2f > 60", ratio));
            c.note(fmt("pi/12 ratio at q=1e-6 = %.2f", ratio));
        }
    }
}

/// Two-mode coherent probe, each mode homodyned along its own displacement
/// difference, combined by the likelihood ratio.
void criterion_homodyne_mc(Checks &c) {
    const double energy = 1.757359;
    const double delta = kPi / 4;
    const long samples = 1000000;
    const std::complex<double> beta1 = std::sqrt(0.7 * energy);
    const std::complex<double> beta2 = std::polar(std::sqrt(0.3 * energy), 0.4);
    const std::complex<double> phase = std::polar(1.0, delta);
    const std::complex<double> in[2][2] = {{beta1, beta2}, {phase * beta1, std::conj(phase) * beta2}};

    double mean[2][2];
    for (int mode = 0; mode < 2; mode++) {
        std::complex<double> diff = in[1][mode] - in[0][mode];
        std::complex<double> dir = diff / std::abs(diff);
        for (int h = 0; h < 2; h++) {
            mean[h][mode] = std::sqrt(2.0) * (std::conj(dir) * in[h][mode]).real();
        }
    }

    std::mt19937_64 rng(kDefaultOracleSeed);
    std::normal_distribution<double> noise(0.0, std::sqrt(0.5));
    std::bernoulli_distribution coin(0.5);
    long errors = 0;
    for (long s = 0; s < samples; s++) {
        int h = coin(rng) ? 1 : 0;
        double score = 0.0;
        for (int mode = 0; mode < 2; mode++) {
            double x = mean[h][mode] + noise(rng);
            double gap = mean[1][mode] - mean[0][mode];
            score += gap * (x - 0.5 * (mean[1][mode] + mean[0][mode]));
        }
        int guess = score > 0.0 ? 1 : 0;
        errors += guess != h;
    }
    double rate = static_cast<double>(errors) / samples;
    double closed = coherent_homodyne_error(energy, delta);
    double sigma = std::sqrt(closed * (1.0 - closed) / samples);
    c.near(rate, 0.155223, 3 * sigma, "empirical vs stated 0.155223");
    c.near(rate, closed, 3 * sigma, "empirical vs closed form");
    c.note(fmt("empirical=%.6f closed=%.6f 3sigma=%.6f", rate, closed, 3 * sigma));
}

void criterion_invariance(Checks &c) {
    for (int k = 1; k <= 1000; k++) {
        double q = 0.5 * k / 1001.0;
        c.near(error_probability(threshold_K({Mode::Ambiguous, q})), q, 1e-12, fmt("round trip q=%.6f", q));
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 1000; t++) {
        double mod = unit(rng);
        std::complex<double> g = std::polar(mod, angle(rng));
        c.near(error_probability(g), error_probability(mod), 1e-15, "P_e phase invariance");
        c.near(failure_probability(g), failure_probability(mod), 1e-15, "P_f phase invariance");
    }

    std::uniform_int_distribution<int> photon(0, 10);
    for (int t = 0; t < 100; t++) {
        ProbeState s(20);
        for (int term = 0; term < 12; term++) {
            s.set({photon(rng), photon(rng)}, {gauss(rng), gauss(rng)});
        }
        s = normalize(s);
        DeviceSpec dev(unit(rng) * kPi);
        ProbeState out = apply_device(s, dev);
        c.near(out.norm_squared(), 1.0, 1e-12, "norm preserved");
        c.near(energy(out), energy(s), 1e-12, "energy invariant");
    }

    for (int t = 0; t < 100; t++) {
        auto random_su2 = [&] {
            double theta = std::acos(std::sqrt(unit(rng)));
            std::complex<double> a = std::polar(std::cos(theta), angle(rng));
            std::complex<double> b = std::polar(std::sin(theta), angle(rng));
            return ScatteringMatrix(a, b, -std::conj(b), std::conj(a));
        };
        ScatteringMatrix u1 = random_su2();
        ScatteringMatrix u2 = random_su2();
        ScatteringMatrix v = random_su2() * ScatteringMatrix::diagonal(std::polar(1.0, angle(rng)),
                                                                      std::polar(1.0, angle(rng)));
        c.near(reduce_pair(v * u1, v * u2).delta(), reduce_pair(u1, u2).delta(), 1e-9, "left invariance");
    }
}

std::string run_to_file(const std::vector<std::string> &args, const std::filesystem::path &path,
                        bool capture_stdout) {
    std::ostringstream out;
    std::ostringstream err;
    std::vector<std::string> full = args;
    if (!capture_stdout) {
        full.push_back("--out");
        full.push_back(path.string());
    }
    int code = run_cli(full, out, err);
    if (capture_stdout) {
        std::ofstream(path, std::ios::binary) << out.str();
    }
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::to_string(code) + "\n" + ss.str();
}

void criterion_determinism(Checks &c) {
    auto dir = std::filesystem::temp_directory_path();
    const std::vector<std::string> verify = {"verify", "--delta", "pi/12", "--mode", "ambiguous",
                                             "--samples", "20000", "--seed", "4242"};
    const std::vector<std::string> tradeoff = {"tradeoff", "--delta", "pi/12", "--points", "200"};
    std::string v1 = run_to_file(verify, dir / "qreading_accept_verify_1.txt", true);
    std::string v2 = run_to_file(verify, dir / "qreading_accept_verify_2.txt", true);
    std::string t1 = run_to_file(tradeoff, dir / "qreading_accept_tradeoff_1.csv", false);
    std::string t2 = run_to_file(tradeoff, dir / "qreading_accept_tradeoff_2.csv", false);
    c.expect(v1.rfind("0\n", 0) == 0, "verify exit 0");
    c.expect(t1.rfind("0\n", 0) == 0, "tradeoff exit 0");
    c.expect(v1 == v2, "verify outputs byte-identical");
    c.expect(t1 == t2, "tradeoff outputs byte-identical");
    c.expect(t1.size() > 1000, "tradeoff output non-trivial");
}

struct Criterion {
    const char *name;
    double budget_seconds;
    std::function<void(Checks &)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 closed-form design values", 1.0, criterion_design_values},
        {"2 constraint saturation sweep", 1.0, criterion_saturation},
        {"3 oracle agreement", 60.0, criterion_oracle},
        {"4 tradeoff qualitative reproduction", 10.0, criterion_fig1},
        {"5 homodyne Monte Carlo", 10.0, criterion_homodyne_mc},
        {"6 round-trip and invariance suites", 10.0, criterion_invariance},
        {"7 determinism", 30.0, criterion_determinism},
    };

    int failed = 0;
    for (const auto &criterion : criteria) {
        Checks checks;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(checks);
        } catch (const std::exception &e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checks.expect(seconds <= criterion.budget_seconds,
                      fmt("runtime %.2fs exceeds %.0fs", seconds, criterion.budget_seconds));
        bool ok = !checks.failed();
        failed += !ok;
        std::printf("[%s] criterion %s (%.3fs)", ok ? "PASS" : "FAIL", criterion.name, seconds);
        for (const auto &note : checks.notes()) {
            std::printf("; %s", note.c_str());
        }
        std::printf("\n");
        for (const auto &failure : checks.failures()) {
            std::printf("    %s\n", failure.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
