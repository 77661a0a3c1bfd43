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

#include "qreading/cli.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "qreading/device.h"
#include "qreading/error.h"
#include "qreading/oracle.h"
#include "qreading/tradeoff.h"

namespace qreading {

namespace {

/// Carries an exit status out of a subcommand.
struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotUnitary:
        case ErrorCode::NotUnitDeterminant:
            return kExitDevice;
        default:
            return kExitUsage;
    }
}

double parse_number(const std::string &text) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw Error(ErrorCode::InvalidArgs, "not a number: '" + text + "'");
    }
    return value;
}

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliFailure{kExitIo, "cannot read " + path};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Either --delta or the --u1/--u2 pair.
struct DeltaSource {
    std::string delta;
    std::string u1;
    std::string u2;

    void attach(CLI::App &cmd) {
        auto *d = cmd.add_option("--delta", delta, "Eigenphase of U in radians; accepts pi fractions like pi/12");
        auto *a = cmd.add_option("--u1", u1, "JSON file with the first scattering matrix");
        auto *b = cmd.add_option("--u2", u2, "JSON file with the second scattering matrix");
        d->excludes(a)->excludes(b);
        a->needs(b);
        b->needs(a);
    }

    double resolve() const {
        if (!delta.empty()) {
            return parse_angle(delta);
        }
        if (u1.empty()) {
            throw CliFailure{kExitUsage, "either --delta or --u1/--u2 is required"};
        }
        ScatteringMatrix m1 = parse_scattering_json(read_file(u1));
        ScatteringMatrix m2 = parse_scattering_json(read_file(u2));
        double reduced = reduce_pair(m1, m2).delta();
        if (reduced <= 0.0) {
            throw CliFailure{kExitDevice, "devices are identical (delta = 0) and cannot be discriminated"};
        }
        return reduced;
    }
};

struct DesignArgs {
    DeltaSource source;
    std::string mode = "ambiguous";
    double q = 0.0;
};

struct TradeoffArgs {
    DeltaSource source;
    std::string mode = "ambiguous";
    int points = 200;
    double q_min = 1e-6;
    std::optional<double> q_max;
    bool linear = false;
    std::string baseline = "homodyne";
    std::string out_path;
};

struct VerifyArgs {
    DeltaSource source;
    std::string mode = "ambiguous";
    std::vector<double> q_grid;
    std::optional<int> d_max;
    long long samples = 100000;
    std::string seed = "0xC0FFEE";
};

int cmd_design(const DesignArgs &args, std::ostream &out) {
    double delta = args.source.resolve();
    DesignResult result = design_probe(delta, make_task(parse_mode(args.mode), args.q));
    out << design_to_json(result).dump(2) << '\n';
    return kExitOk;
}

int cmd_tradeoff(const TradeoffArgs &args, std::ostream &out) {
    double delta = args.source.resolve();
    Mode mode = parse_mode(args.mode);
    TradeoffOptions options;
    options.points = args.points;
    options.q_min = args.q_min;
    options.q_max = args.q_max.value_or(mode == Mode::Ambiguous ? 0.49 : 0.99);
    options.log_spacing = !args.linear;
    if (args.baseline == "homodyne") {
        options.baseline = CoherentBaseline::Homodyne;
    } else if (args.baseline == "helstrom") {
        options.baseline = CoherentBaseline::Helstrom;
    } else {
        throw CliFailure{kExitUsage, "unknown baseline '" + args.baseline + "'"};
    }
    TradeoffCurve curve = compute_tradeoff(delta, mode, options);

    if (args.out_path.empty()) {
        write_csv(curve, out);
        return kExitOk;
    }
    std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw CliFailure{kExitIo, "cannot write " + args.out_path};
    }
    write_csv(curve, file);
    file.close();
    if (!file) {
        throw CliFailure{kExitIo, "failed writing " + args.out_path};
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    double delta = args.source.resolve();
    Mode mode = parse_mode(args.mode);
    std::vector<double> grid = args.q_grid;
    if (grid.empty()) {
        grid = mode == Mode::Ambiguous ? std::vector<double>{0.0, 1e-6, 1e-3, 0.05, 0.2, 0.4}
                                       : std::vector<double>{0.0, 1e-3, 0.05, 0.25, 0.5, 0.9};
    }
    int d_max = args.d_max.value_or(static_cast<int>(std::ceil(solve_x_star(delta))) + 4);
    if (args.samples < 0) {
        throw CliFailure{kExitUsage, "--samples must be non-negative"};
    }
    std::uint64_t seed;
    try {
        size_t used = 0;
        seed = std::stoull(args.seed, &used, 0);
        if (used != args.seed.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw CliFailure{kExitUsage, "invalid --seed '" + args.seed + "'"};
    }
    // Validate every point before printing anything.
    std::vector<ReadingTask> tasks;
    for (double q : grid) {
        tasks.push_back(make_task(mode, q));
    }
    if (d_max < oracle_min_d_max(delta)) {
        throw Error(ErrorCode::InvalidArgs, "--d-max must be at least ceil(x*) + 3 = " +
                                                std::to_string(oracle_min_d_max(delta)));
    }

    out << "verify delta=" << fmt(delta) << " mode=" << to_string(mode) << " d_max=" << d_max
        << " samples=" << args.samples << " seed=" << seed << '\n';
    int passed = 0;
    for (const ReadingTask &task : tasks) {
        DesignResult design = design_probe(delta, task);
        OracleResult oracle =
            brute_force_search(delta, design.K, d_max, static_cast<std::uint64_t>(args.samples), seed);
        DiagonalDistribution induced = induced_distribution(design.probe);
        bool achievable = std::abs(dist_overlap(induced, delta)) <= design.K + kOracleFeasibilitySlack &&
                          std::abs(dist_energy(induced) - oracle.energy) <= 1e-6;
        double gap = oracle.energy - design.energy;
        bool ok = gap >= -1e-6 && gap <= 1e-6 && achievable;
        passed += ok;
        out << "q=" << fmt(task.q) << " K=" << fmt(design.K) << " n_star=" << design.n_star
            << " closed_form=" << fmt(design.energy) << " oracle=" << fmt(oracle.energy) << " gap=" << fmt(gap)
            << " stage=" << oracle.stage << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    }
    out << "summary: " << passed << "/" << tasks.size() << " PASS\n";
    return passed == static_cast<int>(tasks.size()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    static const std::regex pi_form(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(\*?)pi(?:/(\d+\.?\d*|\.\d+))?$)",
                                    std::regex::icase);
    std::smatch match;
    if (std::regex_match(s, match, pi_form)) {
        if (match[3].length() > 0 && !match[2].matched) {
            throw Error(ErrorCode::InvalidArgs, "invalid angle '" + s + "'");
        }
        double value = std::numbers::pi;
        if (match[2].matched) {
            value *= parse_number(match[2].str());
        }
        if (match[4].matched) {
            double denom = parse_number(match[4].str());
            if (denom == 0.0) {
                throw Error(ErrorCode::InvalidArgs, "division by zero in angle '" + s + "'");
            }
            value /= denom;
        }
        return match[1].str() == "-" ? -value : value;
    }
    return parse_number(s);
}

nlohmann::ordered_json design_to_json(const DesignResult &result) {
    nlohmann::ordered_json doc;
    doc["delta"] = result.delta;
    doc["mode"] = std::string(to_string(result.task.mode));
    doc["q"] = result.task.q;
    doc["K"] = result.K;
    doc["n_star"] = result.n_star;
    doc["alpha"] = result.alpha;
    doc["energy"] = result.energy;
    doc["achieved_probability"] = result.achieved_probability;
    auto amplitudes = nlohmann::ordered_json::array();
    for (const auto &[index, value] : result.probe.amplitudes()) {
        amplitudes.push_back({index.n, index.m, value.real(), value.imag()});
    }
    doc["probe"] = std::move(amplitudes);
    return doc;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimum-energy quantum probes for reading beamsplitter memories", "qreading"};
    app.require_subcommand(1);

    DesignArgs design_args;
    auto *design = app.add_subcommand("design", "Print the optimal NOON+vacuum probe as JSON");
    design_args.source.attach(*design);
    design->add_option("--mode", design_args.mode, "ambiguous | unambiguous")->capture_default_str();
    design->add_option("--q", design_args.q, "Error (ambiguous) or failure (unambiguous) budget")
        ->capture_default_str();

    TradeoffArgs tradeoff_args;
    auto *tradeoff = app.add_subcommand("tradeoff", "Write the energy versus threshold tradeoff as CSV");
    tradeoff_args.source.attach(*tradeoff);
    tradeoff->add_option("--mode", tradeoff_args.mode, "ambiguous | unambiguous")->capture_default_str();
    tradeoff->add_option("--points", tradeoff_args.points, "Number of grid points (>= 2)")->capture_default_str();
    tradeoff->add_option("--q-min", tradeoff_args.q_min, "Smallest threshold")->capture_default_str();
    tradeoff->add_option("--q-max", tradeoff_args.q_max, "Largest threshold (default 0.49 / 0.99)");
    tradeoff->add_flag("--linear", tradeoff_args.linear, "Linear instead of logarithmic q spacing");
    tradeoff
        ->add_option("--baseline", tradeoff_args.baseline,
                     "Coherent comparison column: homodyne | helstrom (renames the column)")
        ->capture_default_str();
    tradeoff->add_option("--out", tradeoff_args.out_path, "Output CSV path (stdout if omitted)");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check the closed-form energy against the brute-force oracle");
    verify_args.source.attach(*verify);
    verify->add_option("--mode", verify_args.mode, "ambiguous | unambiguous")->capture_default_str();
    verify->add_option("--q", verify_args.q_grid, "Comma-separated thresholds")->delimiter(',');
    verify->add_option("--d-max", verify_args.d_max, "Largest photon-number difference searched (default ceil(x*)+4)");
    verify->add_option("--samples", verify_args.samples, "Random distributions sampled")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "Sampler seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (design->parsed()) {
            return cmd_design(design_args, out);
        }
        if (tradeoff->parsed()) {
            return cmd_tradeoff(tradeoff_args, out);
        }
        return cmd_verify(verify_args, out);
    } catch (const CliFailure &failure) {
        err << "error: " << failure.message << '\n';
        return failure.code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace qreading
