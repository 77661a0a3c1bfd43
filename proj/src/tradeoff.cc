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

#include "qreading/tradeoff.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qreading/baseline.h"
#include "qreading/design.h"
#include "qreading/error.h"

namespace qreading {

namespace {

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double coherent_energy(CoherentBaseline baseline, double q, double delta) {
    if (q >= 0.5) {
        return 0.0;
    }
    return baseline == CoherentBaseline::Homodyne ? coherent_energy_for_error(q, delta)
                                                  : coherent_helstrom_energy_for_error(q, delta);
}

}  // namespace

std::vector<double> threshold_grid(const TradeoffOptions &options, Mode mode) {
    if (options.points < 2) {
        throw Error(ErrorCode::InvalidArgs, "need at least 2 points");
    }
    if (!(options.q_min > 0.0 && options.q_min < options.q_max && options.q_max <= max_threshold(mode))) {
        throw Error(ErrorCode::InvalidArgs, "need 0 < q-min < q-max <= " + std::to_string(max_threshold(mode)));
    }
    std::vector<double> grid(static_cast<size_t>(options.points));
    const double last = options.points - 1;
    for (int k = 0; k < options.points; k++) {
        double t = k / last;
        if (options.log_spacing) {
            grid[k] = std::exp(std::log(options.q_min) + t * (std::log(options.q_max) - std::log(options.q_min)));
        } else {
            grid[k] = options.q_min + t * (options.q_max - options.q_min);
        }
    }
    grid.front() = options.q_min;
    grid.back() = options.q_max;
    return grid;
}

TradeoffCurve compute_tradeoff(double delta, Mode mode, const TradeoffOptions &options) {
    TradeoffCurve curve;
    curve.delta = delta;
    curve.mode = mode;
    curve.baseline = options.baseline;
    for (double q : threshold_grid(options, mode)) {
        DesignResult design = design_probe(delta, make_task(mode, q));
        TradeoffRow row;
        row.q = q;
        row.K = design.K;
        row.n_star = design.n_star;
        row.alpha = design.alpha;
        row.energy_optimal = design.energy;
        row.energy_coherent = mode == Mode::Ambiguous ? coherent_energy(options.baseline, q, delta)
                                                      : std::numeric_limits<double>::quiet_NaN();
        curve.rows.push_back(row);
    }
    return curve;
}

std::string csv_header(CoherentBaseline baseline) {
    return baseline == CoherentBaseline::Homodyne ? "q,K,n_star,alpha,energy_optimal,energy_coherent_homodyne"
                                                  : "q,K,n_star,alpha,energy_optimal,energy_coherent_helstrom";
}

void write_csv(const TradeoffCurve &curve, std::ostream &out) {
    out << csv_header(curve.baseline) << '\n';
    for (const auto &row : curve.rows) {
        out << format_double(row.q) << ',' << format_double(row.K) << ',' << row.n_star << ','
            << format_double(row.alpha) << ',' << format_double(row.energy_optimal) << ','
            << format_double(row.energy_coherent) << '\n';
    }
}

std::vector<TradeoffRow> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("q,K,n_star,alpha,energy_optimal,energy_coherent_", 0) != 0) {
        throw Error(ErrorCode::ParseError, "missing tradeoff CSV header");
    }
    std::vector<TradeoffRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 6) {
            throw Error(ErrorCode::ParseError, "expected 6 fields in '" + line + "'");
        }
        try {
            TradeoffRow row;
            row.q = std::stod(fields[0]);
            row.K = std::stod(fields[1]);
            row.n_star = std::stoi(fields[2]);
            row.alpha = std::stod(fields[3]);
            row.energy_optimal = std::stod(fields[4]);
            row.energy_coherent = std::stod(fields[5]);
            rows.push_back(row);
        } catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "malformed number in '" + line + "'");
        }
    }
    return rows;
}

}  // namespace qreading
