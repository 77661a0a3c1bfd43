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

#ifndef QREADING_TRADEOFF_H
#define QREADING_TRADEOFF_H

#include <iosfwd>
#include <string>
#include <vector>

#include "qreading/discrimination.h"

namespace qreading {

enum class CoherentBaseline {
    Homodyne,
    Helstrom,
};

struct TradeoffRow {
    double q = 0.0;
    double K = 0.0;
    int n_star = 0;
    double alpha = 0.0;
    double energy_optimal = 0.0;
    /// NaN in unambiguous mode.
    double energy_coherent = 0.0;
};

struct TradeoffOptions {
    int points = 200;
    double q_min = 1e-6;
    double q_max = 0.49;
    bool log_spacing = true;
    CoherentBaseline baseline = CoherentBaseline::Homodyne;
};

struct TradeoffCurve {
    double delta = 0.0;
    Mode mode = Mode::Ambiguous;
    CoherentBaseline baseline = CoherentBaseline::Homodyne;
    std::vector<TradeoffRow> rows;
};

/// q grid from q_min to q_max inclusive, ascending. Throws InvalidArgs.
std::vector<double> threshold_grid(const TradeoffOptions &options, Mode mode);

TradeoffCurve compute_tradeoff(double delta, Mode mode, const TradeoffOptions &options);

std::string csv_header(CoherentBaseline baseline);

/// Full-precision CSV (17 significant digits, '\n' line endings).
void write_csv(const TradeoffCurve &curve, std::ostream &out);

/// Parses what write_csv produced. Throws ParseError.
std::vector<TradeoffRow> read_csv(std::istream &in);

}  // namespace qreading

#endif
