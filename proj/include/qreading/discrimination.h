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

#ifndef QREADING_DISCRIMINATION_H
#define QREADING_DISCRIMINATION_H

#include <complex>
#include <string_view>

namespace qreading {

// Figures of merit for discriminating two equiprobable pure states with
// overlap gamma. Only |gamma| matters.

enum class Mode {
    Ambiguous,
    Unambiguous,
};

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Largest admissible threshold: 1/2 for ambiguous reading, 1 for unambiguous.
double max_threshold(Mode mode) noexcept;

struct ReadingTask {
    Mode mode = Mode::Ambiguous;
    double q = 0.0;

    /// Throws InvalidThreshold unless 0 <= q <= max_threshold(mode).
    void validate() const;
};

ReadingTask make_task(Mode mode, double q);

/// Overlaps with |gamma| in (1, 1 + kOverlapClamp] are treated as 1; anything
/// beyond kOverlapLimit raises InvalidOverlap.
inline constexpr double kOverlapClamp = 1e-12;
inline constexpr double kOverlapLimit = 1e-9;

/// Helstrom error (1 - sqrt(1 - |gamma|^2)) / 2.
double error_probability(std::complex<double> gamma);

/// Inconclusive-outcome probability |gamma| of optimal unambiguous discrimination.
double failure_probability(std::complex<double> gamma);

/// Dispatches to error_probability or failure_probability.
double task_probability(Mode mode, std::complex<double> gamma);

/// Largest output overlap compatible with the task's budget q.
double threshold_K(const ReadingTask &task);

}  // namespace qreading

#endif
