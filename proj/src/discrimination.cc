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

#include "qreading/discrimination.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qreading/error.h"

namespace qreading {

namespace {

double clamped_modulus(std::complex<double> gamma) {
    double mod = std::abs(gamma);
    if (!(mod <= 1.0 + kOverlapLimit)) {
        throw Error(ErrorCode::InvalidOverlap, "overlap modulus " + std::to_string(mod) + " exceeds 1");
    }
    // Drift up to kOverlapLimit is absorbed; the guaranteed range is kOverlapClamp.
    return std::min(mod, 1.0);
}

}  // namespace

std::string_view to_string(Mode mode) {
    return mode == Mode::Ambiguous ? "ambiguous" : "unambiguous";
}

Mode parse_mode(std::string_view text) {
    if (text == "ambiguous") {
        return Mode::Ambiguous;
    }
    if (text == "unambiguous") {
        return Mode::Unambiguous;
    }
    throw Error(ErrorCode::InvalidArgs, "unknown mode '" + std::string(text) + "'");
}

double max_threshold(Mode mode) noexcept {
    return mode == Mode::Ambiguous ? 0.5 : 1.0;
}

void ReadingTask::validate() const {
    if (!(q >= 0.0 && q <= max_threshold(mode))) {
        throw Error(ErrorCode::InvalidThreshold, "q = " + std::to_string(q) + " outside [0, " +
                                                     std::to_string(max_threshold(mode)) + "] for " +
                                                     std::string(to_string(mode)) + " reading");
    }
}

ReadingTask make_task(Mode mode, double q) {
    ReadingTask task{mode, q};
    task.validate();
    return task;
}

double error_probability(std::complex<double> gamma) {
    double mod = clamped_modulus(gamma);
    // 1 - |g|^2 factored to keep precision near |g| = 1.
    return 0.5 * (1.0 - std::sqrt((1.0 - mod) * (1.0 + mod)));
}

double failure_probability(std::complex<double> gamma) {
    return clamped_modulus(gamma);
}

double task_probability(Mode mode, std::complex<double> gamma) {
    return mode == Mode::Ambiguous ? error_probability(gamma) : failure_probability(gamma);
}

double threshold_K(const ReadingTask &task) {
    task.validate();
    if (task.mode == Mode::Unambiguous) {
        return task.q;
    }
    return std::sqrt(4.0 * task.q * (1.0 - task.q));
}

}  // namespace qreading
