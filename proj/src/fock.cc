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

#include "qreading/fock.h"

#include <algorithm>
#include <cmath>

#include "qreading/error.h"

namespace qreading {

std::string to_string(const FockIndex &index) {
    return "|" + std::to_string(index.n) + "," + std::to_string(index.m) + ">";
}

ProbeState::ProbeState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) {
        throw Error(ErrorCode::InvalidArgs, "cutoff must be non-negative");
    }
}

ProbeState::ProbeState(std::initializer_list<std::pair<const FockIndex, Complex>> amplitudes, int cutoff)
    : ProbeState(cutoff) {
    for (const auto &[index, value] : amplitudes) {
        set(index, value);
    }
}

ProbeState::ProbeState(Table amplitudes, int cutoff) : ProbeState(cutoff) {
    for (const auto &[index, value] : amplitudes) {
        set(index, value);
    }
}

ProbeState ProbeState::vacuum(int cutoff) {
    return ProbeState({{FockIndex{0, 0}, Complex{1.0, 0.0}}}, cutoff);
}

void ProbeState::check_index(FockIndex index) const {
    if (index.n < 0 || index.m < 0) {
        throw Error(ErrorCode::InvalidArgs, "negative photon count in " + to_string(index));
    }
    if (index.total() > cutoff_) {
        throw Error(ErrorCode::InvalidArgs,
                    to_string(index) + " exceeds cutoff " + std::to_string(cutoff_));
    }
}

Complex ProbeState::amplitude(FockIndex index) const {
    auto it = amplitudes_.find(index);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

void ProbeState::set(FockIndex index, Complex value) {
    check_index(index);
    if (value == Complex{}) {
        amplitudes_.erase(index);
    } else {
        amplitudes_[index] = value;
    }
}

double ProbeState::norm_squared() const {
    double total = 0.0;
    for (const auto &[index, value] : amplitudes_) {
        total += std::norm(value);
    }
    return total;
}

bool ProbeState::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

bool approx_equal(const ProbeState &a, const ProbeState &b, double tol) {
    for (const auto &[index, value] : a.amplitudes()) {
        if (std::abs(value - b.amplitude(index)) > tol) {
            return false;
        }
    }
    for (const auto &[index, value] : b.amplitudes()) {
        if (std::abs(value - a.amplitude(index)) > tol) {
            return false;
        }
    }
    return true;
}

ProbeState normalize(const ProbeState &state) {
    double norm2 = state.norm_squared();
    if (!(norm2 > 0.0)) {
        throw Error(ErrorCode::ZeroState, "cannot normalize the zero vector");
    }
    double scale = 1.0 / std::sqrt(norm2);
    ProbeState out(state.cutoff());
    for (const auto &[index, value] : state.amplitudes()) {
        out.set(index, value * scale);
    }
    return out;
}

double energy(const ProbeState &state) {
    double total = 0.0;
    for (const auto &[index, value] : state.amplitudes()) {
        total += std::norm(value) * index.total();
    }
    return total;
}

ProbeState apply_device(const ProbeState &state, const DeviceSpec &dev) {
    ProbeState out(state.cutoff());
    for (const auto &[index, value] : state.amplitudes()) {
        out.set(index, value * std::polar(1.0, dev.delta() * index.difference()));
    }
    return out;
}

Complex overlap(const ProbeState &a, const ProbeState &b) {
    // Walk the smaller support.
    const ProbeState &small = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
    Complex total{};
    for (const auto &[index, value] : small.amplitudes()) {
        total += std::conj(a.amplitude(index)) * b.amplitude(index);
    }
    return total;
}

}  // namespace qreading
