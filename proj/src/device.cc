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

#include "qreading/device.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "json.hpp"
#include "qreading/error.h"

namespace qreading {

namespace {

constexpr double kDeterminantTolerance = 1e-8;

}  // namespace

DeviceSpec::DeviceSpec(double delta) : delta_(delta) {
    if (!(delta >= 0.0 && delta <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidDelta, "delta must lie in [0, pi], got " + std::to_string(delta));
    }
}

double eigenphase(const DeviceSpec &dev) noexcept {
    return dev.delta();
}

ScatteringMatrix::ScatteringMatrix() : entries_{} {
}

ScatteringMatrix::ScatteringMatrix(Complex a00, Complex a01, Complex a10, Complex a11)
    : entries_{a00, a01, a10, a11} {
}

ScatteringMatrix::ScatteringMatrix(const std::array<Complex, 4> &entries) : entries_(entries) {
}

ScatteringMatrix ScatteringMatrix::identity() {
    return {1.0, 0.0, 0.0, 1.0};
}

ScatteringMatrix ScatteringMatrix::diagonal(Complex d0, Complex d1) {
    return {d0, 0.0, 0.0, d1};
}

ScatteringMatrix ScatteringMatrix::rotation(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return {c, -s, s, c};
}

Complex ScatteringMatrix::trace() const {
    return entries_[0] + entries_[3];
}

Complex ScatteringMatrix::determinant() const {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

ScatteringMatrix ScatteringMatrix::adjoint() const {
    return {std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]), std::conj(entries_[3])};
}

ScatteringMatrix ScatteringMatrix::operator*(const ScatteringMatrix &rhs) const {
    const ScatteringMatrix &lhs = *this;
    std::array<Complex, 4> out{};
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            out[2 * r + c] = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
        }
    }
    return ScatteringMatrix(out);
}

double ScatteringMatrix::unitarity_defect() const {
    ScatteringMatrix gram = adjoint() * *this;
    ScatteringMatrix id = identity();
    double worst = 0.0;
    for (size_t k = 0; k < 4; k++) {
        worst = std::max(worst, std::abs(gram.entries()[k] - id.entries()[k]));
    }
    return worst;
}

bool ScatteringMatrix::is_unitary(double tol) const {
    return unitarity_defect() <= tol;
}

DeviceSpec reduce_pair(const ScatteringMatrix &u1, const ScatteringMatrix &u2) {
    if (!u1.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "first scattering matrix is not unitary");
    }
    if (!u2.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "second scattering matrix is not unitary");
    }
    // For unitary U1, U1^-1 = U1^dagger.
    ScatteringMatrix reduced = u1.adjoint() * u2;
    Complex det = reduced.determinant();
    if (std::abs(det - 1.0) > kDeterminantTolerance) {
        throw Error(ErrorCode::NotUnitDeterminant,
                    "det(U1^-1 U2) = (" + std::to_string(det.real()) + ", " + std::to_string(det.imag()) +
                        "); eigenvalues are not of the form e^{+-i delta}");
    }
    // With det = 1 the eigenvalues are e^{+-i delta} and tr = 2 cos(delta).
    double half_trace = std::clamp(reduced.trace().real() / 2.0, -1.0, 1.0);
    return DeviceSpec(std::acos(half_trace));
}

ScatteringMatrix parse_scattering_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != 4) {
        throw Error(ErrorCode::ParseError, "scattering matrix must be a JSON array of 4 [re, im] pairs");
    }
    std::array<Complex, 4> entries{};
    for (size_t k = 0; k < 4; k++) {
        const auto &pair = doc[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorCode::ParseError, "entry " + std::to_string(k) + " is not a [re, im] pair");
        }
        entries[k] = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return ScatteringMatrix(entries);
}

}  // namespace qreading
