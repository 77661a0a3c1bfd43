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

#ifndef QREADING_DEVICE_H
#define QREADING_DEVICE_H

#include <array>
#include <complex>
#include <string_view>

namespace qreading {

using Complex = std::complex<double>;

/// Canonical form of a device pair {I, U} where U = exp(i delta (n1 - n2)) in
/// the eigenbasis of the reduced scattering matrix. delta lies in [0, pi].
class DeviceSpec {
   public:
    explicit DeviceSpec(double delta);

    double delta() const noexcept {
        return delta_;
    }

   private:
    double delta_;
};

double eigenphase(const DeviceSpec &dev) noexcept;

/// 2x2 complex matrix acting on the mode operators, stored row-major.
class ScatteringMatrix {
   public:
    static constexpr double kUnitaryTolerance = 1e-10;

    ScatteringMatrix();
    ScatteringMatrix(Complex a00, Complex a01, Complex a10, Complex a11);
    explicit ScatteringMatrix(const std::array<Complex, 4> &entries);

    static ScatteringMatrix identity();
    static ScatteringMatrix diagonal(Complex d0, Complex d1);
    static ScatteringMatrix rotation(double theta);

    Complex operator()(int row, int col) const {
        return entries_[2 * row + col];
    }
    const std::array<Complex, 4> &entries() const noexcept {
        return entries_;
    }

    Complex trace() const;
    Complex determinant() const;
    ScatteringMatrix adjoint() const;
    ScatteringMatrix operator*(const ScatteringMatrix &rhs) const;

    /// Largest entry of |M^dagger M - I|.
    double unitarity_defect() const;
    bool is_unitary(double tol = kUnitaryTolerance) const;

   private:
    std::array<Complex, 4> entries_;
};

/// Reduces the discrimination of {u1, u2} to {I, u1^-1 u2} and returns the
/// eigenphase delta of the latter. Throws NotUnitary or NotUnitDeterminant.
DeviceSpec reduce_pair(const ScatteringMatrix &u1, const ScatteringMatrix &u2);

/// Parses `[[re, im], [re, im], [re, im], [re, im]]` (row-major). Throws
/// ParseError on malformed input; unitarity is not checked here.
ScatteringMatrix parse_scattering_json(std::string_view text);

}  // namespace qreading

#endif
