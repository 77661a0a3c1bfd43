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

#ifndef QREADING_FOCK_H
#define QREADING_FOCK_H

#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "qreading/device.h"

namespace qreading {

/// Fock basis label |n, m>: n photons in mode 1, m photons in mode 2.
struct FockIndex {
    int n = 0;
    int m = 0;

    int total() const noexcept {
        return n + m;
    }
    int difference() const noexcept {
        return n - m;
    }

    auto operator<=>(const FockIndex &) const = default;
};

std::string to_string(const FockIndex &index);

/// Pure two-mode state truncated at total photon number `cutoff`, stored as a
/// sparse amplitude table. Absent entries are zero.
///
/// The table itself may be unnormalized (normalize() exists for that); the
/// functions that take a probe as a physical state assume unit norm.
class ProbeState {
   public:
    static constexpr int kDefaultCutoff = 64;
    static constexpr double kNormTolerance = 1e-12;

    using Table = std::map<FockIndex, Complex>;

    explicit ProbeState(int cutoff = kDefaultCutoff);
    ProbeState(std::initializer_list<std::pair<const FockIndex, Complex>> amplitudes,
               int cutoff = kDefaultCutoff);
    ProbeState(Table amplitudes, int cutoff);

    static ProbeState vacuum(int cutoff = kDefaultCutoff);

    int cutoff() const noexcept {
        return cutoff_;
    }
    const Table &amplitudes() const noexcept {
        return amplitudes_;
    }

    Complex amplitude(FockIndex index) const;
    /// Stores `value` at `index`; zero values erase the entry.
    void set(FockIndex index, Complex value);

    double norm_squared() const;
    bool is_normalized(double tol = kNormTolerance) const;

   private:
    void check_index(FockIndex index) const;

    Table amplitudes_;
    int cutoff_;
};

/// Equality up to absent zeros: every amplitude on the union of supports
/// agrees within `tol`.
bool approx_equal(const ProbeState &a, const ProbeState &b, double tol = 1e-12);

ProbeState normalize(const ProbeState &state);

/// Tr[rho N] with N = n1 + n2.
double energy(const ProbeState &state);

/// Applies U = exp(i delta (n1 - n2)): c_nm -> c_nm e^{i delta (n - m)}.
ProbeState apply_device(const ProbeState &state, const DeviceSpec &dev);

/// <a|b>.
Complex overlap(const ProbeState &a, const ProbeState &b);

}  // namespace qreading

#endif
