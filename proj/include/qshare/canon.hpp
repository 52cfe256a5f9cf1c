// Copyright 2026 The qshare Authors
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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qshare/state.hpp"
#include "qshare/types.hpp"

namespace qshare {

/// 1/sqrt(2) (|000> + |111>).
inline StateVector ghz3() {
    std::vector<Amplitude> amps(8);
    amps[0] = amps[7] = kInvSqrt2;
    return StateVector::from_amplitudes(3, std::move(amps));
}

/// Equal superposition of the m single-excitation basis states, 3 <= m <= 12.
inline StateVector w_n(int m) {
    if (m < 3 || m > 12) throw std::invalid_argument("W state size " + std::to_string(m) + " outside [3, 12]");
    std::vector<Amplitude> amps(std::size_t{1} << m);
    const double a = 1.0 / std::sqrt(static_cast<double>(m));
    for (int k = 0; k < m; ++k) amps[std::size_t{1} << k] = a;
    return StateVector::from_amplitudes(m, std::move(amps));
}

/// 1/sqrt(3) (|001> + |010> + |100>).
inline StateVector w3() { return w_n(3); }

/// Amplitude <ab|Bell_k> for a, b in {0, 1}, first bit on the first qubit of the pair.
inline Amplitude bell_component(BellOutcome k, int a, int b) {
    const int type = bell_type(k);
    if ((a ^ b) != type) return 0.0;
    // Phi: |00> +- |11>; Psi: |01> +- |10>. The sign sits on the term whose first bit is 1.
    const double sign = (bell_sign(k) && a == 1) ? -1.0 : 1.0;
    return sign * kInvSqrt2;
}

inline StateVector bell_state(BellOutcome k) {
    std::vector<Amplitude> amps(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) amps[(a << 1) | b] = bell_component(k, a, b);
    return StateVector::from_amplitudes(2, std::move(amps));
}

struct CbitPair {
    int hi = 0;
    int lo = 0;
    friend constexpr bool operator==(CbitPair, CbitPair) = default;
    constexpr int value() const { return (hi << 1) | lo; }
};

/// Fixed message convention: I <-> 00, X <-> 01, iY <-> 10, Z <-> 11.
constexpr CbitPair pauli_to_cbits(PauliOp op) {
    const int v = index_of(op);
    return {v >> 1, v & 1};
}

constexpr PauliOp cbits_to_pauli(CbitPair c) {
    if ((c.hi & ~1) || (c.lo & ~1)) throw std::invalid_argument("cbits must be 0 or 1");
    return static_cast<PauliOp>(c.value());
}

/// 1 when the operation flips the computational value (X, iY).
constexpr int amplitude_flip_bit(PauliOp op) { return (op == PauliOp::X || op == PauliOp::iY) ? 1 : 0; }
/// 1 when the operation carries a relative phase (iY, Z).
constexpr int phase_flip_bit(PauliOp op) { return (op == PauliOp::iY || op == PauliOp::Z) ? 1 : 0; }

}  // namespace qshare
