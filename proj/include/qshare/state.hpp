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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qshare/rng.hpp"
#include "qshare/types.hpp"

namespace qshare {

using Amplitude = std::complex<double>;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline constexpr int kMaxQubits = 16;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kAmplitudeTolerance = 1e-12;
/// Branches below this probability are never sampled.
inline constexpr double kDegenerateProbability = 1e-12;

/// 1-based qubit label inside a register; label 1 is the most significant index bit.
struct QubitId {
    int label;
    explicit constexpr QubitId(int l) : label(l) {}
    friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Amplitude, 4>;

namespace gates {
inline const Mat2 kIdentity = {1.0, 0.0, 0.0, 1.0};
inline const Mat2 kX = {0.0, 1.0, 1.0, 0.0};
// i * sigma_y = [[0, 1], [-1, 0]]
inline const Mat2 kIY = {0.0, 1.0, -1.0, 0.0};
inline const Mat2 kZ = {1.0, 0.0, 0.0, -1.0};
inline const Mat2 kH = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};

/// exp(-i theta X / 2).
inline Mat2 rx(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {Amplitude(c, 0), Amplitude(0, -s), Amplitude(0, -s), Amplitude(c, 0)};
}

inline Mat2 pauli(PauliOp op) {
    switch (op) {
        case PauliOp::I: return kIdentity;
        case PauliOp::X: return kX;
        case PauliOp::iY: return kIY;
        case PauliOp::Z: return kZ;
    }
    throw std::invalid_argument("bad PauliOp");
}

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}
}  // namespace gates

/// Normalized state of n labeled qubits (1 <= n <= 16). Value type: every
/// operation below returns a new state.
class StateVector {
   public:
    /// Checked construction: size must be 2^n and the vector normalized within kNormTolerance.
    static StateVector from_amplitudes(int n, std::vector<Amplitude> amps) {
        check_qubit_count(n);
        if (amps.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument("amplitude count does not match 2^n");
        }
        StateVector s(n, std::move(amps));
        for (const auto& a : s.amps_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw std::invalid_argument("non-finite amplitude");
            }
        }
        if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
            throw std::invalid_argument("state is not normalized");
        }
        return s;
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static StateVector normalized(int n, std::vector<Amplitude> amps) {
        check_qubit_count(n);
        if (amps.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument("amplitude count does not match 2^n");
        }
        double norm2 = 0;
        for (const auto& a : amps) norm2 += std::norm(a);
        if (!(norm2 > 0) || !std::isfinite(norm2)) {
            throw std::invalid_argument("cannot normalize a zero or non-finite vector");
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= scale;
        return StateVector(n, std::move(amps));
    }

    int num_qubits() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](std::size_t index) const { return amps_[index]; }

    double norm_squared() const {
        double total = 0;
        for (const auto& a : amps_) total += std::norm(a);
        return total;
    }

    /// Index bit of a 1-based qubit label.
    std::size_t bit_of(QubitId q) const {
        check_qubit(q);
        return std::size_t{1} << (n_ - q.label);
    }

    void check_qubit(QubitId q) const {
        if (q.label < 1 || q.label > n_) {
            throw std::invalid_argument("qubit label " + std::to_string(q.label) + " outside register of " +
                                        std::to_string(n_) + " qubits");
        }
    }

    static void check_qubit_count(int n) {
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, 16]");
        }
    }

   private:
    StateVector(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {}

    int n_;
    std::vector<Amplitude> amps_;
};

inline StateVector basis_state_index(int n, std::size_t index) {
    StateVector::check_qubit_count(n);
    if (index >= (std::size_t{1} << n)) throw std::invalid_argument("basis index out of range");
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return StateVector::from_amplitudes(n, std::move(amps));
}

/// |b_1 b_2 ... b_n>, with b_1 on the most significant bit.
inline StateVector basis_state(int n, const std::vector<int>& bits) {
    StateVector::check_qubit_count(n);
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bit pattern length does not match qubit count");
    }
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    return basis_state_index(n, index);
}

/// a (x) b, with a's qubits first.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    const int n = a.num_qubits() + b.num_qubits();
    if (n > kMaxQubits) {
        throw std::length_error("tensor product of " + std::to_string(n) + " qubits exceeds the 16-qubit cap");
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    const int nb = b.num_qubits();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            amps[(i << nb) + j] = a[i] * b[j];
        }
    }
    return StateVector::normalized(n, std::move(amps));
}

inline StateVector apply_single(const StateVector& s, QubitId q, const Mat2& m) {
    const std::size_t bit = s.bit_of(q);
    std::vector<Amplitude> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = s[i], a1 = s[i | bit];
        out[i] = m[0] * a0 + m[1] * a1;
        out[i | bit] = m[2] * a0 + m[3] * a1;
    }
    return StateVector::normalized(s.num_qubits(), std::move(out));
}

/// Applies m to `target` on the subspace where `control` is 1.
inline StateVector apply_controlled(const StateVector& s, QubitId control, QubitId target, const Mat2& m) {
    const std::size_t cbit = s.bit_of(control);
    const std::size_t tbit = s.bit_of(target);
    if (cbit == tbit) throw std::invalid_argument("control and target must differ");
    std::vector<Amplitude> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!(i & cbit) || (i & tbit)) continue;
        const Amplitude a0 = s[i], a1 = s[i | tbit];
        out[i] = m[0] * a0 + m[1] * a1;
        out[i | tbit] = m[2] * a0 + m[3] * a1;
    }
    return StateVector::normalized(s.num_qubits(), std::move(out));
}

inline StateVector apply_pauli(const StateVector& s, QubitId q, PauliOp op) {
    return apply_single(s, q, gates::pauli(op));
}

/// <a|b>, conjugate-linear in a.
inline Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner product of registers of different size");
    Amplitude total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

/// True when |<a|b>| = 1 within tol, i.e. the states agree up to global phase.
inline bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kAmplitudeTolerance) {
    if (a.num_qubits() != b.num_qubits()) return false;
    return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tol;
}

/// Amplitude-wise equality (phase-sensitive).
inline bool equal_exact(const StateVector& a, const StateVector& b, double tol = kAmplitudeTolerance) {
    if (a.num_qubits() != b.num_qubits()) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) return false;
    }
    return true;
}

inline double probability_of_one(const StateVector& s, QubitId q) {
    const std::size_t bit = s.bit_of(q);
    double p = 0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (i & bit) p += std::norm(s[i]);
    }
    return p;
}

/// Projects qubit q onto |bit> and renormalizes; nullopt when that branch is degenerate.
inline std::optional<StateVector> project_qubit(const StateVector& s, QubitId q, int bit) {
    const std::size_t mask = s.bit_of(q);
    std::vector<Amplitude> out(s.dimension());
    double p = 0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (((i & mask) != 0) == (bit != 0)) {
            out[i] = s[i];
            p += std::norm(s[i]);
        }
    }
    if (p < kDegenerateProbability) return std::nullopt;
    return StateVector::normalized(s.num_qubits(), std::move(out));
}

template <UniformSource R>
std::pair<int, StateVector> measure_computational(const StateVector& s, QubitId q, R& rng) {
    const double p1 = probability_of_one(s, q);
    int bit;
    if (p1 < kDegenerateProbability) {
        bit = 0;
    } else if (1.0 - p1 < kDegenerateProbability) {
        bit = 1;
    } else {
        bit = rng.uniform() < p1 ? 1 : 0;
    }
    return {bit, *project_qubit(s, q, bit)};
}

enum class PauliBasis : std::uint8_t { Z = 0, X = 1, Y = 2 };

inline std::string_view to_string(PauliBasis b) {
    switch (b) {
        case PauliBasis::Z: return "Z";
        case PauliBasis::X: return "X";
        case PauliBasis::Y: return "Y";
    }
    return "?";
}

/// Rotation taking the basis' +1/-1 eigenvectors to |0>/|1>.
inline Mat2 basis_rotation(PauliBasis basis) {
    switch (basis) {
        case PauliBasis::Z: return gates::kIdentity;
        case PauliBasis::X: return gates::kH;
        case PauliBasis::Y:
            // H * S^dagger
            return {kInvSqrt2, Amplitude(0, -kInvSqrt2), kInvSqrt2, Amplitude(0, kInvSqrt2)};
    }
    throw std::invalid_argument("bad basis");
}

/// Measures qubit q in a Pauli eigenbasis. Returns the eigenvalue (+1 or -1) and
/// the post-measurement state, with q left in the observed eigenstate.
template <UniformSource R>
std::pair<int, StateVector> measure_in_basis(const StateVector& s, QubitId q, PauliBasis basis, R& rng) {
    const Mat2 u = basis_rotation(basis);
    auto [bit, collapsed] = measure_computational(apply_single(s, q, u), q, rng);
    return {bit == 0 ? +1 : -1, apply_single(collapsed, q, gates::adjoint(u))};
}

/// A state whose positions carry the protocol's qubit labels, so that labels
/// survive measurements that shrink the register.
struct LabeledState {
    StateVector state;
    std::vector<int> labels;

    QubitId position(int label) const {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw std::invalid_argument("no qubit labelled " + std::to_string(label));
        return QubitId(static_cast<int>(it - labels.begin()) + 1);
    }
};

}  // namespace qshare
