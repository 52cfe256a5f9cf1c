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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qshare {

/// The four local encoding operations {I, sigma_x, i sigma_y, sigma_z}.
enum class PauliOp : std::uint8_t { I = 0, X = 1, iY = 2, Z = 3 };

inline constexpr std::array<PauliOp, 4> kAllPauliOps = {PauliOp::I, PauliOp::X, PauliOp::iY, PauliOp::Z};

/// Outcome of a two-qubit Bell-basis measurement. Declaration order is also
/// the sort order used for tables: Phi+ < Phi- < Psi+ < Psi-.
enum class BellOutcome : std::uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

/// 0 for Phi-type, 1 for Psi-type.
constexpr int bell_type(BellOutcome b) { return static_cast<int>(b) >> 1; }
/// 0 for the '+' member, 1 for the '-' member.
constexpr int bell_sign(BellOutcome b) { return static_cast<int>(b) & 1; }
constexpr BellOutcome make_bell(int type, int sign) { return static_cast<BellOutcome>(((type & 1) << 1) | (sign & 1)); }

constexpr int index_of(PauliOp op) { return static_cast<int>(op); }
constexpr int index_of(BellOutcome b) { return static_cast<int>(b); }

inline std::string_view to_string(PauliOp op) {
    switch (op) {
        case PauliOp::I: return "I";
        case PauliOp::X: return "X";
        case PauliOp::iY: return "iY";
        case PauliOp::Z: return "Z";
    }
    return "?";
}

inline std::string_view to_string(BellOutcome b) {
    switch (b) {
        case BellOutcome::PhiPlus: return "Phi+";
        case BellOutcome::PhiMinus: return "Phi-";
        case BellOutcome::PsiPlus: return "Psi+";
        case BellOutcome::PsiMinus: return "Psi-";
    }
    return "?";
}

inline PauliOp parse_pauli(std::string_view s) {
    for (PauliOp op : kAllPauliOps) {
        if (s == to_string(op)) return op;
    }
    if (s == "x") return PauliOp::X;
    if (s == "z") return PauliOp::Z;
    if (s == "iy" || s == "Y") return PauliOp::iY;
    throw std::invalid_argument("unknown Pauli operation '" + std::string(s) + "'");
}

inline BellOutcome parse_bell(std::string_view s) {
    for (BellOutcome b : kAllBellOutcomes) {
        if (s == to_string(b)) return b;
    }
    throw std::invalid_argument("unknown Bell outcome '" + std::string(s) + "'");
}

enum class Party : std::uint8_t { alice = 0, bob = 1, charlie = 2 };

inline std::string_view to_string(Party p) {
    switch (p) {
        case Party::alice: return "alice";
        case Party::bob: return "bob";
        case Party::charlie: return "charlie";
    }
    return "?";
}

inline Party parse_party(std::string_view s) {
    if (s == "alice") return Party::alice;
    if (s == "bob") return Party::bob;
    if (s == "charlie") return Party::charlie;
    throw std::invalid_argument("unknown party '" + std::string(s) + "'");
}

/// A probability distribution over the four encoding operations, indexed by index_of(PauliOp).
using OpDistribution = std::array<double, 4>;

}  // namespace qshare
