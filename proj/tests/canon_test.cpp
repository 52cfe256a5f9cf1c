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

#include "qshare/canon.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace qshare;

TEST(Ghz3, amplitudes) {
    const auto s = ghz3();
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_DOUBLE_EQ(s[i].real(), (i == 0 || i == 7) ? 0.7071067811865476 : 0.0);
        EXPECT_EQ(s[i].imag(), 0.0);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    // Two equal branches: each outcome on qubit 2 is equally likely.
    EXPECT_NEAR(probability_of_one(s, QubitId(2)), 0.5, 1e-12);
}

TEST(W3, amplitudes) {
    const auto s = w3();
    for (std::size_t i = 0; i < 8; ++i) {
        const bool single = i == 1 || i == 2 || i == 4;
        EXPECT_NEAR(s[i].real(), single ? 0.5773502691896258 : 0.0, 1e-12);
        if (s[i] != 0.0) {
            EXPECT_EQ(std::popcount(i), 1);
        }
    }
    EXPECT_NEAR(probability_of_one(s, QubitId(3)), 1.0 / 3.0, 1e-12);
}

TEST(WN, small_sizes) {
    EXPECT_TRUE(equal_exact(w_n(3), w3()));
    const auto w4 = w_n(4);
    for (std::size_t i = 0; i < 16; ++i) {
        const bool single = i == 1 || i == 2 || i == 4 || i == 8;
        EXPECT_NEAR(w4[i].real(), single ? 0.5 : 0.0, 1e-12);
    }
    EXPECT_NEAR(w_n(7).norm_squared(), 1.0, 1e-12);
    EXPECT_THROW(w_n(2), std::invalid_argument);
    EXPECT_THROW(w_n(13), std::invalid_argument);
}

TEST(WN, equal_positive_single_excitations) {
    for (int m = 3; m <= 12; ++m) {
        const auto s = w_n(m);
        int nonzero = 0;
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            if (std::abs(s[i]) < 1e-15) continue;
            ++nonzero;
            EXPECT_NEAR(s[i].real(), 1 / std::sqrt(double(m)), 1e-12);
            EXPECT_EQ(s[i].imag(), 0.0);
        }
        EXPECT_EQ(nonzero, m);
    }
}

TEST(BellState, definitions) {
    const double r = 0.7071067811865476;
    const auto phi_minus = bell_state(BellOutcome::PhiMinus);
    EXPECT_NEAR(phi_minus[0].real(), r, 1e-12);
    EXPECT_NEAR(phi_minus[3].real(), -r, 1e-12);
    const auto psi_plus = bell_state(BellOutcome::PsiPlus);
    EXPECT_NEAR(psi_plus[1].real(), r, 1e-12);
    EXPECT_NEAR(psi_plus[2].real(), r, 1e-12);
    const auto psi_minus = bell_state(BellOutcome::PsiMinus);
    EXPECT_NEAR(psi_minus[1].real(), r, 1e-12);
    EXPECT_NEAR(psi_minus[2].real(), -r, 1e-12);
}

TEST(BellState, resolution_of_identity) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Amplitude sum = 0;
            for (BellOutcome k : kAllBellOutcomes) {
                const auto b = bell_state(k);
                sum += b[r] * std::conj(b[c]);
            }
            EXPECT_NEAR(std::abs(sum - Amplitude(r == c ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    }
    for (BellOutcome a : kAllBellOutcomes)
        for (BellOutcome b : kAllBellOutcomes)
            EXPECT_NEAR(std::abs(inner_product(bell_state(a), bell_state(b))), a == b ? 1.0 : 0.0, 1e-12);
}

TEST(Canon, ghz_w_orthogonal) { EXPECT_LT(std::abs(inner_product(ghz3(), w3())), 1e-12); }

TEST(Cbits, mapping) {
    EXPECT_EQ(pauli_to_cbits(PauliOp::I), (CbitPair{0, 0}));
    EXPECT_EQ(pauli_to_cbits(PauliOp::X), (CbitPair{0, 1}));
    EXPECT_EQ(pauli_to_cbits(PauliOp::iY), (CbitPair{1, 0}));
    EXPECT_EQ(pauli_to_cbits(PauliOp::Z), (CbitPair{1, 1}));
    for (PauliOp op : kAllPauliOps) EXPECT_EQ(cbits_to_pauli(pauli_to_cbits(op)), op);
    EXPECT_THROW(cbits_to_pauli({2, 0}), std::invalid_argument);
}

TEST(Names, round_trip) {
    for (PauliOp op : kAllPauliOps) EXPECT_EQ(parse_pauli(to_string(op)), op);
    for (BellOutcome b : kAllBellOutcomes) EXPECT_EQ(parse_bell(to_string(b)), b);
    EXPECT_THROW(parse_pauli("W"), std::invalid_argument);
    EXPECT_THROW(parse_bell("Phi"), std::invalid_argument);
}
