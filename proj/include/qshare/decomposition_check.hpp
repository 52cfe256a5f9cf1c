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

// Cross-check of the computed two-GHZ decomposition against the expansion as
// it was published. The transcription below is data to be checked, never a
// source for decoding.

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "qshare/bell.hpp"
#include "qshare/canon.hpp"
#include "qshare/state.hpp"

namespace qshare {

/// One printed term: sign * (sqrt2/4) |o14>|o25>|o36>. A missing o14 means the
/// published term carries no factor on pair (1,4).
struct PrintedTerm {
    int sign;
    std::optional<BellOutcome> o14;
    BellOutcome o25;
    BellOutcome o36;
};

struct PrintedExpansion {
    PauliOp op;
    /// The printed left-hand side on qubits 1..3: c0|x y z> + c1|x' y' z'>, times ghz3 on 4..6.
    std::array<std::size_t, 2> lhs_indices;
    std::array<double, 2> lhs_signs;
    std::array<PrintedTerm, 8> terms;
};

namespace published {

using enum BellOutcome;
inline constexpr std::optional<BellOutcome> kMissing = std::nullopt;

inline const std::array<PrintedExpansion, 4>& expansions() {
    static const std::array<PrintedExpansion, 4> table = {{
        {PauliOp::I,
         {0b000, 0b111},
         {+1, +1},
         {{{+1, PhiPlus, PhiPlus, PhiPlus},
           {+1, PhiPlus, PhiMinus, PhiMinus},
           {+1, PhiMinus, PhiPlus, PhiMinus},
           {+1, PhiMinus, PhiMinus, PhiPlus},
           {+1, PsiPlus, PsiPlus, PsiPlus},
           {+1, PsiPlus, PsiMinus, PsiMinus},
           {-1, PsiMinus, PsiPlus, PsiMinus},
           {-1, PsiMinus, PsiMinus, PsiPlus}}}},
        {PauliOp::X,
         {0b100, 0b011},
         {+1, +1},
         {{{+1, kMissing, PsiPlus, PsiPlus},
           {+1, kMissing, PsiMinus, PsiMinus},
           {-1, PhiMinus, PsiPlus, PsiMinus},
           {-1, PhiMinus, PsiMinus, PsiPlus},
           {+1, PsiPlus, PhiPlus, PhiPlus},
           {+1, PsiPlus, PhiMinus, PhiMinus},
           {-1, PsiMinus, PhiPlus, PhiMinus},
           {-1, PsiMinus, PhiMinus, PhiPlus}}}},
        {PauliOp::iY,
         {0b100, 0b011},
         {+1, -1},
         {{{+1, PhiPlus, PsiPlus, PsiMinus},
           {+1, PhiPlus, PsiMinus, PsiPlus},
           {-1, PhiMinus, PsiPlus, PsiPlus},
           {-1, PhiMinus, PsiMinus, PsiMinus},
           {-1, PsiPlus, PsiPlus, PsiMinus},
           {-1, PsiPlus, PsiMinus, PsiPlus},
           {-1, PsiMinus, PsiPlus, PsiPlus},
           {-1, PsiMinus, PsiMinus, PsiMinus}}}},
        {PauliOp::Z,
         {0b000, 0b111},
         {+1, -1},
         {{{+1, PhiPlus, PhiPlus, PhiMinus},
           {+1, PhiPlus, PhiMinus, PhiPlus},
           {+1, PhiMinus, PhiPlus, PhiPlus},
           {+1, PhiMinus, PhiMinus, PhiMinus},
           {+1, PsiPlus, PhiPlus, PhiMinus},
           {+1, PsiPlus, PhiMinus, PhiPlus},
           {+1, PsiMinus, PhiPlus, PhiPlus},
           {+1, PsiMinus, PhiMinus, PhiMinus}}}},
    }};
    return table;
}

/// The combined six-qubit state as printed, reading |e> = |0>, |g> = |1>:
/// 1/2 (|000> + |111>)(|000> + i|111>).
inline StateVector printed_combined_state() {
    std::vector<Amplitude> second(8);
    second[0] = kInvSqrt2;
    second[7] = Amplitude(0, kInvSqrt2);
    return tensor(ghz3(), StateVector::from_amplitudes(3, std::move(second)));
}

}  // namespace published

enum class BranchStatus : std::uint8_t {
    match,
    sign_mismatch,
    missing_factor,
    pair_type_mismatch,
    printed_only,
    computed_only,
};

inline std::string_view to_string(BranchStatus s) {
    switch (s) {
        case BranchStatus::match: return "match";
        case BranchStatus::sign_mismatch: return "sign-mismatch";
        case BranchStatus::missing_factor: return "missing-factor";
        case BranchStatus::pair_type_mismatch: return "pair-type-mismatch";
        case BranchStatus::printed_only: return "printed-only";
        case BranchStatus::computed_only: return "computed-only";
    }
    return "?";
}

constexpr bool is_structural(BranchStatus s) {
    return s != BranchStatus::match && s != BranchStatus::sign_mismatch;
}

struct ComputedTerm {
    BellTriple triple;
    /// Coefficient relative to the printed left-hand side (global phase removed).
    Amplitude coeff;
};

struct BranchComparison {
    std::optional<PrintedTerm> printed;
    std::optional<ComputedTerm> computed;
    BranchStatus status;
};

struct OpDiscrepancyReport {
    PauliOp op;
    /// Printed left-hand side equals the encoded state up to global phase.
    bool lhs_matches = false;
    /// Sum of computed branch probabilities.
    double computed_total_probability = 0;
    /// |<lhs|computed expansion>|; 1 when the computed branches rebuild the state.
    double computed_fidelity = 0;
    /// |<lhs|printed expansion>|, or nullopt when a printed term is not a full triple.
    std::optional<double> printed_fidelity;
    std::vector<BranchComparison> entries;

    int count(BranchStatus s) const {
        int c = 0;
        for (const auto& e : entries) c += e.status == s;
        return c;
    }
    int structural_count() const {
        int c = 0;
        for (const auto& e : entries) c += is_structural(e.status);
        return c;
    }
};

struct DecompositionCheckReport {
    /// Fidelity between the printed combined state and ghz3 (x) ghz3.
    double combined_state_fidelity = 0;
    bool combined_state_matches_product = false;
    std::array<OpDiscrepancyReport, 4> ops;
};

namespace detail {

inline StateVector printed_lhs(const PrintedExpansion& e) {
    std::vector<Amplitude> first(8);
    first[e.lhs_indices[0]] = e.lhs_signs[0] * kInvSqrt2;
    first[e.lhs_indices[1]] = e.lhs_signs[1] * kInvSqrt2;
    return tensor(StateVector::from_amplitudes(3, std::move(first)), ghz3());
}

inline bool same_sign(int printed_sign, Amplitude coeff) { return printed_sign * coeff.real() > 0; }

}  // namespace detail

inline OpDiscrepancyReport compare_with_printed(const PrintedExpansion& printed) {
    OpDiscrepancyReport report;
    report.op = printed.op;

    const StateVector encoded = encoded_two_ghz(printed.op);
    const StateVector lhs = detail::printed_lhs(printed);
    const Amplitude overlap = inner_product(lhs, encoded);
    report.lhs_matches = std::abs(std::abs(overlap) - 1.0) < kAmplitudeTolerance;
    // encoded = phase * lhs, so coefficients relative to lhs are coeff / phase.
    const Amplitude phase = overlap / std::abs(overlap);

    const DecompositionTable table = decompose_two_ghz(printed.op);
    std::vector<ComputedTerm> computed;
    std::vector<Amplitude> rebuilt(64);
    for (const auto& branch : table.branches) {
        computed.push_back({triple_of(branch), branch.coeff / phase});
        report.computed_total_probability += branch.probability();
        const StateVector basis = bell_product_state(6, branch.outcomes);
        for (std::size_t i = 0; i < 64; ++i) rebuilt[i] += branch.coeff * basis[i];
    }
    {
        Amplitude f = 0;
        for (std::size_t i = 0; i < 64; ++i) f += std::conj(encoded[i]) * rebuilt[i];
        report.computed_fidelity = std::abs(f);
    }

    bool printed_complete = true;
    std::vector<Amplitude> printed_vec(64);
    const double weight = std::sqrt(2.0) / 4.0;
    for (const auto& term : printed.terms) {
        if (!term.o14) {
            printed_complete = false;
            continue;
        }
        const StateVector basis = bell_product_state(6, pairs_of({*term.o14, term.o25, term.o36}));
        for (std::size_t i = 0; i < 64; ++i) printed_vec[i] += term.sign * weight * basis[i];
    }
    if (printed_complete) {
        Amplitude f = 0;
        for (std::size_t i = 0; i < 64; ++i) f += std::conj(lhs[i]) * printed_vec[i];
        report.printed_fidelity = std::abs(f);
    }

    std::vector<bool> printed_used(printed.terms.size(), false), computed_used(computed.size(), false);
    auto record = [&](std::size_t p, std::size_t c, BranchStatus status) {
        printed_used[p] = computed_used[c] = true;
        report.entries.push_back({printed.terms[p], computed[c], status});
    };

    // Exact triple matches.
    for (std::size_t p = 0; p < printed.terms.size(); ++p) {
        const auto& term = printed.terms[p];
        if (!term.o14) continue;
        const BellTriple t{*term.o14, term.o25, term.o36};
        for (std::size_t c = 0; c < computed.size(); ++c) {
            if (computed_used[c] || computed[c].triple != t) continue;
            record(p, c,
                   detail::same_sign(term.sign, computed[c].coeff) ? BranchStatus::match : BranchStatus::sign_mismatch);
            break;
        }
    }
    // Printed terms lacking the (1,4) factor.
    for (std::size_t p = 0; p < printed.terms.size(); ++p) {
        const auto& term = printed.terms[p];
        if (printed_used[p] || term.o14) continue;
        for (std::size_t c = 0; c < computed.size(); ++c) {
            if (computed_used[c] || computed[c].triple.o25 != term.o25 || computed[c].triple.o36 != term.o36) continue;
            record(p, c, BranchStatus::missing_factor);
            break;
        }
    }
    // Same (1,4) outcome and same signs on (2,5), (3,6), but the wrong Bell type there.
    for (std::size_t p = 0; p < printed.terms.size(); ++p) {
        const auto& term = printed.terms[p];
        if (printed_used[p] || !term.o14) continue;
        for (std::size_t c = 0; c < computed.size(); ++c) {
            const auto& t = computed[c].triple;
            if (computed_used[c] || t.o14 != *term.o14) continue;
            if (bell_sign(t.o25) != bell_sign(term.o25) || bell_sign(t.o36) != bell_sign(term.o36)) continue;
            if (bell_type(t.o25) == bell_type(term.o25) && bell_type(t.o36) == bell_type(term.o36)) continue;
            record(p, c, BranchStatus::pair_type_mismatch);
            break;
        }
    }
    for (std::size_t p = 0; p < printed.terms.size(); ++p) {
        if (!printed_used[p]) report.entries.push_back({printed.terms[p], std::nullopt, BranchStatus::printed_only});
    }
    for (std::size_t c = 0; c < computed.size(); ++c) {
        if (!computed_used[c]) report.entries.push_back({std::nullopt, computed[c], BranchStatus::computed_only});
    }
    return report;
}

/// Compares the computed decompositions for all four operations with the
/// published expansion, and checks the printed combined state.
inline DecompositionCheckReport verify_against_printed_decomposition() {
    DecompositionCheckReport report;
    const StateVector product = tensor(ghz3(), ghz3());
    report.combined_state_fidelity = std::norm(inner_product(published::printed_combined_state(), product));
    report.combined_state_matches_product = std::abs(report.combined_state_fidelity - 1.0) < kNormTolerance;
    const auto& expansions = published::expansions();
    for (std::size_t k = 0; k < expansions.size(); ++k) report.ops[k] = compare_with_printed(expansions[k]);
    return report;
}

}  // namespace qshare
