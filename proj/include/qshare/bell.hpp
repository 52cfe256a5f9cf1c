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
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qshare/canon.hpp"
#include "qshare/state.hpp"
#include "qshare/types.hpp"

namespace qshare {

/// One entry of a Bell-basis projection. `residual` holds the renormalized
/// state of the surviving qubits (ascending original position), and is empty
/// when the branch has probability zero or when no qubits remain.
struct BellProjection {
    BellOutcome outcome;
    double probability;
    std::optional<StateVector> residual;
};

namespace detail {

inline void check_pair(const StateVector& s, QubitId i, QubitId j) {
    s.check_qubit(i);
    s.check_qubit(j);
    if (i == j) throw std::invalid_argument("Bell measurement needs two distinct qubits");
    if (s.num_qubits() < 2) throw std::invalid_argument("Bell measurement needs at least two qubits");
}

/// Full index of `rest` (an index over the n-2 surviving qubits) with bits a at i and b at j.
inline std::size_t splice_pair(std::size_t rest, int n, QubitId i, QubitId j, int a, int b) {
    std::size_t index = 0;
    int rest_bit = n - 3;
    for (int label = 1; label <= n; ++label) {
        int bit;
        if (label == i.label) {
            bit = a;
        } else if (label == j.label) {
            bit = b;
        } else {
            bit = static_cast<int>((rest >> rest_bit) & 1);
            --rest_bit;
        }
        index = (index << 1) | static_cast<std::size_t>(bit);
    }
    return index;
}

}  // namespace detail

/// Surviving positions after measuring (i, j), in ascending order.
inline std::vector<int> surviving_positions(int n, QubitId i, QubitId j) {
    std::vector<int> out;
    for (int p = 1; p <= n; ++p) {
        if (p != i.label && p != j.label) out.push_back(p);
    }
    return out;
}

/// Projects the pair (i, j) onto each of the four Bell states.
inline std::array<BellProjection, 4> bell_project(const StateVector& s, QubitId i, QubitId j) {
    detail::check_pair(s, i, j);
    const int n = s.num_qubits();
    const std::size_t rest_dim = std::size_t{1} << (n - 2);
    std::array<BellProjection, 4> out;
    for (BellOutcome k : kAllBellOutcomes) {
        std::vector<Amplitude> residual(rest_dim);
        double p = 0;
        for (std::size_t r = 0; r < rest_dim; ++r) {
            Amplitude acc = 0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const Amplitude c = bell_component(k, a, b);
                    if (c == 0.0) continue;
                    acc += std::conj(c) * s[detail::splice_pair(r, n, i, j, a, b)];
                }
            }
            residual[r] = acc;
            p += std::norm(acc);
        }
        BellProjection entry{k, p, std::nullopt};
        if (p >= kDegenerateProbability && n > 2) {
            entry.residual = StateVector::normalized(n - 2, std::move(residual));
        }
        if (p < kDegenerateProbability) entry.probability = 0.0;
        out[index_of(k)] = std::move(entry);
    }
    return out;
}

/// Samples a Bell outcome on (i, j) by the Born rule.
template <UniformSource R>
BellProjection measure_bell(const StateVector& s, QubitId i, QubitId j, R& rng) {
    auto branches = bell_project(s, i, j);
    const double u = rng.uniform();
    double cumulative = 0;
    int chosen = -1;
    for (int k = 0; k < 4; ++k) {
        if (branches[k].probability == 0.0) continue;
        chosen = k;
        cumulative += branches[k].probability;
        if (u < cumulative) break;
    }
    return std::move(branches[chosen]);
}

/// Bell measurement on a labeled register; the pair is removed and the
/// surviving labels keep their relative order.
template <UniformSource R>
std::pair<BellOutcome, std::optional<LabeledState>> measure_bell(const LabeledState& s, int label_i, int label_j,
                                                                 R& rng) {
    const QubitId i = s.position(label_i), j = s.position(label_j);
    auto result = measure_bell(s.state, i, j, rng);
    if (!result.residual) return {result.outcome, std::nullopt};
    std::vector<int> labels;
    for (int p : surviving_positions(s.state.num_qubits(), i, j)) labels.push_back(s.labels[p - 1]);
    return {result.outcome, LabeledState{std::move(*result.residual), std::move(labels)}};
}

// ---------------------------------------------------------------------------
// Bell-triple decomposition of the encoded two-GHZ state.

struct PairOutcome {
    int first;
    int second;
    BellOutcome outcome;
    friend bool operator==(const PairOutcome&, const PairOutcome&) = default;
};

struct BellBranch {
    std::vector<PairOutcome> outcomes;
    Amplitude coeff;

    double probability() const { return std::norm(coeff); }
};

struct DecompositionTable {
    PauliOp op;
    std::vector<BellBranch> branches;
};

struct BellTriple {
    BellOutcome o14;
    BellOutcome o25;
    BellOutcome o36;

    friend constexpr auto operator<=>(const BellTriple&, const BellTriple&) = default;

    /// Position in the lexicographic (o14, o25, o36) order, 0..63.
    constexpr int index() const { return index_of(o14) * 16 + index_of(o25) * 4 + index_of(o36); }
    static constexpr BellTriple from_index(int i) {
        return {static_cast<BellOutcome>((i >> 4) & 3), static_cast<BellOutcome>((i >> 2) & 3),
                static_cast<BellOutcome>(i & 3)};
    }
};

inline BellTriple triple_of(const BellBranch& b) {
    return {b.outcomes.at(0).outcome, b.outcomes.at(1).outcome, b.outcomes.at(2).outcome};
}

inline std::vector<PairOutcome> pairs_of(const BellTriple& t) {
    return {{1, 4, t.o14}, {2, 5, t.o25}, {3, 6, t.o36}};
}

/// Pairs measured in the secret-sharing protocol: (1,4) Alice, (2,5) Bob, (3,6) Charlie.
inline constexpr std::array<std::pair<int, int>, 3> kQssPairs = {{{1, 4}, {2, 5}, {3, 6}}};

/// Product of Bell states on disjoint pairs that together cover all n qubits.
inline StateVector bell_product_state(int n, const std::vector<PairOutcome>& pairs) {
    StateVector::check_qubit_count(n);
    std::vector<int> seen(n + 1, 0);
    for (const auto& p : pairs) {
        if (p.first < 1 || p.first > n || p.second < 1 || p.second > n || p.first == p.second) {
            throw std::invalid_argument("bad qubit pair");
        }
        if (seen[p.first]++ || seen[p.second]++) throw std::invalid_argument("pairs overlap");
    }
    if (pairs.size() * 2 != static_cast<std::size_t>(n)) throw std::invalid_argument("pairs must cover the register");
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        Amplitude a = 1.0;
        for (const auto& p : pairs) {
            const int x = static_cast<int>((idx >> (n - p.first)) & 1);
            const int y = static_cast<int>((idx >> (n - p.second)) & 1);
            a *= bell_component(p.outcome, x, y);
            if (a == 0.0) break;
        }
        amps[idx] = a;
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

/// ghz3 (x) ghz3 with `op` applied to qubit 1.
inline StateVector encoded_two_ghz(PauliOp op) { return apply_pauli(tensor(ghz3(), ghz3()), QubitId(1), op); }

/// Expands the encoded two-GHZ state over all 64 Bell triples on (1,4), (2,5),
/// (3,6) and keeps the nonzero branches, in (o14, o25, o36) order.
inline DecompositionTable decompose_two_ghz(PauliOp op) {
    const StateVector psi = encoded_two_ghz(op);
    DecompositionTable table{op, {}};
    for (BellOutcome a : kAllBellOutcomes) {
        for (BellOutcome b : kAllBellOutcomes) {
            for (BellOutcome c : kAllBellOutcomes) {
                std::vector<PairOutcome> triple = {{1, 4, a}, {2, 5, b}, {3, 6, c}};
                const Amplitude coeff = inner_product(bell_product_state(6, triple), psi);
                if (std::norm(coeff) < kDegenerateProbability) continue;
                table.branches.push_back({std::move(triple), coeff});
            }
        }
    }
    return table;
}

}  // namespace qshare
