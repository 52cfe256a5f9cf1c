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
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qshare/canon.hpp"
#include "qshare/state.hpp"
#include "qshare/types.hpp"

namespace qshare {

enum class AdversaryKind : std::uint8_t {
    none,
    ancilla_entangle,
    intercept_resend,
    substitute_qubit,
    late_declarer,
};

inline std::string_view to_string(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::none: return "none";
        case AdversaryKind::ancilla_entangle: return "ancilla-entangle";
        case AdversaryKind::intercept_resend: return "intercept-resend";
        case AdversaryKind::substitute_qubit: return "substitute-qubit";
        case AdversaryKind::late_declarer: return "late-declarer";
    }
    return "?";
}

inline AdversaryKind parse_adversary_kind(std::string_view s) {
    for (auto k : {AdversaryKind::none, AdversaryKind::ancilla_entangle, AdversaryKind::intercept_resend,
                   AdversaryKind::substitute_qubit, AdversaryKind::late_declarer}) {
        if (s == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown adversary '" + std::string(s) + "'");
}

/// State a substituting party forwards in place of the intercepted qubit.
enum class PreparedState : std::uint8_t { zero, one, plus };

inline std::string_view to_string(PreparedState p) {
    switch (p) {
        case PreparedState::zero: return "0";
        case PreparedState::one: return "1";
        case PreparedState::plus: return "+";
    }
    return "?";
}

/// One attack, active for a whole session.
///
/// `target` names the party whose incoming qubits are attacked (for
/// late-declarer it names the cheating party). Channel attacks act on every
/// qubit travelling to the target: qubits 2 and 5 for Bob, 3 and 6 for Charlie
/// in message rounds, and the target's single qubit in check rounds.
struct AdversaryModel {
    AdversaryKind kind = AdversaryKind::none;
    Party target = Party::bob;
    PauliBasis basis = PauliBasis::Z;
    /// Controlled-RX angle coupling the travelling qubit to a fresh ancilla; 0 is the identity.
    double coupling = std::numbers::pi;
    PreparedState prepared = PreparedState::zero;

    static AdversaryModel none() { return {}; }
    static AdversaryModel intercept_resend(Party target = Party::bob, PauliBasis basis = PauliBasis::Z) {
        return {AdversaryKind::intercept_resend, target, basis, std::numbers::pi, PreparedState::zero};
    }
    static AdversaryModel ancilla_entangle(Party target = Party::bob, double coupling = std::numbers::pi) {
        return {AdversaryKind::ancilla_entangle, target, PauliBasis::Z, coupling, PreparedState::zero};
    }
    /// Bob keeps the qubits meant for `victim` and forwards `prepared` instead.
    static AdversaryModel substitute_qubit(Party victim = Party::charlie, PreparedState prepared = PreparedState::zero) {
        return {AdversaryKind::substitute_qubit, victim, PauliBasis::Z, std::numbers::pi, prepared};
    }
    static AdversaryModel late_declarer(Party cheater = Party::bob) {
        return {AdversaryKind::late_declarer, cheater, PauliBasis::Z, std::numbers::pi, PreparedState::zero};
    }

    bool acts_on_channel() const {
        return kind == AdversaryKind::ancilla_entangle || kind == AdversaryKind::intercept_resend ||
               kind == AdversaryKind::substitute_qubit;
    }

    std::string name() const {
        std::string out(to_string(kind));
        switch (kind) {
            case AdversaryKind::none: break;
            case AdversaryKind::intercept_resend:
                out += "(" + std::string(to_string(target)) + "," + std::string(to_string(basis)) + ")";
                break;
            case AdversaryKind::ancilla_entangle:
                out += "(" + std::string(to_string(target)) + ",theta=" + std::to_string(coupling) + ")";
                break;
            case AdversaryKind::substitute_qubit:
                out += "(" + std::string(to_string(target)) + ",|" + std::string(to_string(prepared)) + ">)";
                break;
            case AdversaryKind::late_declarer: out += "(" + std::string(to_string(target)) + ")"; break;
        }
        return out;
    }
};

/// Labels of the target's qubits in a message round (two GHZ triples on 1..6).
inline std::vector<int> message_channel_labels(Party target) {
    switch (target) {
        case Party::bob: return {2, 5};
        case Party::charlie: return {3, 6};
        case Party::alice: break;
    }
    throw std::invalid_argument("Alice's qubits never leave her lab; channel attacks target bob or charlie");
}

/// Label of the target's qubit in a check round (one GHZ triple on 1..3).
inline int check_channel_label(Party target) { return message_channel_labels(target).front() == 2 ? 2 : 3; }

inline Mat2 preparation_unitary(PreparedState p) {
    switch (p) {
        case PreparedState::zero: return gates::kIdentity;
        case PreparedState::one: return gates::kX;
        case PreparedState::plus: return gates::kH;
    }
    throw std::invalid_argument("bad prepared state");
}

/// Runs the channel attack on each labelled qubit. Ancillas are appended at the
/// end of the register with labels 100, 101, ...
template <UniformSource R>
LabeledState apply_channel_attack(LabeledState s, const AdversaryModel& model, const std::vector<int>& labels, R& rng) {
    if (!model.acts_on_channel()) return s;
    int next_ancilla = 100;
    for (int label : labels) {
        const QubitId q = s.position(label);
        switch (model.kind) {
            case AdversaryKind::intercept_resend: {
                auto [eigen, collapsed] = measure_in_basis(s.state, q, model.basis, rng);
                (void)eigen;
                s.state = std::move(collapsed);
                break;
            }
            case AdversaryKind::ancilla_entangle: {
                s.state = tensor(s.state, basis_state(1, {0}));
                s.labels.push_back(next_ancilla++);
                const QubitId ancilla(s.state.num_qubits());
                s.state = apply_controlled(s.state, q, ancilla, gates::rx(model.coupling));
                break;
            }
            case AdversaryKind::substitute_qubit: {
                // Keeping the qubit is equivalent to measuring it and discarding the result.
                auto [bit, collapsed] = measure_computational(s.state, q, rng);
                if (bit) collapsed = apply_single(collapsed, q, gates::kX);
                s.state = apply_single(collapsed, q, preparation_unitary(model.prepared));
                break;
            }
            default: break;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// GHZ parity check.

struct CheckRound {
    std::array<PauliBasis, 3> bases{};
    std::array<int, 3> results{};
    bool pass = true;
    /// Basis draws needed to reach a conclusive (even number of Y) combination.
    int draws = 0;
};

/// The parity a conclusive basis combination must show on an untouched GHZ triple:
/// +1 for XXX and -1 for the combinations with two Y.
inline int expected_parity(const std::array<PauliBasis, 3>& bases) {
    int ys = 0;
    for (auto b : bases) ys += b == PauliBasis::Y;
    if (ys % 2) throw std::invalid_argument("inconclusive basis combination");
    return ys == 0 ? +1 : -1;
}

inline bool verdict(const std::array<PauliBasis, 3>& bases, const std::array<int, 3>& results) {
    return results[0] * results[1] * results[2] == expected_parity(bases);
}

/// One check round on a sacrificed GHZ triple (Alice 1, Bob 2, Charlie 3).
template <UniformSource R>
CheckRound check_round(const AdversaryModel& model, R& rng) {
    LabeledState s{ghz3(), {1, 2, 3}};
    if (model.acts_on_channel()) s = apply_channel_attack(std::move(s), model, {check_channel_label(model.target)}, rng);

    CheckRound round;
    int ys;
    do {
        ys = 0;
        for (auto& b : round.bases) {
            b = (rng.uniform() < 0.5) ? PauliBasis::X : PauliBasis::Y;
            ys += b == PauliBasis::Y;
        }
        ++round.draws;
    } while (ys % 2);

    for (int party = 0; party < 3; ++party) {
        auto [eigen, post] = measure_in_basis(s.state, s.position(party + 1), round.bases[party], rng);
        round.results[party] = eigen;
        s.state = std::move(post);
    }
    round.pass = verdict(round.bases, round.results);
    return round;
}

// ---------------------------------------------------------------------------
// Density-operator oracle. Independent of the sampling path above: channels are
// applied to rho directly and outcome probabilities are traces.

class DensityMatrix {
   public:
    static DensityMatrix from_pure(const StateVector& s) {
        DensityMatrix d;
        d.n_ = s.num_qubits();
        const std::size_t dim = s.dimension();
        d.rho_.assign(dim * dim, 0.0);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) d.rho_[r * dim + c] = s[r] * std::conj(s[c]);
        return d;
    }

    int num_qubits() const { return n_; }
    std::size_t dimension() const { return std::size_t{1} << n_; }
    Amplitude at(std::size_t r, std::size_t c) const { return rho_[r * dimension() + c]; }

    double trace() const {
        double t = 0;
        for (std::size_t i = 0; i < dimension(); ++i) t += at(i, i).real();
        return t;
    }

    /// rho -> rho (x) |0><0|.
    void append_zero_qubit() {
        const std::size_t dim = dimension();
        std::vector<Amplitude> out(4 * dim * dim, 0.0);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) out[(2 * r) * (2 * dim) + 2 * c] = at(r, c);
        rho_ = std::move(out);
        ++n_;
    }

    /// rho -> sum_k K_k rho K_k^dagger for single-qubit Kraus operators on q.
    void apply_kraus(int q, const std::vector<Mat2>& kraus) {
        std::vector<Amplitude> total(rho_.size(), 0.0);
        for (const auto& k : kraus) {
            DensityMatrix term = *this;
            term.conjugate_by(q, -1, k);
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += term.rho_[i];
        }
        rho_ = std::move(total);
    }

    void apply_unitary(int q, const Mat2& u) { conjugate_by(q, -1, u); }
    void apply_controlled(int control, int target, const Mat2& u) { conjugate_by(target, control, u); }

    /// Tr(rho P) for a Pauli string given as (qubit, basis) factors; other qubits carry identity.
    double expectation(const std::vector<std::pair<int, PauliBasis>>& factors) const {
        DensityMatrix m = *this;
        for (const auto& [q, b] : factors) m.left_multiply(q, -1, pauli_matrix(b));
        return m.trace();
    }

    /// Tr(rho (|v><v| (x) I)) where v lives on the first v.num_qubits() qubits.
    double projector_probability(const StateVector& v) const {
        const int rest = n_ - v.num_qubits();
        if (rest < 0) throw std::invalid_argument("projector larger than register");
        const std::size_t rest_dim = std::size_t{1} << rest;
        Amplitude total = 0;
        for (std::size_t a = 0; a < rest_dim; ++a) {
            for (std::size_t i = 0; i < v.dimension(); ++i) {
                if (v[i] == 0.0) continue;
                for (std::size_t j = 0; j < v.dimension(); ++j) {
                    if (v[j] == 0.0) continue;
                    total += std::conj(v[i]) * at((i << rest) | a, (j << rest) | a) * v[j];
                }
            }
        }
        return total.real();
    }

   private:
    static Mat2 pauli_matrix(PauliBasis b) {
        switch (b) {
            case PauliBasis::Z: return gates::kZ;
            case PauliBasis::X: return gates::kX;
            case PauliBasis::Y: return {0.0, Amplitude(0, -1), Amplitude(0, 1), 0.0};
        }
        throw std::invalid_argument("bad basis");
    }

    std::size_t bit(int q) const {
        if (q < 1 || q > n_) throw std::invalid_argument("qubit outside density matrix");
        return std::size_t{1} << (n_ - q);
    }

    /// rho -> M rho, with M acting on q (only where `control` is 1 when control > 0).
    void left_multiply(int q, int control, const Mat2& m) {
        const std::size_t dim = dimension(), tb = bit(q), cb = control > 0 ? bit(control) : 0;
        for (std::size_t r = 0; r < dim; ++r) {
            if ((r & tb) || (cb && !(r & cb))) continue;
            for (std::size_t c = 0; c < dim; ++c) {
                const Amplitude a0 = rho_[r * dim + c], a1 = rho_[(r | tb) * dim + c];
                rho_[r * dim + c] = m[0] * a0 + m[1] * a1;
                rho_[(r | tb) * dim + c] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    /// rho -> rho M^dagger.
    void right_multiply_adjoint(int q, int control, const Mat2& m) {
        const std::size_t dim = dimension(), tb = bit(q), cb = control > 0 ? bit(control) : 0;
        for (std::size_t c = 0; c < dim; ++c) {
            if ((c & tb) || (cb && !(c & cb))) continue;
            for (std::size_t r = 0; r < dim; ++r) {
                const Amplitude a0 = rho_[r * dim + c], a1 = rho_[r * dim + (c | tb)];
                rho_[r * dim + c] = a0 * std::conj(m[0]) + a1 * std::conj(m[1]);
                rho_[r * dim + (c | tb)] = a0 * std::conj(m[2]) + a1 * std::conj(m[3]);
            }
        }
    }

    void conjugate_by(int q, int control, const Mat2& m) {
        left_multiply(q, control, m);
        right_multiply_adjoint(q, control, m);
    }

    int n_ = 0;
    std::vector<Amplitude> rho_;
};

/// Applies the attack's channel to the given qubits of rho (ancillas appended).
inline void apply_channel_oracle(DensityMatrix& rho, const AdversaryModel& model, const std::vector<int>& qubits) {
    if (!model.acts_on_channel()) return;
    for (int q : qubits) {
        switch (model.kind) {
            case AdversaryKind::intercept_resend: {
                // Projectors onto the two eigenvectors of the intercept basis.
                const Mat2 u = basis_rotation(model.basis), ud = gates::adjoint(u);
                std::vector<Mat2> kraus;
                for (int k = 0; k < 2; ++k) {
                    Mat2 p{};
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c) p[2 * r + c] = ud[2 * r + k] * u[2 * k + c];
                    kraus.push_back(p);
                }
                rho.apply_kraus(q, kraus);
                break;
            }
            case AdversaryKind::ancilla_entangle:
                rho.append_zero_qubit();
                rho.apply_controlled(q, rho.num_qubits(), gates::rx(model.coupling));
                break;
            case AdversaryKind::substitute_qubit: {
                // |p><0| and |p><1|.
                const Mat2 prep = preparation_unitary(model.prepared);
                const Mat2 from0 = {prep[0], 0.0, prep[2], 0.0};
                const Mat2 from1 = {0.0, prep[0], 0.0, prep[2]};
                rho.apply_kraus(q, {from0, from1});
                break;
            }
            default: break;
        }
    }
}

/// Exact probability that a conclusive check round fails under `model`.
inline double check_fail_probability(const AdversaryModel& model) {
    DensityMatrix rho = DensityMatrix::from_pure(ghz3());
    if (model.acts_on_channel()) apply_channel_oracle(rho, model, {check_channel_label(model.target)});
    using B = PauliBasis;
    const std::array<std::array<B, 3>, 4> combos = {
        {{B::X, B::X, B::X}, {B::X, B::Y, B::Y}, {B::Y, B::X, B::Y}, {B::Y, B::Y, B::X}}};
    double fail = 0;
    for (const auto& c : combos) {
        const double e = rho.expectation({{1, c[0]}, {2, c[1]}, {3, c[2]}});
        fail += (1.0 - expected_parity(c) * e) / 2.0;
    }
    return fail / combos.size();
}

/// Probability that at least one of `check_rounds` independent conclusive rounds fails.
inline double session_detection_probability(double per_round_fail, long long check_rounds) {
    return 1.0 - std::pow(1.0 - per_round_fail, static_cast<double>(check_rounds));
}

}  // namespace qshare
