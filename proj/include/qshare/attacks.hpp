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
#include <vector>

#include "qshare/adversary.hpp"
#include "qshare/bell.hpp"
#include "qshare/qss.hpp"
#include "qshare/rng.hpp"
#include "qshare/stats.hpp"

namespace qshare {

/// Exact distribution over the 64 Bell triples of an attacked message round,
/// from the density operator of the attacked encoded state.
inline std::array<double, 64> attacked_triple_distribution(const AdversaryModel& model, PauliOp op) {
    DensityMatrix rho = DensityMatrix::from_pure(encoded_two_ghz(op));
    if (model.acts_on_channel()) apply_channel_oracle(rho, model, message_channel_labels(model.target));
    std::array<double, 64> dist{};
    for (int i = 0; i < 64; ++i) dist[i] = rho.projector_probability(bell_product_state(6, pairs_of(BellTriple::from_index(i))));
    return dist;
}

struct MessageRoundOracle {
    double decode_accuracy = 0;
    double inconsistent_rate = 0;
    /// Consistent triple that decodes to the wrong operation.
    double wrong_decode_rate = 0;
};

/// Exact message-round statistics under `model` with a uniformly drawn operation.
inline MessageRoundOracle message_round_oracle(const AdversaryModel& model) {
    MessageRoundOracle out;
    const auto& table = QssDecodeTable::instance();
    for (PauliOp op : kAllPauliOps) {
        const auto dist = attacked_triple_distribution(model, op);
        for (int i = 0; i < 64; ++i) {
            const auto decoded = table.lookup(BellTriple::from_index(i));
            if (!decoded) {
                out.inconsistent_rate += 0.25 * dist[i];
            } else if (*decoded == op) {
                out.decode_accuracy += 0.25 * dist[i];
            } else {
                out.wrong_decode_rate += 0.25 * dist[i];
            }
        }
    }
    return out;
}

struct SubstitutionReport {
    AdversaryModel model;
    std::int64_t rounds = 0;
    std::int64_t inconsistent = 0;
    std::int64_t decoded_correct = 0;
    /// Charlie's outcome counts, indexed by BellOutcome.
    std::array<std::int64_t, 4> victim_outcomes{};
    MessageRoundOracle analytic;
    /// Fraction of rounds exposed when all three outcomes are compared publicly.
    Statistics detection;
    std::vector<QssTranscript> transcripts;
};

/// Bob keeps the qubits travelling to the victim and forwards prepared states;
/// every round is then checked by public comparison of all three outcomes.
inline SubstitutionReport substitute_qubit_attack(std::int64_t rounds, std::uint64_t seed,
                                                  const AdversaryModel& model = AdversaryModel::substitute_qubit(),
                                                  bool keep_transcripts = false) {
    SubstitutionReport report;
    report.model = model;
    report.rounds = rounds;
    report.analytic = message_round_oracle(model);
    const int victim_pair = model.target == Party::charlie ? 2 : 1;
    for (std::int64_t k = 0; k < rounds; ++k) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(k));
        QssTranscript t = run_qss_round(std::nullopt, rng, {DeclarationPolicy::random(), static_cast<std::uint64_t>(k), model});
        const BellOutcome victim = victim_pair == 2 ? t.outcomes.o36 : t.outcomes.o25;
        ++report.victim_outcomes[index_of(victim)];
        if (!t.decoded_op) {
            ++report.inconsistent;
        } else if (*t.decoded_op == t.encoded_op) {
            ++report.decoded_correct;
        }
        if (keep_transcripts) report.transcripts.push_back(t);
    }
    report.detection = Statistics::from_counts(report.inconsistent, rounds, report.analytic.inconsistent_rate);
    return report;
}

/// What the cheater knows when it is their turn to declare: their own outcome
/// plus everything declared before them.
inline KnownOutcomes known_before_declaring(const BellTriple& t, const DeclarationOrder& order, Party cheater) {
    KnownOutcomes known;
    auto reveal = [&](Party p) {
        switch (p) {
            case Party::alice: known.o14 = t.o14; break;
            case Party::bob: known.o25 = t.o25; break;
            case Party::charlie: known.o36 = t.o36; break;
        }
    };
    reveal(cheater);
    for (int k = 0; k < position_of(order, cheater); ++k) reveal(order[k]);
    return known;
}

/// Exact probability that the cheater names the operation before declaring,
/// for one declaration order.
inline double late_declarer_success(const DeclarationOrder& order, Party cheater = Party::bob) {
    const auto& table = QssDecodeTable::instance();
    double acc = 0;
    for (PauliOp op : kAllPauliOps) {
        for (int i = 0; i < 64; ++i) {
            const BellTriple t = BellTriple::from_index(i);
            const double p = table.likelihood(t, op);
            if (p == 0) continue;
            if (map_guess(marginal_information(known_before_declaring(t, order, cheater))) == op) acc += 0.25 * p;
        }
    }
    return acc;
}

/// Policy-averaged analytic cheat success.
inline double late_declarer_analytic(const DeclarationPolicy& policy, Party cheater = Party::bob) {
    const auto weights = policy.order_distribution();
    double total = 0;
    for (int k = 0; k < 6; ++k) {
        if (weights[k] > 0) total += weights[k] * late_declarer_success(all_declaration_orders()[k], cheater);
    }
    return total;
}

struct LateDeclarerReport {
    std::string policy;
    Party cheater = Party::bob;
    double analytic = 0;
    Statistics empirical;
};

/// Bob withholds his declaration until his turn and guesses from what he has heard.
inline LateDeclarerReport late_declarer_attack(const DeclarationPolicy& policy, std::int64_t rounds, std::uint64_t seed,
                                               Party cheater = Party::bob) {
    LateDeclarerReport report;
    report.policy = policy.name();
    report.cheater = cheater;
    report.analytic = late_declarer_analytic(policy, cheater);
    std::int64_t wins = 0;
    for (std::int64_t k = 0; k < rounds; ++k) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(k));
        const QssTranscript t = run_qss_round(std::nullopt, rng, {policy, static_cast<std::uint64_t>(k)});
        const PauliOp guess = map_guess(marginal_information(known_before_declaring(t.outcomes, t.declaration_order, cheater)));
        wins += guess == t.encoded_op;
    }
    report.empirical = Statistics::from_counts(wins, rounds, report.analytic);
    return report;
}

struct CheckAttackReport {
    AdversaryModel model;
    /// Basis draws including the inconclusive ones that were re-drawn.
    std::int64_t rounds = 0;
    std::int64_t conclusive_rounds = 0;
    std::int64_t failures = 0;
    /// Per-conclusive-round failure frequency against check_fail_probability.
    Statistics detection;
};

/// Runs `conclusive_rounds` check rounds under `model`; round k uses stream k of `seed`.
inline CheckAttackReport run_check_rounds(const AdversaryModel& model, std::int64_t conclusive_rounds, std::uint64_t seed) {
    CheckAttackReport report;
    report.model = model;
    report.conclusive_rounds = conclusive_rounds;
    for (std::int64_t k = 0; k < conclusive_rounds; ++k) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(k));
        const CheckRound r = check_round(model, rng);
        report.rounds += r.draws;
        report.failures += !r.pass;
    }
    report.detection = Statistics::from_counts(report.failures, conclusive_rounds, check_fail_probability(model));
    return report;
}

}  // namespace qshare
