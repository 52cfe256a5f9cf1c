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
#include <vector>

#include "qshare/bell.hpp"
#include "qshare/canon.hpp"
#include "qshare/qss.hpp"
#include "qshare/rng.hpp"
#include "qshare/state.hpp"
#include "qshare/types.hpp"

namespace qshare {

// Users are numbered 1..N; user u holds qubit u + 1 of the W_{N+1} state and
// Alice holds qubit 1. In the three-party protocol Bob is user 1 and Charlie
// is user 2.
inline constexpr int kBob = 1;
inline constexpr int kCharlie = 2;

inline void check_sdc_parties(int n_users, int receiver) {
    if (n_users < 2 || n_users > 11) {
        throw std::invalid_argument("user count " + std::to_string(n_users) + " outside [2, 11]");
    }
    if (receiver < 1 || receiver > n_users) {
        throw std::invalid_argument("receiver " + std::to_string(receiver) + " is not one of the users");
    }
}

struct SdcTrial {
    PauliOp encoded_op;
    int n_users = 2;
    int receiver = kBob;
    BellOutcome bell_outcome;
    /// One bit per non-receiving user, ascending user order.
    std::vector<int> bystander_bits;
    bool success = false;
    std::optional<PauliOp> decoded_op;
};

/// W_{N+1} with `op` on Alice's qubit.
inline StateVector encoded_w(int n_users, PauliOp op) { return apply_pauli(w_n(n_users + 1), QubitId(1), op); }

/// One entry of the exact outcome distribution for a fixed operation.
struct SdcOutcome {
    BellOutcome bell;
    /// Bystander bits packed with the lowest-numbered bystander on the most significant bit.
    std::size_t bystander_pattern;
    double probability;
};

/// Exact joint distribution of the receiver's Bell outcome and the bystander bits.
inline std::vector<SdcOutcome> sdc_outcome_distribution(int n_users, int receiver, PauliOp op) {
    check_sdc_parties(n_users, receiver);
    const StateVector s = encoded_w(n_users, op);
    std::vector<SdcOutcome> out;
    for (const auto& proj : bell_project(s, QubitId(1), QubitId(receiver + 1))) {
        if (proj.probability == 0.0) continue;
        const StateVector& rest = *proj.residual;
        for (std::size_t pattern = 0; pattern < rest.dimension(); ++pattern) {
            const double p = proj.probability * std::norm(rest[pattern]);
            if (p > kDegenerateProbability) out.push_back({proj.outcome, pattern, p});
        }
    }
    return out;
}

/// Probability that every bystander reads 0, for a given operation.
inline double sdc_success_probability(int n_users, int receiver, PauliOp op) {
    double p = 0;
    for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
        if (o.bystander_pattern == 0) p += o.probability;
    }
    return p;
}

/// Receiver's Bell outcome -> operation, valid when every bystander bit is 0.
/// Built from the success branch of each encoded state.
class SdcDecodeTable {
   public:
    explicit SdcDecodeTable(int n_users = 2, int receiver = kBob) {
        for (PauliOp op : kAllPauliOps) {
            std::array<double, 4> weight{};
            double total = 0;
            for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
                if (o.bystander_pattern != 0) continue;
                weight[index_of(o.bell)] += o.probability;
                total += o.probability;
            }
            int hit = -1;
            for (int k = 0; k < 4; ++k) {
                if (weight[k] > kDegenerateProbability) {
                    if (hit >= 0 || std::abs(weight[k] - total) > kNormTolerance) {
                        throw std::logic_error("success branch is not a single Bell state");
                    }
                    hit = k;
                }
            }
            if (hit < 0 || entries_[hit]) throw std::logic_error("success outcomes do not identify the operation");
            entries_[hit] = op;
        }
    }

    static const SdcDecodeTable& three_party() {
        static const SdcDecodeTable table;
        return table;
    }

    PauliOp lookup(BellOutcome b) const { return *entries_[index_of(b)]; }

   private:
    std::array<std::optional<PauliOp>, 4> entries_{};
};

/// Empty (abort) when any bystander read 1.
inline std::optional<PauliOp> decode_sdc(BellOutcome b, const std::vector<int>& bystander_bits) {
    for (int bit : bystander_bits) {
        if (bit != 0) return std::nullopt;
    }
    return SdcDecodeTable::three_party().lookup(b);
}

/// Alice encodes on qubit 1 and hands it to `receiver`, who Bell-measures it
/// with their own qubit; the other users measure in the computational basis in
/// ascending order.
template <UniformSource R>
SdcTrial run_sdc_n_party(int n_users, int receiver, PauliOp op, R& rng) {
    check_sdc_parties(n_users, receiver);
    std::vector<int> labels(n_users + 1);
    for (int k = 0; k <= n_users; ++k) labels[k] = k + 1;
    LabeledState s{encoded_w(n_users, op), labels};

    SdcTrial trial;
    trial.encoded_op = op;
    trial.n_users = n_users;
    trial.receiver = receiver;
    auto [outcome, rest] = measure_bell(s, 1, receiver + 1, rng);
    trial.bell_outcome = outcome;
    for (int user = 1; user <= n_users; ++user) {
        if (user == receiver) continue;
        auto [bit, post] = measure_computational(rest->state, rest->position(user + 1), rng);
        trial.bystander_bits.push_back(bit);
        rest->state = std::move(post);
    }
    trial.decoded_op = decode_sdc(outcome, trial.bystander_bits);
    trial.success = trial.decoded_op.has_value();
    return trial;
}

/// Three-party round (Bob and Charlie).
template <UniformSource R>
SdcTrial run_sdc_round(PauliOp op, R& rng, int receiver = kBob) {
    return run_sdc_n_party(2, receiver, op, rng);
}

// ---------------------------------------------------------------------------
// Single-party (non-cooperating) inference.

namespace detail {

inline OpDistribution normalize(OpDistribution d) {
    double total = 0;
    for (double p : d) total += p;
    if (total <= 0) return {0.25, 0.25, 0.25, 0.25};
    for (auto& p : d) p /= total;
    return d;
}

/// Bit of `user` inside a bystander pattern.
inline int bystander_bit(int n_users, int receiver, int user, std::size_t pattern) {
    int slot = 0;
    for (int u = 1; u < user; ++u) slot += (u != receiver);
    const int n_bystanders = n_users - 1;
    return static_cast<int>((pattern >> (n_bystanders - 1 - slot)) & 1);
}

}  // namespace detail

/// Receiver's posterior from the Bell outcome alone (uniform prior).
inline OpDistribution receiver_posterior(BellOutcome b, int n_users = 2, int receiver = kBob) {
    OpDistribution d{};
    for (PauliOp op : kAllPauliOps) {
        for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
            if (o.bell == b) d[index_of(op)] += 0.25 * o.probability;
        }
    }
    return detail::normalize(d);
}

/// A non-receiving user's posterior from their own bit alone.
inline OpDistribution bystander_posterior(int user, int bit, int n_users = 2, int receiver = kBob) {
    if (user == receiver) throw std::invalid_argument("the receiver holds a Bell outcome, not a bit");
    OpDistribution d{};
    for (PauliOp op : kAllPauliOps) {
        for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
            if (detail::bystander_bit(n_users, receiver, user, o.bystander_pattern) == bit) {
                d[index_of(op)] += 0.25 * o.probability;
            }
        }
    }
    return detail::normalize(d);
}

inline OpDistribution bob_alone_posterior(BellOutcome b) { return receiver_posterior(b, 2, kBob); }
inline PauliOp bob_alone_guess(BellOutcome b) { return map_guess(bob_alone_posterior(b)); }
inline OpDistribution charlie_alone_posterior(int bit) { return bystander_posterior(kCharlie, bit, 2, kBob); }
inline PauliOp charlie_alone_guess(int bit) { return map_guess(charlie_alone_posterior(bit)); }

/// What `user` guesses on their own after a round.
inline PauliOp solo_guess(const SdcTrial& t, int user) {
    if (user == t.receiver) return map_guess(receiver_posterior(t.bell_outcome, t.n_users, t.receiver));
    int slot = 0;
    for (int u = 1; u < user; ++u) slot += (u != t.receiver);
    return map_guess(bystander_posterior(user, t.bystander_bits.at(slot), t.n_users, t.receiver));
}

/// Exact probability that `user`, acting alone, guesses the operation (uniform prior, MAP guess).
inline double solo_accuracy(int user, int n_users = 2, int receiver = kBob) {
    check_sdc_parties(n_users, receiver);
    double acc = 0;
    for (PauliOp op : kAllPauliOps) {
        for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
            PauliOp guess;
            if (user == receiver) {
                guess = map_guess(receiver_posterior(o.bell, n_users, receiver));
            } else {
                guess = map_guess(bystander_posterior(
                    user, detail::bystander_bit(n_users, receiver, user, o.bystander_pattern), n_users, receiver));
            }
            if (guess == op) acc += 0.25 * o.probability;
        }
    }
    return acc;
}

/// Three-party cheat probabilities. A party cheats successfully when the other
/// party, left with only their own observation, guesses wrong.
struct CheatReport {
    int receiver = kBob;
    double bob_solo_accuracy = 0;
    double charlie_solo_accuracy = 0;
    double charlie_cheat_success = 0;
    double bob_cheat_success = 0;
};

inline CheatReport cheat_report(int receiver = kBob) {
    CheatReport r;
    r.receiver = receiver;
    r.bob_solo_accuracy = solo_accuracy(kBob, 2, receiver);
    r.charlie_solo_accuracy = solo_accuracy(kCharlie, 2, receiver);
    r.charlie_cheat_success = 1.0 - r.bob_solo_accuracy;
    r.bob_cheat_success = 1.0 - r.charlie_solo_accuracy;
    return r;
}

/// Exact probability of decoding the right operation given success.
inline double conditional_decode_accuracy(int n_users, int receiver, PauliOp op) {
    const SdcDecodeTable table(n_users, receiver);
    double success = 0, correct = 0;
    for (const auto& o : sdc_outcome_distribution(n_users, receiver, op)) {
        if (o.bystander_pattern != 0) continue;
        success += o.probability;
        if (table.lookup(o.bell) == op) correct += o.probability;
    }
    return correct / success;
}

}  // namespace qshare
