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
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qshare/adversary.hpp"
#include "qshare/bell.hpp"
#include "qshare/canon.hpp"
#include "qshare/rng.hpp"
#include "qshare/state.hpp"
#include "qshare/types.hpp"

namespace qshare {

using DeclarationOrder = std::array<Party, 3>;

/// The six declaration orders in lexicographic order (alice < bob < charlie).
inline const std::array<DeclarationOrder, 6>& all_declaration_orders() {
    static const std::array<DeclarationOrder, 6> orders = [] {
        std::array<DeclarationOrder, 6> out;
        DeclarationOrder o = {Party::alice, Party::bob, Party::charlie};
        for (auto& slot : out) {
            slot = o;
            std::next_permutation(o.begin(), o.end());
        }
        return out;
    }();
    return orders;
}

inline int order_index(const DeclarationOrder& o) {
    const auto& all = all_declaration_orders();
    return static_cast<int>(std::find(all.begin(), all.end(), o) - all.begin());
}

/// 0-based slot at which `p` declares.
inline int position_of(const DeclarationOrder& o, Party p) {
    return static_cast<int>(std::find(o.begin(), o.end(), p) - o.begin());
}

/// Session rule for the order in which parties announce their Bell outcomes.
class DeclarationPolicy {
   public:
    enum class Mode : std::uint8_t { fixed, round_robin, random };

    static DeclarationPolicy fixed(DeclarationOrder order) { return DeclarationPolicy(Mode::fixed, order); }
    static DeclarationPolicy round_robin() { return DeclarationPolicy(Mode::round_robin, {}); }
    static DeclarationPolicy random() { return DeclarationPolicy(Mode::random, {}); }

    /// "random", "round-robin", "bob-last", "bob-first" or "fixed:<p>,<p>,<p>".
    static DeclarationPolicy parse(const std::string& s) {
        if (s == "random") return random();
        if (s == "round-robin") return round_robin();
        if (s == "bob-last") return fixed({Party::alice, Party::charlie, Party::bob});
        if (s == "bob-first") return fixed({Party::bob, Party::alice, Party::charlie});
        if (s.rfind("fixed:", 0) == 0) {
            DeclarationOrder o{};
            std::size_t start = 6;
            for (int k = 0; k < 3; ++k) {
                const std::size_t comma = s.find(',', start);
                if ((k < 2) == (comma == std::string::npos)) throw std::invalid_argument("bad fixed policy '" + s + "'");
                o[k] = parse_party(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
                start = comma + 1;
            }
            if (order_index(o) == 6) throw std::invalid_argument("fixed policy must name each party once");
            return fixed(o);
        }
        throw std::invalid_argument("unknown declaration policy '" + s + "'");
    }

    Mode mode() const { return mode_; }
    const DeclarationOrder& fixed_order() const { return order_; }

    template <UniformSource R>
    DeclarationOrder order_for(std::uint64_t round_index, R& rng) const {
        switch (mode_) {
            case Mode::fixed: return order_;
            case Mode::round_robin: return all_declaration_orders()[round_index % 6];
            case Mode::random: return all_declaration_orders()[static_cast<std::size_t>(rng.uniform() * 6.0)];
        }
        return order_;
    }

    /// Probability of each of the six orders in a uniformly chosen round.
    std::array<double, 6> order_distribution() const {
        std::array<double, 6> d{};
        if (mode_ == Mode::fixed) {
            d[order_index(order_)] = 1.0;
        } else {
            d.fill(1.0 / 6.0);
        }
        return d;
    }

    std::string name() const {
        switch (mode_) {
            case Mode::round_robin: return "round-robin";
            case Mode::random: return "random";
            case Mode::fixed: break;
        }
        std::string out = "fixed:";
        for (int k = 0; k < 3; ++k) out += std::string(to_string(order_[k])) + (k < 2 ? "," : "");
        return out;
    }

   private:
    DeclarationPolicy(Mode m, DeclarationOrder o) : mode_(m), order_(o) {}
    Mode mode_;
    DeclarationOrder order_;
};

struct QssTranscript {
    PauliOp encoded_op;
    BellTriple outcomes;
    DeclarationOrder declaration_order;
    /// Empty when the outcome triple is inconsistent with every operation.
    std::optional<PauliOp> decoded_op;
};

/// Outcome triple -> operation, generated from decompose_two_ghz.
class QssDecodeTable {
   public:
    static const QssDecodeTable& instance() {
        static const QssDecodeTable table;
        return table;
    }

    std::optional<PauliOp> lookup(const BellTriple& t) const { return entries_[t.index()]; }

    int valid_count() const {
        return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); }));
    }

    /// Probability of the triple given the operation (1/8 on valid triples).
    double likelihood(const BellTriple& t, PauliOp op) const { return likelihood_[index_of(op)][t.index()]; }

   private:
    QssDecodeTable() {
        for (auto& row : likelihood_) row.fill(0.0);
        for (PauliOp op : kAllPauliOps) {
            for (const auto& branch : decompose_two_ghz(op).branches) {
                const BellTriple t = triple_of(branch);
                if (entries_[t.index()]) throw std::logic_error("Bell triple appears under two operations");
                entries_[t.index()] = op;
                likelihood_[index_of(op)][t.index()] = branch.probability();
            }
        }
    }

    std::array<std::optional<PauliOp>, 64> entries_{};
    std::array<std::array<double, 64>, 4> likelihood_{};
};

inline std::optional<PauliOp> decode_qss(BellOutcome o14, BellOutcome o25, BellOutcome o36) {
    return QssDecodeTable::instance().lookup({o14, o25, o36});
}

/// Which of the three Bell outcomes an observer knows.
struct KnownOutcomes {
    std::optional<BellOutcome> o14;
    std::optional<BellOutcome> o25;
    std::optional<BellOutcome> o36;
};

/// Exact posterior over the encoded operation (uniform prior) given a subset
/// of the outcomes. Uniform when the known outcomes are impossible.
inline OpDistribution marginal_information(const KnownOutcomes& known) {
    const auto& table = QssDecodeTable::instance();
    OpDistribution post{};
    for (PauliOp op : kAllPauliOps) {
        double p = 0;
        for (int i = 0; i < 64; ++i) {
            const BellTriple t = BellTriple::from_index(i);
            if ((known.o14 && *known.o14 != t.o14) || (known.o25 && *known.o25 != t.o25) ||
                (known.o36 && *known.o36 != t.o36)) {
                continue;
            }
            p += table.likelihood(t, op);
        }
        post[index_of(op)] = 0.25 * p;
    }
    const double total = std::accumulate(post.begin(), post.end(), 0.0);
    if (total <= 0) return {0.25, 0.25, 0.25, 0.25};
    for (auto& p : post) p /= total;
    return post;
}

/// Shannon entropy in bits.
inline double entropy_bits(const OpDistribution& d) {
    double h = 0;
    for (double p : d) {
        if (p > 0) h -= p * std::log2(p);
    }
    return h;
}

/// Most likely operation; ties go to the lowest cbit encoding.
inline PauliOp map_guess(const OpDistribution& d) {
    int best = 0;
    for (int k = 1; k < 4; ++k) {
        if (d[k] > d[best] + 1e-12) best = k;
    }
    return static_cast<PauliOp>(best);
}

struct QssRoundOptions {
    DeclarationPolicy policy = DeclarationPolicy::random();
    std::uint64_t round_index = 0;
    AdversaryModel adversary = AdversaryModel::none();
};

/// One message round: two GHZ triples, encoding on qubit 1, Bell measurements
/// by Alice (1,4), Bob (2,5), Charlie (3,6) in that order, then decoding.
/// An empty `op` draws the operation uniformly.
template <UniformSource R>
QssTranscript run_qss_round(std::optional<PauliOp> op, R& rng, const QssRoundOptions& options = {}) {
    const PauliOp encoded = op ? *op : kAllPauliOps[static_cast<std::size_t>(rng.uniform() * 4.0)];
    LabeledState s{tensor(ghz3(), ghz3()), {1, 2, 3, 4, 5, 6}};
    if (options.adversary.acts_on_channel()) {
        s = apply_channel_attack(std::move(s), options.adversary, message_channel_labels(options.adversary.target), rng);
    }
    s.state = apply_pauli(s.state, s.position(1), encoded);

    std::array<BellOutcome, 3> outcomes{};
    std::optional<LabeledState> rest = std::move(s);
    for (int k = 0; k < 3; ++k) {
        auto [outcome, residual] = measure_bell(*rest, kQssPairs[k].first, kQssPairs[k].second, rng);
        outcomes[k] = outcome;
        rest = std::move(residual);
    }
    const BellTriple triple{outcomes[0], outcomes[1], outcomes[2]};
    return {encoded, triple, options.policy.order_for(options.round_index, rng),
            QssDecodeTable::instance().lookup(triple)};
}

// ---------------------------------------------------------------------------
// Sessions: message rounds interleaved with GHZ parity checks.

struct SessionReport {
    std::int64_t message_rounds_requested = 0;
    std::int64_t check_rounds_scheduled = 0;
    /// Message rounds actually run (fewer than requested after an abort).
    std::int64_t rounds = 0;
    std::int64_t check_rounds = 0;
    std::int64_t failures = 0;
    std::int64_t decoded_correct = 0;
    std::int64_t tamper_count = 0;
    bool aborted = false;
    double check_fraction = 0;
    std::string adversary;
    std::string policy;
    std::uint64_t seed = 0;

    /// Fraction of message rounds decoded to the encoded operation; empty when none ran.
    std::optional<double> decode_accuracy() const {
        if (rounds == 0) return std::nullopt;
        return static_cast<double>(decoded_correct) / static_cast<double>(rounds);
    }
};

/// Runs `n_message_rounds` message rounds with round(check_fraction * n) check
/// rounds placed at random slots, aborting at the first failed check.
/// Stream 0 of `seed` draws the schedule; slot k uses stream k + 1.
inline SessionReport run_qss_session(std::int64_t n_message_rounds, double check_fraction, const AdversaryModel& adversary,
                                     std::uint64_t seed, const DeclarationPolicy& policy = DeclarationPolicy::random()) {
    if (n_message_rounds < 1) throw std::invalid_argument("a session needs at least one message round");
    if (!(check_fraction >= 0.0 && check_fraction <= 1.0)) throw std::invalid_argument("check fraction outside [0, 1]");

    SessionReport report;
    report.message_rounds_requested = n_message_rounds;
    report.check_fraction = check_fraction;
    report.adversary = adversary.name();
    report.policy = policy.name();
    report.seed = seed;

    const auto n_checks = static_cast<std::int64_t>(std::llround(check_fraction * static_cast<double>(n_message_rounds)));
    report.check_rounds_scheduled = n_checks;
    std::vector<bool> is_check(static_cast<std::size_t>(n_message_rounds + n_checks), false);
    std::fill(is_check.begin(), is_check.begin() + n_checks, true);
    SplitMix64 schedule_rng = SplitMix64::stream(seed, 0);
    for (std::size_t i = is_check.size(); i > 1; --i) {
        const std::size_t j = schedule_rng.below(i);
        std::swap(is_check[i - 1], is_check[j]);
    }

    std::int64_t message_index = 0;
    for (std::size_t slot = 0; slot < is_check.size(); ++slot) {
        SplitMix64 rng = SplitMix64::stream(seed, slot + 1);
        if (is_check[slot]) {
            ++report.check_rounds;
            if (!check_round(adversary, rng).pass) {
                ++report.failures;
                report.aborted = true;
                break;
            }
            continue;
        }
        const QssTranscript t =
            run_qss_round(std::nullopt, rng, {policy, static_cast<std::uint64_t>(message_index++), adversary});
        ++report.rounds;
        if (!t.decoded_op) {
            ++report.tamper_count;
        } else if (*t.decoded_op == t.encoded_op) {
            ++report.decoded_correct;
        }
    }
    return report;
}

}  // namespace qshare
