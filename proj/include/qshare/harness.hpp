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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qshare/adversary.hpp"
#include "qshare/attacks.hpp"
#include "qshare/qss.hpp"
#include "qshare/rng.hpp"
#include "qshare/sdc.hpp"
#include "qshare/stats.hpp"

namespace qshare {

enum class Protocol : std::uint8_t {
    qss,               // success = message round decoded correctly
    sdc,               // success = all bystanders read 0 (three parties)
    sdc_n,             // same, N users
    sdc_bob_solo,      // success = Bob alone names the operation
    sdc_charlie_solo,  // success = Charlie alone names the operation
    check,             // success = a conclusive GHZ check round fails (detection)
    substitute,        // success = public comparison exposes the round
    late_declarer,     // success = the late declarer names the operation
};

inline constexpr std::array<Protocol, 8> kAllProtocols = {
    Protocol::qss,   Protocol::sdc,        Protocol::sdc_n,         Protocol::sdc_bob_solo,
    Protocol::sdc_charlie_solo, Protocol::check, Protocol::substitute, Protocol::late_declarer};

inline std::string_view to_string(Protocol p) {
    switch (p) {
        case Protocol::qss: return "qss";
        case Protocol::sdc: return "sdc";
        case Protocol::sdc_n: return "sdc-n";
        case Protocol::sdc_bob_solo: return "sdc-bob-solo";
        case Protocol::sdc_charlie_solo: return "sdc-charlie-solo";
        case Protocol::check: return "check";
        case Protocol::substitute: return "substitute";
        case Protocol::late_declarer: return "late-declarer";
    }
    return "?";
}

inline Protocol parse_protocol(std::string_view s) {
    for (Protocol p : kAllProtocols) {
        if (s == to_string(p)) return p;
    }
    throw std::invalid_argument("unknown protocol '" + std::string(s) + "'");
}

struct TrialConfig {
    Protocol protocol = Protocol::sdc;
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    /// Empty: drawn uniformly per trial.
    std::optional<PauliOp> op;
    int n_users = 2;
    int receiver = kBob;
    DeclarationPolicy policy = DeclarationPolicy::random();
    AdversaryModel model = AdversaryModel::none();
    /// 0 picks the hardware concurrency. Results never depend on it.
    unsigned workers = 0;
};

namespace detail {

template <class F>
double average_over_ops(const std::optional<PauliOp>& op, F&& f) {
    if (op) return f(*op);
    double total = 0;
    for (PauliOp o : kAllPauliOps) total += 0.25 * f(o);
    return total;
}

template <UniformSource R>
PauliOp draw_op(const std::optional<PauliOp>& op, R& rng) {
    return op ? *op : kAllPauliOps[static_cast<std::size_t>(rng.uniform() * 4.0)];
}

}  // namespace detail

/// Exact probability of the per-trial success event of `cfg`.
inline double analytic_probability(const TrialConfig& cfg) {
    switch (cfg.protocol) {
        case Protocol::qss: {
            if (!cfg.op) return message_round_oracle(cfg.model).decode_accuracy;
            const auto dist = attacked_triple_distribution(cfg.model, *cfg.op);
            double p = 0;
            for (int i = 0; i < 64; ++i) {
                if (QssDecodeTable::instance().lookup(BellTriple::from_index(i)) == cfg.op) p += dist[i];
            }
            return p;
        }
        case Protocol::sdc:
        case Protocol::sdc_n: {
            const int n = cfg.protocol == Protocol::sdc ? 2 : cfg.n_users;
            return detail::average_over_ops(cfg.op, [&](PauliOp o) { return sdc_success_probability(n, cfg.receiver, o); });
        }
        case Protocol::sdc_bob_solo: return solo_accuracy(kBob, 2, cfg.receiver);
        case Protocol::sdc_charlie_solo: return solo_accuracy(kCharlie, 2, cfg.receiver);
        case Protocol::check: return check_fail_probability(cfg.model);
        case Protocol::substitute: return message_round_oracle(cfg.model).inconsistent_rate;
        case Protocol::late_declarer: return late_declarer_analytic(cfg.policy, cfg.model.target);
    }
    throw std::invalid_argument("unknown protocol");
}

/// Runs trial `index` of `cfg` on its own stream and reports success.
inline bool run_one_trial(const TrialConfig& cfg, std::uint64_t index) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
    switch (cfg.protocol) {
        case Protocol::qss: {
            const PauliOp op = detail::draw_op(cfg.op, rng);
            const auto t = run_qss_round(op, rng, {cfg.policy, index, cfg.model});
            return t.decoded_op == op;
        }
        case Protocol::sdc:
        case Protocol::sdc_n: {
            const int n = cfg.protocol == Protocol::sdc ? 2 : cfg.n_users;
            return run_sdc_n_party(n, cfg.receiver, detail::draw_op(cfg.op, rng), rng).success;
        }
        case Protocol::sdc_bob_solo:
        case Protocol::sdc_charlie_solo: {
            // Solo guessing assumes a uniformly drawn operation.
            const PauliOp op = detail::draw_op(std::nullopt, rng);
            const SdcTrial t = run_sdc_round(op, rng, cfg.receiver);
            return solo_guess(t, cfg.protocol == Protocol::sdc_bob_solo ? kBob : kCharlie) == op;
        }
        case Protocol::check: return !check_round(cfg.model, rng).pass;
        case Protocol::substitute: {
            const auto t = run_qss_round(detail::draw_op(cfg.op, rng), rng, {cfg.policy, index, cfg.model});
            return !t.decoded_op.has_value();
        }
        case Protocol::late_declarer: {
            const auto t = run_qss_round(detail::draw_op(cfg.op, rng), rng, {cfg.policy, index});
            const auto known = known_before_declaring(t.outcomes, t.declaration_order, cfg.model.target);
            return map_guess(marginal_information(known)) == t.encoded_op;
        }
    }
    throw std::invalid_argument("unknown protocol");
}

inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs cfg.trials independent trials, split across workers by contiguous
/// index ranges. Trial k always uses SplitMix64::stream(seed, k).
inline Statistics run_trials(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.protocol == Protocol::sdc_n || cfg.protocol == Protocol::sdc) {
        check_sdc_parties(cfg.protocol == Protocol::sdc ? 2 : cfg.n_users, cfg.receiver);
    }
    // Build the memoized tables before any worker starts.
    (void)QssDecodeTable::instance();
    (void)SdcDecodeTable::three_party();

    const unsigned workers =
        static_cast<unsigned>(std::min<std::int64_t>(resolve_workers(cfg.workers), cfg.trials));
    std::vector<std::int64_t> successes(workers, 0);
    auto work = [&](unsigned w) {
        const std::int64_t begin = cfg.trials * w / workers, end = cfg.trials * (w + 1) / workers;
        std::int64_t local = 0;
        for (std::int64_t k = begin; k < end; ++k) local += run_one_trial(cfg, static_cast<std::uint64_t>(k));
        successes[w] = local;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    std::int64_t total = 0;
    for (auto s : successes) total += s;
    return Statistics::from_counts(total, cfg.trials, analytic_probability(cfg));
}

/// Per-trial SDC records for CSV logs, each tagged with its stream key.
inline std::vector<std::pair<std::uint64_t, SdcTrial>> collect_sdc_trials(const TrialConfig& cfg) {
    if (cfg.protocol != Protocol::sdc && cfg.protocol != Protocol::sdc_n) {
        throw std::invalid_argument("trial logs are available for sdc and sdc-n");
    }
    const int n = cfg.protocol == Protocol::sdc ? 2 : cfg.n_users;
    std::vector<std::pair<std::uint64_t, SdcTrial>> out;
    out.reserve(static_cast<std::size_t>(cfg.trials));
    for (std::int64_t k = 0; k < cfg.trials; ++k) {
        const std::uint64_t key = SplitMix64::stream_key(cfg.seed, static_cast<std::uint64_t>(k));
        SplitMix64 rng(key);
        out.emplace_back(key, run_sdc_n_party(n, cfg.receiver, detail::draw_op(cfg.op, rng), rng));
    }
    return out;
}

struct CheatEstimate {
    CheatReport analytic;
    Statistics bob_solo;
    Statistics charlie_solo;
};

/// Analytic cheat report cross-checked by simulation.
inline CheatEstimate cheat_report_monte_carlo(int receiver, std::int64_t trials, std::uint64_t seed, unsigned workers = 0) {
    TrialConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.receiver = receiver;
    cfg.workers = workers;
    CheatEstimate out;
    out.analytic = cheat_report(receiver);
    cfg.protocol = Protocol::sdc_bob_solo;
    out.bob_solo = run_trials(cfg);
    cfg.protocol = Protocol::sdc_charlie_solo;
    out.charlie_solo = run_trials(cfg);
    return out;
}

}  // namespace qshare
