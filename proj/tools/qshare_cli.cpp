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

// qshare: command-line front end for the secret-sharing and dense-coding simulators.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qshare.hpp"
#include "qshare/report.hpp"

namespace {

using namespace qshare;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStatistics = 2;
constexpr int kExitAborted = 3;

struct Options {
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    bool json = true;
    bool csv = false;
    double check_fraction = 0.5;
    std::string adversary = "none";
    std::string target;
    std::string basis = "Z";
    double coupling = std::numbers::pi;
    std::string prepared = "0";
    std::string receiver = "bob";
    int users = 3;
    std::string policy = "random";
    std::string op = "uniform";
    std::string protocol = "qss";
    std::string config;
    double alpha = 0.01;
    unsigned workers = 0;
};

int parse_receiver(const std::string& s, int n_users) {
    if (s == "bob") return kBob;
    if (s == "charlie") return kCharlie;
    std::size_t used = 0;
    int r = 0;
    try {
        r = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || r < 1 || r > n_users) throw std::invalid_argument("bad receiver '" + s + "'");
    return r;
}

AdversaryModel parse_model(const Options& o) {
    AdversaryModel m;
    m.kind = parse_adversary_kind(o.adversary);
    if (m.kind == AdversaryKind::substitute_qubit) m.target = Party::charlie;
    if (!o.target.empty()) m.target = parse_party(o.target);
    if (o.basis == "X") {
        m.basis = PauliBasis::X;
    } else if (o.basis == "Y") {
        m.basis = PauliBasis::Y;
    } else if (o.basis == "Z") {
        m.basis = PauliBasis::Z;
    } else {
        throw std::invalid_argument("basis must be X, Y or Z");
    }
    m.coupling = o.coupling;
    if (o.prepared == "0") {
        m.prepared = PreparedState::zero;
    } else if (o.prepared == "1") {
        m.prepared = PreparedState::one;
    } else if (o.prepared == "+") {
        m.prepared = PreparedState::plus;
    } else {
        throw std::invalid_argument("prepared state must be 0, 1 or +");
    }
    if (m.acts_on_channel() && m.target == Party::alice) throw std::invalid_argument("channel attacks target bob or charlie");
    return m;
}

/// Config file first, then any flag given on the command line.
TrialConfig build_config(Protocol protocol, const Options& o, const CLI::App& cmd) {
    TrialConfig c;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::invalid_argument("cannot open config '" + o.config + "'");
        c = trial_config_from_json(json::parse(in));
    }
    c.protocol = protocol;
    auto given = [&](const char* flag) {
        const CLI::Option* opt = cmd.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    if (o.config.empty() || given("--trials")) c.trials = o.trials;
    if (o.config.empty() || given("--seed")) c.seed = o.seed;
    if (o.config.empty() || given("--op")) c.op = o.op == "uniform" ? std::nullopt : std::optional(parse_pauli(o.op));
    if (protocol == Protocol::sdc_n && (o.config.empty() || given("--users"))) c.n_users = o.users;
    if (o.config.empty() || given("--policy")) c.policy = DeclarationPolicy::parse(o.policy);
    if (o.config.empty() || given("--adversary")) c.model = parse_model(o);
    if (o.config.empty() || given("--receiver")) c.receiver = parse_receiver(o.receiver, std::max(c.n_users, 2));
    c.workers = o.workers;
    if (c.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    return c;
}

json envelope(const std::string& command, const json& config, std::uint64_t seed, json result) {
    return {{"command", command},
            {"version", kVersion},
            {"generator", SplitMix64::kName},
            {"seed", seed},
            {"config", config},
            {"result", std::move(result)}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json with_comparison(const Statistics& s, double alpha, bool& all_pass) {
    json j = to_json(s);
    const Comparison c = compare_analytic(s, alpha);
    all_pass = all_pass && c.pass;
    j["comparison"] = to_json(c);
    return j;
}

void emit_stats_csv(const std::string& metric, const Statistics& s) {
    std::cout << metric << ',' << s.count << ',' << s.successes << ',' << s.estimate << ',' << s.ci95_low << ','
              << s.ci95_high << ',' << (s.analytic ? std::to_string(*s.analytic) : "") << '\n';
}

void emit_stats_csv_header() { std::cout << "metric,count,successes,estimate,ci95_low,ci95_high,analytic\n"; }

int cmd_qss_run(const Options& o, const CLI::App& cmd) {
    const TrialConfig cfg = build_config(Protocol::qss, o, cmd);
    const SessionReport r = run_qss_session(cfg.trials, o.check_fraction, cfg.model, cfg.seed, cfg.policy);
    json config = to_json(cfg);
    config["check_fraction"] = o.check_fraction;
    json result = to_json(r);
    const double per_check = check_fail_probability(cfg.model);
    const MessageRoundOracle oracle = message_round_oracle(cfg.model);
    result["analytic"] = {{"check_fail_probability", per_check},
                          {"session_detection_probability", session_detection_probability(per_check, r.check_rounds_scheduled)},
                          {"decode_accuracy", oracle.decode_accuracy}};
    bool honest_ok = true;
    if (cfg.model.kind == AdversaryKind::none) {
        honest_ok = r.decode_accuracy() == 1.0 && r.failures == 0;
    }
    if (o.csv) {
        std::cout << "rounds,check_rounds,failures,aborted,decode_accuracy,tamper_count,adversary,seed\n"
                  << r.rounds << ',' << r.check_rounds << ',' << r.failures << ',' << (r.aborted ? 1 : 0) << ','
                  << (r.decode_accuracy() ? std::to_string(*r.decode_accuracy()) : "") << ',' << r.tamper_count << ','
                  << r.adversary << ',' << r.seed << '\n';
    } else {
        emit(envelope("qss-run", config, cfg.seed, result));
    }
    if (r.aborted) return kExitAborted;
    return honest_ok ? kExitOk : kExitStatistics;
}

int cmd_qss_attack(const Options& o, const CLI::App& cmd) {
    Options opts = o;
    if (!cmd.count("--adversary")) opts.adversary = "intercept-resend";
    const TrialConfig cfg = build_config(Protocol::check, opts, cmd);
    json config = to_json(cfg);
    json result;
    bool pass = true;
    std::vector<std::pair<std::string, Statistics>> rows;
    if (cfg.model.kind == AdversaryKind::late_declarer) {
        const LateDeclarerReport r = late_declarer_attack(cfg.policy, cfg.trials, cfg.seed, cfg.model.target);
        result = to_json(r);
        result["empirical"] = with_comparison(r.empirical, o.alpha, pass);
        rows.emplace_back("late_declarer_success", r.empirical);
    } else {
        const CheckAttackReport checks = run_check_rounds(cfg.model, cfg.trials, cfg.seed);
        result["check"] = to_json(checks);
        result["check"]["comparison"] = to_json(compare_analytic(checks.detection, o.alpha));
        pass = pass && compare_analytic(checks.detection, o.alpha).pass;
        rows.emplace_back("check_failure", checks.detection);
        for (long long n : {1LL, 10LL, 50LL}) {
            result["check"]["session_detection"][std::to_string(n)] =
                session_detection_probability(*checks.detection.analytic, n);
        }
        TrialConfig msg = cfg;
        msg.protocol = Protocol::qss;
        msg.seed = cfg.seed + 1;
        const Statistics decode = run_trials(msg);
        result["message_decode"] = with_comparison(decode, o.alpha, pass);
        rows.emplace_back("message_decode", decode);
        if (cfg.model.kind == AdversaryKind::substitute_qubit) {
            const SubstitutionReport sub = substitute_qubit_attack(cfg.trials, cfg.seed + 2, cfg.model);
            result["substitution"] = to_json(sub);
            result["substitution"]["detection"] = with_comparison(sub.detection, o.alpha, pass);
            rows.emplace_back("public_comparison_detection", sub.detection);
        }
    }
    if (o.csv) {
        emit_stats_csv_header();
        for (const auto& [name, s] : rows) emit_stats_csv(name, s);
    } else {
        emit(envelope("qss-attack", config, cfg.seed, result));
    }
    return pass ? kExitOk : kExitStatistics;
}

int emit_sdc_like(const std::string& command, const TrialConfig& cfg, const Options& o, json extra) {
    const Statistics s = run_trials(cfg);
    bool pass = true;
    json result = with_comparison(s, o.alpha, pass);
    for (auto& [k, v] : extra.items()) result[k] = v;
    if (o.csv) {
        write_sdc_csv_header(std::cout);
        for (const auto& [key, trial] : collect_sdc_trials(cfg)) write_sdc_csv_row(std::cout, key, trial);
    } else {
        emit(envelope(command, to_json(cfg), cfg.seed, result));
    }
    return pass ? kExitOk : kExitStatistics;
}

int cmd_sdc_run(const Options& o, const CLI::App& cmd) {
    const TrialConfig cfg = build_config(Protocol::sdc, o, cmd);
    check_sdc_parties(2, cfg.receiver);
    return emit_sdc_like("sdc-run", cfg, o, json::object());
}

int cmd_sdc_n(const Options& o, const CLI::App& cmd) {
    const TrialConfig cfg = build_config(Protocol::sdc_n, o, cmd);
    check_sdc_parties(cfg.n_users, cfg.receiver);
    json extra;
    double acc = 1.0;
    for (PauliOp op : kAllPauliOps) acc = std::min(acc, conditional_decode_accuracy(cfg.n_users, cfg.receiver, op));
    extra["conditional_decode_accuracy"] = acc;
    extra["analytic_formula"] = 2.0 / (cfg.n_users + 1);
    return emit_sdc_like("sdc-n", cfg, o, extra);
}

int cmd_sdc_cheat(const Options& o, const CLI::App& cmd) {
    const TrialConfig cfg = build_config(Protocol::sdc_bob_solo, o, cmd);
    check_sdc_parties(2, cfg.receiver);
    const CheatEstimate est = cheat_report_monte_carlo(cfg.receiver, cfg.trials, cfg.seed, cfg.workers);
    bool pass = true;
    json result = {{"analytic", to_json(est.analytic)},
                   {"empirical",
                    {{"bob_solo", with_comparison(est.bob_solo, o.alpha, pass)},
                     {"charlie_solo", with_comparison(est.charlie_solo, o.alpha, pass)},
                     {"charlie_cheat_success", 1.0 - est.bob_solo.estimate},
                     {"bob_cheat_success", 1.0 - est.charlie_solo.estimate}}}};
    if (o.csv) {
        emit_stats_csv_header();
        emit_stats_csv("bob_solo", est.bob_solo);
        emit_stats_csv("charlie_solo", est.charlie_solo);
    } else {
        emit(envelope("sdc-cheat", to_json(cfg), cfg.seed, result));
    }
    return pass ? kExitOk : kExitStatistics;
}

int cmd_decomp_verify(const Options& o) {
    const DecompositionCheckReport r = verify_against_printed_decomposition();
    if (o.csv) {
        std::cout << "op,branch,printed_sign,printed_o14,printed_o25,printed_o36,status\n";
        for (const auto& op : r.ops) {
            for (const auto& e : op.entries) {
                std::cout << to_string(op.op) << ',' << (e.computed ? triple_string(e.computed->triple) : "") << ',';
                if (e.printed) {
                    std::cout << e.printed->sign << ',' << (e.printed->o14 ? to_string(*e.printed->o14) : "") << ','
                              << to_string(e.printed->o25) << ',' << to_string(e.printed->o36);
                } else {
                    std::cout << ",,,";
                }
                std::cout << ',' << to_string(e.status) << '\n';
            }
        }
    } else {
        emit(envelope("decomp-verify", json::object(), o.seed, to_json(r)));
    }
    return kExitOk;
}

int cmd_decode_table(const Options& o) {
    if (o.protocol != "qss" && o.protocol != "sdc") throw std::invalid_argument("--protocol must be qss or sdc");
    const json rows = o.protocol == "qss" ? qss_decode_table_json() : sdc_decode_table_json();
    if (o.csv) {
        if (o.protocol == "qss") {
            std::cout << "o14,o25,o36,op\n";
            for (const auto& r : rows) {
                std::cout << r["o14"].get<std::string>() << ',' << r["o25"].get<std::string>() << ','
                          << r["o36"].get<std::string>() << ',' << r["op"].get<std::string>() << '\n';
            }
        } else {
            std::cout << "bell_outcome,op\n";
            for (const auto& r : rows) std::cout << r["bell_outcome"].get<std::string>() << ',' << r["op"].get<std::string>() << '\n';
        }
    } else {
        emit(envelope("decode-table", {{"protocol", o.protocol}}, o.seed, rows));
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--trials", o.trials, "Number of trials or rounds")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Base seed");
    auto* json_flag = cmd->add_flag("--json", o.json, "Emit JSON (default)");
    cmd->add_flag("--csv", o.csv, "Emit CSV")->excludes(json_flag);
    cmd->add_option("--alpha", o.alpha, "Significance level for analytic comparisons")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--config", o.config, "TrialConfig JSON file; flags given explicitly override it");
}

void add_adversary(CLI::App* cmd, Options& o) {
    cmd->add_option("--adversary", o.adversary,
                    "none | intercept-resend | ancilla-entangle | substitute-qubit | late-declarer");
    cmd->add_option("--target", o.target, "Attacked party (bob | charlie)");
    cmd->add_option("--basis", o.basis, "Intercept basis (Z | X | Y)");
    cmd->add_option("--coupling", o.coupling, "Ancilla coupling angle in radians");
    cmd->add_option("--prepared", o.prepared, "Substituted state (0 | 1 | +)");
    cmd->add_option("--policy", o.policy, "Declaration order: random | round-robin | bob-last | bob-first | fixed:a,b,c");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for GHZ secret sharing and W-state secure dense coding"};
    app.require_subcommand(1);
    Options o;

    auto* qss_run = app.add_subcommand("qss-run", "Run a secret-sharing session with check rounds");
    add_common(qss_run, o);
    add_adversary(qss_run, o);
    qss_run->add_option("--check-fraction", o.check_fraction, "Check rounds per message round")->check(CLI::Range(0.0, 1.0));

    auto* qss_attack = app.add_subcommand("qss-attack", "Measure an attack against its exact oracle");
    add_common(qss_attack, o);
    add_adversary(qss_attack, o);

    auto* sdc_run = app.add_subcommand("sdc-run", "Three-party secure dense coding success rate");
    add_common(sdc_run, o);
    sdc_run->add_option("--op", o.op, "I | X | iY | Z | uniform");
    sdc_run->add_option("--receiver", o.receiver, "Who receives Alice's qubit (bob | charlie)");

    auto* sdc_cheat = app.add_subcommand("sdc-cheat", "Solo-guessing and cheat probabilities");
    add_common(sdc_cheat, o);
    sdc_cheat->add_option("--receiver", o.receiver, "Who receives Alice's qubit (bob | charlie)");

    auto* sdc_n = app.add_subcommand("sdc-n", "Secure dense coding with N users");
    add_common(sdc_n, o);
    sdc_n->add_option("--users", o.users, "Number of users N (2..11)");
    sdc_n->add_option("--receiver", o.receiver, "Receiving user (1..N, or bob | charlie)");
    sdc_n->add_option("--op", o.op, "I | X | iY | Z | uniform");

    auto* decomp = app.add_subcommand("decomp-verify", "Compare computed Bell-triple expansions with the published ones");
    decomp->add_flag("--json", o.json, "Emit JSON (default)");
    decomp->add_flag("--csv", o.csv, "Emit CSV");
    decomp->add_option("--seed", o.seed, "Recorded in the report only");

    auto* table = app.add_subcommand("decode-table", "Print a generated decode table");
    table->add_option("--protocol", o.protocol, "qss | sdc");
    table->add_flag("--json", o.json, "Emit JSON (default)");
    table->add_flag("--csv", o.csv, "Emit CSV");
    table->add_option("--seed", o.seed, "Recorded in the report only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*qss_run) return cmd_qss_run(o, *qss_run);
        if (*qss_attack) return cmd_qss_attack(o, *qss_attack);
        if (*sdc_run) return cmd_sdc_run(o, *sdc_run);
        if (*sdc_cheat) return cmd_sdc_cheat(o, *sdc_cheat);
        if (*sdc_n) return cmd_sdc_n(o, *sdc_n);
        if (*decomp) return cmd_decomp_verify(o);
        if (*table) return cmd_decode_table(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
