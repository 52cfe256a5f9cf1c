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

// JSON and CSV encodings of every report the library produces.

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "qshare/attacks.hpp"
#include "qshare/decomposition_check.hpp"
#include "qshare/harness.hpp"
#include "qshare/qss.hpp"
#include "qshare/sdc.hpp"
#include "qshare/stats.hpp"

namespace qshare {

inline constexpr std::string_view kVersion = "0.1.0";

using nlohmann::json;

inline json to_json(const Statistics& s) {
    json j = {{"count", s.count},
              {"successes", s.successes},
              {"estimate", s.estimate},
              {"ci95_low", s.ci95_low},
              {"ci95_high", s.ci95_high},
              {"ci99_low", s.ci99_low},
              {"ci99_high", s.ci99_high}};
    j["analytic"] = s.analytic ? json(*s.analytic) : json(nullptr);
    return j;
}

inline json to_json(const Comparison& c) {
    return {{"pass", c.pass}, {"z", std::isfinite(c.z) ? json(c.z) : json(nullptr)}, {"p_value", c.p_value}};
}

inline json to_json(const AdversaryModel& m) {
    json j = {{"kind", to_string(m.kind)}, {"target", to_string(m.target)}, {"name", m.name()}};
    if (m.kind == AdversaryKind::intercept_resend) j["basis"] = to_string(m.basis);
    if (m.kind == AdversaryKind::ancilla_entangle) j["coupling"] = m.coupling;
    if (m.kind == AdversaryKind::substitute_qubit) j["prepared"] = to_string(m.prepared);
    return j;
}

inline json to_json(const TrialConfig& c) {
    return {{"protocol", to_string(c.protocol)},
            {"trials", c.trials},
            {"seed", c.seed},
            {"op", c.op ? json(to_string(*c.op)) : json("uniform")},
            {"n_users", c.n_users},
            {"receiver", c.receiver},
            {"policy", c.policy.name()},
            {"adversary", to_json(c.model)}};
}

/// Reads a TrialConfig; absent keys keep their defaults.
inline TrialConfig trial_config_from_json(const json& j) {
    TrialConfig c;
    if (j.contains("protocol")) c.protocol = parse_protocol(j.at("protocol").get<std::string>());
    if (j.contains("trials")) c.trials = j.at("trials").get<std::int64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("op")) {
        const auto op = j.at("op").get<std::string>();
        if (op != "uniform") c.op = parse_pauli(op);
    }
    if (j.contains("n_users")) c.n_users = j.at("n_users").get<int>();
    if (j.contains("receiver")) c.receiver = j.at("receiver").get<int>();
    if (j.contains("policy")) c.policy = DeclarationPolicy::parse(j.at("policy").get<std::string>());
    if (j.contains("adversary")) {
        const json& a = j.at("adversary");
        const std::string kind = a.is_string() ? a.get<std::string>() : a.at("kind").get<std::string>();
        c.model.kind = parse_adversary_kind(kind);
        if (c.model.kind == AdversaryKind::substitute_qubit) c.model.target = Party::charlie;
        if (a.is_object()) {
            if (a.contains("target")) c.model.target = parse_party(a.at("target").get<std::string>());
            if (a.contains("basis")) {
                const auto b = a.at("basis").get<std::string>();
                c.model.basis = b == "X" ? PauliBasis::X : b == "Y" ? PauliBasis::Y : PauliBasis::Z;
            }
            if (a.contains("coupling")) c.model.coupling = a.at("coupling").get<double>();
        }
    }
    if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
    return c;
}

inline json to_json(const SessionReport& r) {
    const auto acc = r.decode_accuracy();
    return {{"rounds", r.rounds},
            {"rounds_requested", r.message_rounds_requested},
            {"check_rounds", r.check_rounds},
            {"check_rounds_scheduled", r.check_rounds_scheduled},
            {"failures", r.failures},
            {"aborted", r.aborted},
            {"decode_accuracy", acc ? json(*acc) : json(nullptr)},
            {"tamper_count", r.tamper_count},
            {"check_fraction", r.check_fraction},
            {"adversary", r.adversary},
            {"policy", r.policy},
            {"seed", r.seed}};
}

inline json to_json(const CheatReport& r) {
    return {{"receiver", r.receiver},
            {"bob_solo_accuracy", r.bob_solo_accuracy},
            {"charlie_solo_accuracy", r.charlie_solo_accuracy},
            {"charlie_cheat_success", r.charlie_cheat_success},
            {"bob_cheat_success", r.bob_cheat_success}};
}

inline json to_json(const CheckAttackReport& r) {
    return {{"model", r.model.name()},
            {"rounds", r.rounds},
            {"conclusive_rounds", r.conclusive_rounds},
            {"failures", r.failures},
            {"detection_probability", r.detection.estimate},
            {"ci95", {r.detection.ci95_low, r.detection.ci95_high}},
            {"analytic", r.detection.analytic ? json(*r.detection.analytic) : json(nullptr)}};
}

inline json to_json(const SubstitutionReport& r) {
    json outcomes = json::object();
    for (BellOutcome b : kAllBellOutcomes) outcomes[std::string(to_string(b))] = r.victim_outcomes[index_of(b)];
    return {{"model", r.model.name()},
            {"rounds", r.rounds},
            {"inconsistent", r.inconsistent},
            {"decoded_correct", r.decoded_correct},
            {"victim_outcomes", outcomes},
            {"detection", to_json(r.detection)},
            {"analytic",
             {{"inconsistent_rate", r.analytic.inconsistent_rate},
              {"decode_accuracy", r.analytic.decode_accuracy},
              {"wrong_decode_rate", r.analytic.wrong_decode_rate}}}};
}

inline json to_json(const LateDeclarerReport& r) {
    return {{"policy", r.policy}, {"cheater", to_string(r.cheater)}, {"analytic", r.analytic},
            {"empirical", to_json(r.empirical)}};
}

inline std::string triple_string(const BellTriple& t) {
    return std::string(to_string(t.o14)) + " " + std::string(to_string(t.o25)) + " " + std::string(to_string(t.o36));
}

inline json to_json(const OpDiscrepancyReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json row;
        if (e.printed) {
            row["printed"] = {{"sign", e.printed->sign},
                              {"o14", e.printed->o14 ? json(to_string(*e.printed->o14)) : json(nullptr)},
                              {"o25", to_string(e.printed->o25)},
                              {"o36", to_string(e.printed->o36)}};
        } else {
            row["printed"] = nullptr;
        }
        if (e.computed) {
            row["computed"] = {{"triple", triple_string(e.computed->triple)},
                               {"coeff_re", e.computed->coeff.real()},
                               {"coeff_im", e.computed->coeff.imag()}};
            row["branch"] = triple_string(e.computed->triple);
        } else {
            row["computed"] = nullptr;
            row["branch"] = nullptr;
        }
        row["status"] = to_string(e.status);
        entries.push_back(std::move(row));
    }
    return {{"op", to_string(r.op)},
            {"lhs_matches", r.lhs_matches},
            {"computed_total_probability", r.computed_total_probability},
            {"computed_fidelity", r.computed_fidelity},
            {"printed_fidelity", r.printed_fidelity ? json(*r.printed_fidelity) : json(nullptr)},
            {"structural_discrepancies", r.structural_count()},
            {"sign_discrepancies", r.count(BranchStatus::sign_mismatch)},
            {"entries", entries}};
}

inline json to_json(const DecompositionCheckReport& r) {
    json ops = json::array();
    for (const auto& op : r.ops) ops.push_back(to_json(op));
    return {{"combined_state", {{"matches_product", r.combined_state_matches_product},
                                {"fidelity_with_product", r.combined_state_fidelity}}},
            {"ops", ops}};
}

inline json qss_decode_table_json() {
    json rows = json::array();
    for (int i = 0; i < 64; ++i) {
        const BellTriple t = BellTriple::from_index(i);
        if (const auto op = QssDecodeTable::instance().lookup(t)) {
            rows.push_back({{"o14", to_string(t.o14)}, {"o25", to_string(t.o25)}, {"o36", to_string(t.o36)},
                            {"op", to_string(*op)}});
        }
    }
    return rows;
}

inline json sdc_decode_table_json() {
    json rows = json::array();
    for (BellOutcome b : kAllBellOutcomes) {
        rows.push_back({{"bell_outcome", to_string(b)}, {"op", to_string(SdcDecodeTable::three_party().lookup(b))}});
    }
    return rows;
}

inline void write_sdc_csv_header(std::ostream& os) {
    os << "seed,op,receiver,bell_outcome,bystander_bits,status,decoded_op\n";
}

inline void write_sdc_csv_row(std::ostream& os, std::uint64_t seed, const SdcTrial& t) {
    os << seed << ',' << to_string(t.encoded_op) << ',' << t.receiver << ',' << to_string(t.bell_outcome) << ',';
    for (int b : t.bystander_bits) os << b;
    os << ',' << (t.success ? "success" : "abort") << ',' << (t.decoded_op ? to_string(*t.decoded_op) : "") << '\n';
}

}  // namespace qshare
