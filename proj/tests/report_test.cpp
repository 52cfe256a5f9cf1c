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

#include "qshare/report.hpp"

#include <sstream>

#include "gtest/gtest.h"

using namespace qshare;

TEST(Report, statistics_fields) {
    const json j = to_json(Statistics::from_counts(2, 3, 2.0 / 3.0));
    for (const char* key : {"count", "successes", "estimate", "ci95_low", "ci95_high", "analytic"}) EXPECT_TRUE(j.contains(key));
    EXPECT_EQ(j["count"], 3);
    EXPECT_TRUE(to_json(Statistics::from_counts(1, 2))["analytic"].is_null());
}

TEST(Report, session_fields) {
    const json j = to_json(run_qss_session(10, 0.5, AdversaryModel::none(), 7));
    for (const char* key : {"rounds", "check_rounds", "failures", "decode_accuracy", "tamper_count", "adversary", "seed"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["adversary"], "none");
}

TEST(Report, check_attack_fields) {
    const json j = to_json(run_check_rounds(AdversaryModel::intercept_resend(), 100, 1));
    for (const char* key : {"model", "rounds", "conclusive_rounds", "failures", "detection_probability", "ci95"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["ci95"].size(), 2u);
}

TEST(Report, cheat_fields) {
    const json j = to_json(cheat_report());
    EXPECT_DOUBLE_EQ(j["bob_cheat_success"].get<double>(), cheat_report().bob_cheat_success);
}

TEST(Report, qss_table_sorted) {
    const json rows = qss_decode_table_json();
    ASSERT_EQ(rows.size(), 32u);
    EXPECT_EQ(rows[0]["o14"], "Phi+");
    EXPECT_EQ(rows[0]["o25"], "Phi+");
    EXPECT_EQ(rows[0]["o36"], "Phi+");
    EXPECT_EQ(rows[0]["op"], "I");
    auto rank = [](const json& r) {
        return index_of(parse_bell(r["o14"].get<std::string>())) * 16 + index_of(parse_bell(r["o25"].get<std::string>())) * 4 +
               index_of(parse_bell(r["o36"].get<std::string>()));
    };
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rank(rows[i - 1]), rank(rows[i]));
    bool found = false;
    for (const auto& r : rows) {
        if (r["o14"] == "Phi-" && r["o25"] == "Phi-" && r["o36"] == "Phi-") {
            EXPECT_EQ(r["op"], "Z");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Report, sdc_csv) {
    std::ostringstream os;
    write_sdc_csv_header(os);
    SdcTrial t{PauliOp::iY, 2, kBob, BellOutcome::PhiMinus, {0}, true, PauliOp::iY};
    write_sdc_csv_row(os, 12, t);
    EXPECT_EQ(os.str(), "seed,op,receiver,bell_outcome,bystander_bits,status,decoded_op\n12,iY,1,Phi-,0,success,iY\n");
}

TEST(Report, trial_config_round_trip) {
    TrialConfig c;
    c.protocol = Protocol::check;
    c.trials = 123;
    c.seed = 99;
    c.op = PauliOp::X;
    c.policy = DeclarationPolicy::parse("bob-last");
    c.model = AdversaryModel::intercept_resend(Party::charlie, PauliBasis::X);
    const TrialConfig back = trial_config_from_json(to_json(c));
    EXPECT_EQ(to_json(back).dump(), to_json(c).dump());
    EXPECT_EQ(back.model.basis, PauliBasis::X);
}

TEST(Report, decomposition_report) {
    const json j = to_json(verify_against_printed_decomposition());
    ASSERT_EQ(j["ops"].size(), 4u);
    EXPECT_EQ(j["ops"][0]["structural_discrepancies"], 0);
    EXPECT_GE(j["ops"][1]["structural_discrepancies"].get<int>(), 1);
    EXPECT_GE(j["ops"][2]["structural_discrepancies"].get<int>(), 1);
}
