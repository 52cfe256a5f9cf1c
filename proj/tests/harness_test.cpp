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

#include "qshare/harness.hpp"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace qshare;

TEST(Rng, reference_sequence) {
    SplitMix64 r(1234567);
    EXPECT_EQ(r(), 6457827717110365317ULL);
    EXPECT_EQ(r(), 3203168211198807973ULL);
    EXPECT_EQ(r(), 9817491932198370423ULL);
    EXPECT_EQ(r(), 4593380528125082431ULL);
    EXPECT_EQ(r(), 16408922859458223821ULL);
}

TEST(Rng, streams_are_distinct_and_stable) {
    std::set<std::uint64_t> keys;
    for (std::uint64_t k = 0; k < 1000; ++k) keys.insert(SplitMix64::stream_key(7, k));
    EXPECT_EQ(keys.size(), 1000u);
    EXPECT_EQ(SplitMix64::stream_key(7, 3), SplitMix64::stream_key(7, 3));
    EXPECT_NE(SplitMix64::stream_key(7, 3), SplitMix64::stream_key(8, 3));
    SplitMix64 r(1);
    for (int k = 0; k < 10000; ++k) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(r.below(6), 6u);
    }
}

TEST(Wilson, interval_properties) {
    const auto i = wilson_interval(66700, 100000, kZ95);
    EXPECT_LT(i.low, 0.667);
    EXPECT_GT(i.high, 0.667);
    EXPECT_NEAR(i.high - i.low, 2 * 1.96 * std::sqrt(0.667 * 0.333 / 100000), 1e-4);
    const auto all = wilson_interval(100, 100, kZ95);
    EXPECT_DOUBLE_EQ(all.high, 1.0);
    EXPECT_LT(all.low, 1.0);
    EXPECT_GT(all.low, 0.95);
    const auto none = wilson_interval(0, 100, kZ95);
    EXPECT_DOUBLE_EQ(none.low, 0.0);
    const auto s = Statistics::from_counts(3, 10);
    EXPECT_LE(s.ci95_low, s.estimate);
    EXPECT_GE(s.ci95_high, s.estimate);
    EXPECT_LE(s.ci99_low, s.ci95_low);
    EXPECT_GE(s.ci99_high, s.ci95_high);
}

TEST(CompareAnalytic, examples) {
    EXPECT_TRUE(compare_analytic(Statistics::from_counts(66800, 100000, 2.0 / 3.0)).pass);
    EXPECT_FALSE(compare_analytic(Statistics::from_counts(75000, 100000, 2.0 / 3.0)).pass);
    EXPECT_TRUE(compare_analytic(Statistics::from_counts(25000, 100000, 0.25)).pass);
    EXPECT_TRUE(compare_analytic(Statistics::from_counts(100, 100, 1.0)).pass);
    EXPECT_FALSE(compare_analytic(Statistics::from_counts(99, 100, 1.0)).pass);
    EXPECT_THROW(compare_analytic(Statistics::from_counts(1, 2)), std::invalid_argument);
}

TEST(RunTrials, sdc_success) {
    TrialConfig cfg;
    cfg.protocol = Protocol::sdc;
    cfg.trials = 100000;
    cfg.seed = 42;
    const auto s = run_trials(cfg);
    EXPECT_NEAR(*s.analytic, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.estimate, 2.0 / 3.0, 0.01);
    EXPECT_TRUE(compare_analytic(s).pass);
}

TEST(RunTrials, qss_honest) {
    TrialConfig cfg;
    cfg.protocol = Protocol::qss;
    cfg.trials = 10000;
    const auto s = run_trials(cfg);
    EXPECT_DOUBLE_EQ(s.estimate, 1.0);
    EXPECT_TRUE(compare_analytic(s).pass);
}

TEST(RunTrials, bob_and_charlie_solo) {
    TrialConfig cfg;
    cfg.trials = 100000;
    cfg.seed = 3;
    cfg.protocol = Protocol::sdc_bob_solo;
    const auto bob = run_trials(cfg);
    EXPECT_NEAR(*bob.analytic, 2.0 / 3.0, 1e-12);
    EXPECT_TRUE(compare_analytic(bob).pass) << bob.estimate;
    cfg.protocol = Protocol::sdc_charlie_solo;
    const auto charlie = run_trials(cfg);
    EXPECT_NEAR(*charlie.analytic, 0.25, 1e-12);
    EXPECT_TRUE(compare_analytic(charlie).pass) << charlie.estimate;
}

TEST(RunTrials, every_protocol_matches_its_analytic_value) {
    for (Protocol p : kAllProtocols) {
        TrialConfig cfg;
        cfg.protocol = p;
        cfg.trials = 20000;
        cfg.seed = 1000 + static_cast<int>(p);
        cfg.n_users = 4;
        if (p == Protocol::check) cfg.model = AdversaryModel::intercept_resend();
        if (p == Protocol::substitute) cfg.model = AdversaryModel::substitute_qubit();
        if (p == Protocol::late_declarer) cfg.model = AdversaryModel::late_declarer();
        const auto s = run_trials(cfg);
        EXPECT_TRUE(compare_analytic(s, 0.001).pass) << to_string(p) << " " << s.estimate << " vs " << *s.analytic;
    }
}

TEST(RunTrials, reproducible_across_worker_counts) {
    TrialConfig cfg;
    cfg.protocol = Protocol::sdc;
    cfg.trials = 20001;
    cfg.seed = 9;
    cfg.workers = 1;
    const auto one = run_trials(cfg);
    for (unsigned w : {2u, 3u, 8u, 0u}) {
        cfg.workers = w;
        const auto s = run_trials(cfg);
        EXPECT_EQ(s.successes, one.successes);
        EXPECT_EQ(s.estimate, one.estimate);
        EXPECT_EQ(s.ci95_low, one.ci95_low);
        EXPECT_EQ(s.ci99_high, one.ci99_high);
    }
}

TEST(RunTrials, rejects_bad_configs) {
    TrialConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(run_trials(cfg), std::invalid_argument);
    cfg.trials = 10;
    cfg.protocol = Protocol::sdc_n;
    cfg.n_users = 12;
    EXPECT_THROW(run_trials(cfg), std::invalid_argument);
    EXPECT_THROW(parse_protocol("teleport"), std::invalid_argument);
    for (Protocol p : kAllProtocols) EXPECT_EQ(parse_protocol(to_string(p)), p);
}

TEST(RunTrials, interval_calibration) {
    int covered = 0;
    TrialConfig cfg;
    cfg.protocol = Protocol::sdc;
    cfg.trials = 2000;
    cfg.workers = 1;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        cfg.seed = 5000 + seed;
        covered += run_trials(cfg).ci95().contains(2.0 / 3.0);
    }
    EXPECT_GE(covered, 180);
}

TEST(CheatMonteCarlo, agrees_with_analytic) {
    const auto e = cheat_report_monte_carlo(kBob, 100000, 5);
    EXPECT_TRUE(e.bob_solo.ci99().contains(2.0 / 3.0));
    EXPECT_TRUE(e.charlie_solo.ci99().contains(0.25));
}
