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
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qshare {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
    double low;
    double high;
    bool contains(double x) const { return low <= x && x <= high; }
};

/// Wilson score interval for `successes` out of `count` at normal quantile z.
inline Interval wilson_interval(std::int64_t successes, std::int64_t count, double z) {
    if (count <= 0 || successes < 0 || successes > count) throw std::invalid_argument("bad binomial counts");
    const double n = static_cast<double>(count);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    // Clamp so the interval always contains the estimate despite rounding.
    return {std::min(std::max(0.0, center - half), p), std::max(std::min(1.0, center + half), p)};
}

/// Binomial proportion with Wilson intervals and an optional exact value to compare against.
struct Statistics {
    std::int64_t count = 0;
    std::int64_t successes = 0;
    double estimate = 0;
    double ci95_low = 0;
    double ci95_high = 0;
    double ci99_low = 0;
    double ci99_high = 0;
    std::optional<double> analytic;

    static Statistics from_counts(std::int64_t successes, std::int64_t count,
                                  std::optional<double> analytic = std::nullopt) {
        Statistics s;
        s.count = count;
        s.successes = successes;
        s.estimate = static_cast<double>(successes) / static_cast<double>(count);
        const Interval i95 = wilson_interval(successes, count, kZ95);
        const Interval i99 = wilson_interval(successes, count, kZ99);
        s.ci95_low = i95.low;
        s.ci95_high = i95.high;
        s.ci99_low = i99.low;
        s.ci99_high = i99.high;
        s.analytic = analytic;
        return s;
    }

    Interval ci95() const { return {ci95_low, ci95_high}; }
    Interval ci99() const { return {ci99_low, ci99_high}; }
};

struct Comparison {
    bool pass;
    double z;
    double p_value;
};

/// Two-sided binomial z-test of the estimate against the analytic value.
/// A degenerate analytic value (0 or 1) passes only on exact agreement.
inline Comparison compare_analytic(const Statistics& s, double alpha = 0.01) {
    if (!s.analytic) throw std::invalid_argument("statistics carry no analytic value");
    const double p = *s.analytic;
    const double n = static_cast<double>(s.count);
    const double var = p * (1 - p) / n;
    if (p * (1 - p) < 1e-12) {
        const bool same = std::abs(s.estimate - p) < 1e-9;
        return {same, same ? 0.0 : std::numeric_limits<double>::infinity(), same ? 1.0 : 0.0};
    }
    const double z = (s.estimate - p) / std::sqrt(var);
    const double p_value = std::erfc(std::abs(z) / std::sqrt(2.0));
    return {p_value >= alpha, z, p_value};
}

}  // namespace qshare
