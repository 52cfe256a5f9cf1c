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

#include <concepts>
#include <cstdint>
#include <limits>
#include <string_view>

namespace qshare {

/// Anything that yields doubles uniform on [0, 1).
template <class R>
concept UniformSource = requires(R& r) {
    { r.uniform() } -> std::convertible_to<double>;
};

/// SplitMix64 generator with a counter-based stream split.
///
/// Stream k of seed s starts from state mix(mix(s) + (k + 1) * golden), where
/// mix is the SplitMix64 finalizer and golden = 0x9E3779B97F4A7C15. Each draw
/// then advances the state by golden and returns mix(state). Streams depend
/// only on (seed, k), so trials can run in any order on any number of workers.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    static constexpr std::string_view kName = "splitmix64-counter-split-v1";
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Starting state of stream `index` under `seed`.
    static constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
        return mix(mix(seed) + (index + 1) * kGolden);
    }

    static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(stream_key(seed, index));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() {
        state_ += kGolden;
        return mix(state_);
    }

    /// 53-bit uniform double on [0, 1).
    constexpr double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n) by rejection; n > 0.
    constexpr std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = max() - max() % n;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % n;
    }

    constexpr std::uint64_t state() const { return state_; }

   private:
    std::uint64_t state_;
};

}  // namespace qshare
