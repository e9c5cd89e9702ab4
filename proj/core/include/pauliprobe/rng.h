// Copyright 2026 The pauliprobe Authors
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

#ifndef PAULIPROBE_RNG_H
#define PAULIPROBE_RNG_H

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>

namespace pauliprobe {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of the named stream `path` under `master`: a SplitMix64 chain over
/// the master seed followed by each path component. Distinct paths give
/// unrelated seeds, so each (cell, trial, role) owns its own stream.
std::uint64_t derive_seed(std::uint64_t master, std::span<const std::uint64_t> path) noexcept;
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/// Non-deterministic seed from std::random_device, for runs without --seed.
std::uint64_t entropy_seed();

/// Seeded random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; floating-point draws are built from
/// raw 64-bit words here (not std::*_distribution) so results are
/// bit-reproducible across standard libraries.
class RngStream {
   public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {
    }
    static RngStream derive(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
        return RngStream(derive_seed(master, path));
    }

    static constexpr result_type min() noexcept {
        return 0;
    }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()() {
        return engine_();
    }

    std::uint64_t seed() const noexcept {
        return seed_;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();
    /// Uniform integer in [0, bound); bound > 0. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound);
    /// Exp(1) variate.
    double exponential();

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace pauliprobe

#endif
