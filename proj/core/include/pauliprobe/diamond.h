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

#ifndef PAULIPROBE_DIAMOND_H
#define PAULIPROBE_DIAMOND_H

#include <cstdint>
#include <string_view>

#include "pauliprobe/distribution.h"
#include "pauliprobe/unseen.h"

namespace pauliprobe {

enum class DiamondMethod { Exact, Plugin, Unseen };
std::string_view to_string(DiamondMethod method);
DiamondMethod parse_diamond_method(std::string_view text);

struct DiamondEstimate {
    double value = 0;
    DiamondMethod method = DiamondMethod::Exact;
    /// Channel uses spent on each of the two channels (equal by
    /// construction; 0 for the exact method).
    std::uint64_t queries_per_channel = 0;
    double epsilon_target = 0;
    /// Plug-in method only: l_1 error of each learned distribution, known
    /// because the true channels are at hand.
    double learning_error_first = 0;
    double learning_error_second = 0;
};

/// Diamond distance of two Pauli channels, which equals the l_1 distance of
/// their error distributions.
double diamond_exact(const PauliDistribution &first, const PauliDistribution &second);

/// Learns both channels with the l_1 plan at (eps, delta/2) and returns
/// l_1(P1_hat, P2_hat). Whenever both learning errors are below eps the
/// triangle inequality gives |d_hat - d| < 2 eps.
DiamondEstimate diamond_estimate_plugin(
    const PauliDistribution &first, const PauliDistribution &second, double epsilon, double delta,
    std::uint64_t seed);

/// ceil(gamma/eps^2 * 4^n/n) queries per channel into the two-sample unseen
/// l_1 estimator. The target accuracy is eps on the distance itself.
DiamondEstimate diamond_estimate_unseen(
    const PauliDistribution &first, const PauliDistribution &second, double epsilon, double gamma,
    std::uint64_t seed, const UnseenConfig &config = {});

}  // namespace pauliprobe

#endif
