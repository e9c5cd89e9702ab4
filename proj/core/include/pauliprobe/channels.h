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

#ifndef PAULIPROBE_CHANNELS_H
#define PAULIPROBE_CHANNELS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "pauliprobe/distribution.h"

namespace pauliprobe {

struct IdentityChannel {};
/// (1-q) on the identity plus q spread uniformly over all 4^n strings.
struct DepolarizingChannel {
    double q;
};
/// Independent X with probability q on every qubit.
struct BitFlipChannel {
    double q;
};
/// Independent Z with probability q on every qubit.
struct DephasingChannel {
    double q;
};
/// Support of `support` strings chosen uniformly without replacement, with
/// weights drawn from the flat Dirichlet distribution.
struct SparseRandomChannel {
    std::uint64_t support;
    std::uint64_t seed;
};

using ChannelPreset =
    std::variant<IdentityChannel, DepolarizingChannel, BitFlipChannel, DephasingChannel, SparseRandomChannel>;

PauliDistribution make_channel(const ChannelPreset &preset, int num_qubits, const DistributionLimits &limits = {});

/// Parses "identity", "depolarizing(0.3)", "bit_flip(0.1)", "dephasing(0.1)",
/// "sparse_random(16,7)".
ChannelPreset parse_channel_preset(std::string_view text);
std::string to_string(const ChannelPreset &preset);

}  // namespace pauliprobe

#endif
