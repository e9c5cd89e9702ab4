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

#ifndef PAULIPROBE_CHANNEL_IO_H
#define PAULIPROBE_CHANNEL_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "pauliprobe/distribution.h"

namespace pauliprobe {

// Channel files are JSON objects
//
//     {"n": 2, "weights": {"II": 0.9, "XZ": 0.1}}
//
// keyed by labels over "IXYZ" (first qubit first). Omitted labels carry zero
// weight. Weights must sum to 1 within kNormalizationTolerance.

PauliDistribution parse_channel_json(std::string_view text, const DistributionLimits &limits = {});
PauliDistribution load_channel_file(const std::filesystem::path &path, const DistributionLimits &limits = {});

/// Writes every positive weight, labels in index order, doubles in shortest
/// round-trip form.
std::string channel_to_json(const PauliDistribution &dist);

}  // namespace pauliprobe

#endif
