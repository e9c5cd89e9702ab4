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

#include "pauliprobe/channel_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pauliprobe/errors.h"
#include "pauliprobe/pauli_string.h"

namespace pauliprobe {

using nlohmann::json;

PauliDistribution parse_channel_json(std::string_view text, const DistributionLimits &limits) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("channel file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("weights")) {
        throw ValidationError("channel file must be an object with \"n\" and \"weights\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw ValidationError("channel \"n\" must be an integer");
    }
    int n = doc["n"].get<int>();
    domain_size(n);
    const auto &weights = doc["weights"];
    if (!weights.is_object()) {
        throw ValidationError("channel \"weights\" must be an object keyed by Pauli labels");
    }
    std::vector<WeightEntry> entries;
    entries.reserve(weights.size());
    for (const auto &[label, value] : weights.items()) {
        auto pauli = PauliString::from_label(label);
        if (pauli.num_qubits() != n) {
            throw ShapeError("label \"" + label + "\" has " + std::to_string(pauli.num_qubits()) +
                             " qubits, channel declares n = " + std::to_string(n));
        }
        if (!value.is_number()) {
            throw ValidationError("weight of \"" + label + "\" is not a number");
        }
        entries.push_back({pauli.index(), value.get<double>()});
    }
    return PauliDistribution::sparse(n, std::move(entries), limits);
}

PauliDistribution load_channel_file(const std::filesystem::path &path, const DistributionLimits &limits) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open channel file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_channel_json(buffer.str(), limits);
}

std::string channel_to_json(const PauliDistribution &dist) {
    json weights = json::object();
    dist.for_each_nonzero(
        [&](PauliIndex i, double w) { weights[decode_index(i, dist.num_qubits())] = w; });
    json doc = {{"n", dist.num_qubits()}, {"weights", std::move(weights)}};
    return doc.dump();
}

}  // namespace pauliprobe
