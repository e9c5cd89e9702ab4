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

#include "pauliprobe/channels.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "pauliprobe/errors.h"
#include "pauliprobe/rng.h"

namespace pauliprobe {

namespace {

void check_probability(double q, const char *name) {
    if (!(q >= 0 && q <= 1)) {
        throw InvalidParameterError(std::string(name) + " probability must lie in [0, 1], got " + std::to_string(q));
    }
}

/// Independent single-qubit error `digit` with probability q on each qubit.
PauliDistribution product_channel(double q, std::uint8_t digit, int n, const DistributionLimits &limits) {
    if (q == 0) {
        return PauliDistribution::point_mass(n, 0);
    }
    if (q == 1) {
        PauliIndex all = 0;
        for (int i = 0; i < n; ++i) {
            all = (all << 2) | digit;
        }
        return PauliDistribution::point_mass(n, all);
    }
    std::uint64_t subsets = std::uint64_t{1} << n;
    if (subsets > limits.max_sparse_entries) {
        throw ResourceLimitError("product channel on " + std::to_string(n) + " qubits needs 2^n entries");
    }
    std::vector<WeightEntry> entries;
    entries.reserve(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        PauliIndex index = 0;
        int flips = 0;
        for (int qubit = 0; qubit < n; ++qubit) {
            bool hit = (mask >> (n - 1 - qubit)) & 1;
            index = (index << 2) | (hit ? digit : 0);
            flips += hit;
        }
        double w = std::pow(q, flips) * std::pow(1 - q, n - flips);
        entries.push_back({index, w});
    }
    return PauliDistribution::sparse(n, std::move(entries), limits);
}

PauliDistribution sparse_random(const SparseRandomChannel &spec, int n, const DistributionLimits &limits) {
    PauliIndex k = domain_size(n);
    if (spec.support < 1 || spec.support > k) {
        throw InvalidParameterError("sparse_random support must lie in [1, 4^n], got " + std::to_string(spec.support));
    }
    if (spec.support > limits.max_sparse_entries) {
        throw ResourceLimitError("sparse_random support exceeds the sparse entry cap");
    }
    RngStream rng(derive_seed(spec.seed, {0x5350415253452d52ULL, static_cast<std::uint64_t>(n)}));
    // Floyd's sampling of `support` distinct indices.
    std::set<PauliIndex> chosen;
    for (PauliIndex j = k - spec.support; j < k; ++j) {
        PauliIndex t = rng.below(j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    // Flat Dirichlet weights as normalized Exp(1) variates, assigned in index
    // order.
    std::vector<WeightEntry> entries;
    entries.reserve(chosen.size());
    double total = 0;
    for (auto index : chosen) {
        double e = 0;
        while (e <= 1e-300) {
            e = rng.exponential();
        }
        entries.push_back({index, e});
        total += e;
    }
    for (auto &entry : entries) {
        entry.weight /= total;
    }
    return PauliDistribution::sparse(n, std::move(entries), limits);
}

std::vector<std::string_view> split_args(std::string_view text) {
    std::vector<std::string_view> out;
    while (true) {
        auto comma = text.find(',');
        auto part = text.substr(0, comma);
        while (!part.empty() && part.front() == ' ') {
            part.remove_prefix(1);
        }
        while (!part.empty() && part.back() == ' ') {
            part.remove_suffix(1);
        }
        out.push_back(part);
        if (comma == std::string_view::npos) {
            return out;
        }
        text.remove_prefix(comma + 1);
    }
}

template <typename T>
T parse_number(std::string_view text, std::string_view context) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidParameterError("cannot parse \"" + std::string(text) + "\" in channel preset " +
                                    std::string(context));
    }
    return value;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

PauliDistribution make_channel(const ChannelPreset &preset, int num_qubits, const DistributionLimits &limits) {
    PauliIndex k = domain_size(num_qubits);
    return std::visit(
        [&](const auto &p) -> PauliDistribution {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, IdentityChannel>) {
                return PauliDistribution::point_mass(num_qubits, 0);
            } else if constexpr (std::is_same_v<T, DepolarizingChannel>) {
                check_probability(p.q, "depolarizing");
                if (p.q == 0) {
                    return PauliDistribution::point_mass(num_qubits, 0);
                }
                std::vector<double> w(k, p.q / static_cast<double>(k));
                w[0] += 1 - p.q;
                return PauliDistribution::dense(num_qubits, std::move(w), limits);
            } else if constexpr (std::is_same_v<T, BitFlipChannel>) {
                check_probability(p.q, "bit_flip");
                return product_channel(p.q, 1, num_qubits, limits);
            } else if constexpr (std::is_same_v<T, DephasingChannel>) {
                check_probability(p.q, "dephasing");
                return product_channel(p.q, 3, num_qubits, limits);
            } else {
                return sparse_random(p, num_qubits, limits);
            }
        },
        preset);
}

ChannelPreset parse_channel_preset(std::string_view text) {
    std::string_view name = text;
    std::vector<std::string_view> args;
    auto open = text.find('(');
    if (open != std::string_view::npos) {
        if (text.back() != ')') {
            throw InvalidParameterError("unbalanced parentheses in channel preset \"" + std::string(text) + "\"");
        }
        name = text.substr(0, open);
        args = split_args(text.substr(open + 1, text.size() - open - 2));
    }
    auto expect_args = [&](std::size_t n) {
        if (args.size() != n) {
            throw InvalidParameterError("channel preset " + std::string(name) + " takes " + std::to_string(n) +
                                        " argument(s)");
        }
    };
    if (name == "identity") {
        if (!args.empty() && !(args.size() == 1 && args[0].empty())) {
            expect_args(0);
        }
        return IdentityChannel{};
    }
    if (name == "depolarizing") {
        expect_args(1);
        const double q = parse_number<double>(args[0], text);
        check_probability(q, "depolarizing");
        return DepolarizingChannel{q};
    }
    if (name == "bit_flip") {
        expect_args(1);
        const double q = parse_number<double>(args[0], text);
        check_probability(q, "bit_flip");
        return BitFlipChannel{q};
    }
    if (name == "dephasing") {
        expect_args(1);
        const double q = parse_number<double>(args[0], text);
        check_probability(q, "dephasing");
        return DephasingChannel{q};
    }
    if (name == "sparse_random") {
        expect_args(2);
        return SparseRandomChannel{parse_number<std::uint64_t>(args[0], text),
                                   parse_number<std::uint64_t>(args[1], text)};
    }
    throw InvalidParameterError("unknown channel preset \"" + std::string(text) + "\"");
}

std::string to_string(const ChannelPreset &preset) {
    return std::visit(
        [](const auto &p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, IdentityChannel>) {
                return "identity";
            } else if constexpr (std::is_same_v<T, DepolarizingChannel>) {
                return "depolarizing(" + format_double(p.q) + ")";
            } else if constexpr (std::is_same_v<T, BitFlipChannel>) {
                return "bit_flip(" + format_double(p.q) + ")";
            } else if constexpr (std::is_same_v<T, DephasingChannel>) {
                return "dephasing(" + format_double(p.q) + ")";
            } else {
                return "sparse_random(" + std::to_string(p.support) + "," + std::to_string(p.seed) + ")";
            }
        },
        preset);
}

}  // namespace pauliprobe
