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

#include "pauliprobe/diamond.h"

#include <algorithm>
#include <string>

#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/metrics.h"
#include "pauliprobe/quantum_sim.h"
#include "pauliprobe/rng.h"

namespace pauliprobe {

std::string_view to_string(DiamondMethod method) {
    switch (method) {
        case DiamondMethod::Exact:
            return "exact";
        case DiamondMethod::Plugin:
            return "plugin";
        case DiamondMethod::Unseen:
            return "unseen";
    }
    return "unknown";
}

DiamondMethod parse_diamond_method(std::string_view text) {
    if (text == "exact") {
        return DiamondMethod::Exact;
    }
    if (text == "plugin") {
        return DiamondMethod::Plugin;
    }
    if (text == "unseen") {
        return DiamondMethod::Unseen;
    }
    throw InvalidParameterError("unknown diamond method '" + std::string(text) + "'");
}

namespace {

void require_same_size(const PauliDistribution &a, const PauliDistribution &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("channels act on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
    }
}

void require_epsilon(double epsilon) {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw InvalidParameterError("epsilon must lie in (0, 1)");
    }
}

}  // namespace

double diamond_exact(const PauliDistribution &first, const PauliDistribution &second) {
    require_same_size(first, second);
    return lp_distance(first, second, LpOrder::finite(1.0));
}

DiamondEstimate diamond_estimate_plugin(
    const PauliDistribution &first, const PauliDistribution &second, double epsilon, double delta,
    std::uint64_t seed) {
    require_same_size(first, second);
    require_epsilon(epsilon);
    SamplePlan plan = plan_sample_size(LpOrder::finite(1.0), first.num_qubits(), epsilon, delta / 2);
    RngStream rng1 = RngStream::derive(seed, {1});
    RngStream rng2 = RngStream::derive(seed, {2});
    PauliDistribution est1 = learn_empirical(draw_samples(first, plan.upper, rng1));
    PauliDistribution est2 = learn_empirical(draw_samples(second, plan.upper, rng2));
    DiamondEstimate out;
    out.method = DiamondMethod::Plugin;
    out.value = std::clamp(lp_distance(est1, est2, LpOrder::finite(1.0)), 0.0, 2.0);
    out.queries_per_channel = plan.upper;
    out.epsilon_target = 2 * epsilon;
    out.learning_error_first = lp_distance(est1, first, LpOrder::finite(1.0));
    out.learning_error_second = lp_distance(est2, second, LpOrder::finite(1.0));
    return out;
}

DiamondEstimate diamond_estimate_unseen(
    const PauliDistribution &first, const PauliDistribution &second, double epsilon, double gamma,
    std::uint64_t seed, const UnseenConfig &config) {
    require_same_size(first, second);
    require_epsilon(epsilon);
    const std::uint64_t queries = unseen_sample_size(gamma, epsilon, first.num_qubits());
    RngStream rng1 = RngStream::derive(seed, {1});
    RngStream rng2 = RngStream::derive(seed, {2});
    SampleBatch b1 = draw_samples(first, queries, rng1);
    SampleBatch b2 = draw_samples(second, queries, rng2);
    DiamondEstimate out;
    out.method = DiamondMethod::Unseen;
    out.value = estimate_l1_unseen(b1, b2, first.domain_size(), config);
    out.queries_per_channel = queries;
    out.epsilon_target = epsilon;
    return out;
}

}  // namespace pauliprobe
