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

#include "pauliprobe/learner.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "pauliprobe/errors.h"
#include "pauliprobe/rng.h"

namespace pauliprobe {

std::string_view to_string(LearningRegime regime) {
    switch (regime) {
        case LearningRegime::SmallEps:
            return "small-eps";
        case LearningRegime::Crossover:
            return "crossover";
        case LearningRegime::LargeEps:
            return "large-eps";
        case LearningRegime::PGe2:
            return "p-ge-2";
    }
    return "unknown";
}

std::uint64_t ceil_count(double x) {
    if (!std::isfinite(x) || x > 1.8e19) {
        throw InvalidParameterError("planned sample count is not representable");
    }
    double c = std::ceil(x * (1.0 - 1e-12));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

SamplePlan plan_sample_size(LpOrder p, int num_qubits, double epsilon, double delta) {
    SamplePlan plan;
    plan.params = LpParams{p, epsilon, delta};
    plan.params.validate();
    plan.num_qubits = num_qubits;
    domain_size(num_qubits);
    const double inv_delta = 1.0 / delta;
    const double inv_eps2 = 1.0 / (epsilon * epsilon);

    if (p.is_infinite() || p.value() >= 2.0) {
        plan.regime = LearningRegime::PGe2;
        plan.upper = ceil_count(inv_delta * inv_eps2);
        plan.lower = ceil_count(inv_eps2);
        return plan;
    }

    const double pv = p.value();
    const double n = num_qubits;
    // 4^(n(2-p)/p) eps^-2, the small-eps branch of both bounds.
    const double small_branch = std::pow(4.0, n * (2.0 - pv) / pv) * inv_eps2;
    if (pv == 1.0) {
        // t = 1 > eps always: the small-eps row.
        plan.regime = LearningRegime::SmallEps;
        plan.upper = ceil_count(inv_delta * small_branch);
        plan.lower = ceil_count(small_branch);
        return plan;
    }
    const double threshold = std::pow(4.0, -n * (pv - 1.0) / pv);
    const double exponent = pv / (pv - 1.0);
    const double upper_large = 0.25 * std::pow(2.0 / epsilon, exponent);
    const double lower_large = std::pow(1.0 / epsilon, exponent);

    if (epsilon <= threshold) {
        plan.regime = LearningRegime::SmallEps;
        plan.upper = ceil_count(inv_delta * small_branch);
        plan.lower = ceil_count(small_branch);
    } else if (epsilon <= 2.0 * threshold) {
        plan.regime = LearningRegime::Crossover;
        plan.upper = ceil_count(inv_delta * std::max(small_branch, upper_large));
        plan.lower = ceil_count(std::max(small_branch, lower_large));
    } else {
        plan.regime = LearningRegime::LargeEps;
        plan.upper = ceil_count(inv_delta * upper_large);
        plan.lower = ceil_count(lower_large);
    }
    return plan;
}

PauliDistribution learn_empirical(const SampleBatch &samples) {
    if (samples.outcomes.empty()) {
        throw PreconditionError("empirical learner needs at least one sample");
    }
    std::vector<PauliIndex> sorted = samples.outcomes;
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());
    std::vector<WeightEntry> entries;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        entries.push_back({sorted[i], static_cast<double>(j - i) / total});
        i = j;
    }
    DistributionLimits unlimited;
    unlimited.max_sparse_entries = entries.size();
    return PauliDistribution::sparse(samples.num_qubits, std::move(entries), unlimited);
}

PauliDistribution learn_median_of_estimates(std::span<const SampleBatch> batches) {
    if (batches.empty()) {
        throw PreconditionError("median learner needs at least one batch");
    }
    const int n = batches.front().num_qubits;
    std::vector<PauliDistribution> estimates;
    estimates.reserve(batches.size());
    std::vector<PauliIndex> keys;
    for (const auto &b : batches) {
        if (b.num_qubits != n) {
            throw ShapeError("batches over different qubit counts");
        }
        estimates.push_back(learn_empirical(b));
        estimates.back().for_each_nonzero([&](PauliIndex i, double) { keys.push_back(i); });
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<WeightEntry> entries;
    std::vector<double> values(estimates.size());
    double total = 0;
    for (auto key : keys) {
        for (std::size_t e = 0; e < estimates.size(); ++e) {
            values[e] = estimates[e].weight(key);
        }
        std::sort(values.begin(), values.end());
        std::size_t m = values.size();
        double med = (m % 2 == 1) ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
        if (med > 0) {
            entries.push_back({key, med});
            total += med;
        }
    }
    if (entries.empty()) {
        // Every coordinate has median zero; fall back to the first estimate.
        return estimates.front();
    }
    for (auto &e : entries) {
        e.weight /= total;
    }
    DistributionLimits unlimited;
    unlimited.max_sparse_entries = entries.size();
    return PauliDistribution::sparse(n, std::move(entries), unlimited);
}

LearningRecord run_learning_trial(
    const PauliDistribution &dist, const SamplePlan &plan, std::uint64_t seed, const LearningTrialOptions &options) {
    if (plan.num_qubits != dist.num_qubits()) {
        throw ShapeError("plan is for " + std::to_string(plan.num_qubits) + " qubits, channel has " +
                         std::to_string(dist.num_qubits()));
    }
    if (options.boost < 1) {
        throw InvalidParameterError("boost must be >= 1");
    }
    PauliSampler sampler(dist);
    LearningRecord record;
    record.seed = seed;
    PauliDistribution estimate = PauliDistribution::point_mass(dist.num_qubits(), 0);
    if (options.boost == 1) {
        RngStream rng(seed);
        auto batch = draw_samples(sampler, plan.upper, rng);
        estimate = learn_empirical(batch);
    } else {
        std::vector<SampleBatch> batches;
        for (int b = 0; b < options.boost; ++b) {
            RngStream rng = RngStream::derive(seed, {static_cast<std::uint64_t>(b)});
            batches.push_back(draw_samples(sampler, plan.upper, rng));
        }
        estimate = learn_median_of_estimates(batches);
    }
    record.samples = plan.upper * static_cast<std::uint64_t>(options.boost);
    record.error = lp_distance(estimate, dist, plan.params.p);
    record.success = record.error <= plan.params.epsilon;
    return record;
}

}  // namespace pauliprobe
