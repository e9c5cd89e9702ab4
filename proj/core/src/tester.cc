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

#include "pauliprobe/tester.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/rng.h"
#include "poisson.h"
#include "summation.h"

namespace pauliprobe {

std::string_view to_string(TestRegime regime) {
    switch (regime) {
        case TestRegime::LowPLargeEps:
            return "p<=2,large-eps";
        case TestRegime::LowPSmallEps:
            return "p<=2,small-eps";
        case TestRegime::MidPTiny:
            return "2<p<inf,tiny-eps";
        case TestRegime::MidPModerate:
            return "2<p<inf,moderate-eps";
        case TestRegime::MidPLarge:
            return "2<p<inf,large-eps";
        case TestRegime::InfSmall:
            return "p=inf,small-eps";
        case TestRegime::InfLarge:
            return "p=inf,large-eps";
    }
    return "unknown";
}

std::string_view to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::Null:
            return "null";
        case Hypothesis::Alternative:
            return "alternative";
        case Hypothesis::Neither:
            return "neither";
    }
    return "unknown";
}

TestPlan plan_test_samples(LpOrder p, int num_qubits, double epsilon, double plan_constant) {
    const double k = static_cast<double>(domain_size(num_qubits));
    const double n = num_qubits;
    const bool low_p = !p.is_infinite() && p.value() <= 2.0;
    const double eps_cap = low_p ? 1.0 : 2.0;
    if (!(epsilon > 0 && (low_p ? epsilon < eps_cap : epsilon <= eps_cap))) {
        throw InvalidParameterError(low_p ? "epsilon must lie in (0, 1) for p <= 2"
                                          : "epsilon must lie in (0, 2] for p > 2");
    }
    if (!(plan_constant > 0) || !std::isfinite(plan_constant)) {
        throw InvalidParameterError("plan constant must be positive");
    }
    TestPlan plan;
    plan.p = p;
    plan.epsilon = epsilon;
    plan.num_qubits = num_qubits;
    plan.plan_constant = plan_constant;

    double sufficient = 0;
    const double inv_eps2 = 1.0 / (epsilon * epsilon);
    if (low_p) {
        const double pv = p.value();
        const double boundary = std::pow(k, -(pv - 1.0) / pv);
        if (pv > 1.0 && epsilon >= boundary) {
            plan.regime = TestRegime::LowPLargeEps;
            sufficient = std::pow(epsilon, -pv / (2.0 * (pv - 1.0)));
            plan.necessary = sufficient;
        } else {
            plan.regime = TestRegime::LowPSmallEps;
            sufficient = std::pow(k, (4.0 - 3.0 * pv) / (2.0 * pv)) * inv_eps2;
            plan.necessary = sufficient;
        }
    } else {
        const double tiny = plan_constant * n / k;
        const double root = 1.0 / std::sqrt(k);
        if (p.is_infinite()) {
            if (epsilon <= tiny) {
                plan.regime = TestRegime::InfSmall;
                sufficient = n / k * inv_eps2;
            } else {
                plan.regime = TestRegime::InfLarge;
                sufficient = 1.0 / epsilon;
            }
            plan.necessary = sufficient;
        } else if (epsilon <= tiny) {
            plan.regime = TestRegime::MidPTiny;
            sufficient = root * inv_eps2;
            plan.necessary = n / k * inv_eps2;
        } else if (epsilon <= root) {
            plan.regime = TestRegime::MidPModerate;
            sufficient = root * inv_eps2;
            plan.necessary = 1.0 / epsilon;
        } else {
            plan.regime = TestRegime::MidPLarge;
            sufficient = 1.0 / epsilon;
            plan.necessary = sufficient;
        }
    }
    plan.samples = ceil_count(plan_constant * sufficient);
    return plan;
}

double collision_norm_estimate(const SampleBatch &samples) {
    const std::size_t n = samples.count();
    if (n < 2) {
        throw PreconditionError("collision estimate needs at least 2 samples");
    }
    std::vector<PauliIndex> sorted = samples.outcomes;
    std::sort(sorted.begin(), sorted.end());
    double pairs = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sorted[j] == sorted[i]) {
            ++j;
        }
        double c = static_cast<double>(j - i);
        pairs += c * (c - 1) / 2;
        i = j;
    }
    double nd = static_cast<double>(n);
    return pairs / (nd * (nd - 1) / 2);
}

namespace {

std::uint64_t max_count(const SampleBatch &samples) {
    std::vector<PauliIndex> sorted = samples.outcomes;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        best = std::max<std::uint64_t>(best, j - i);
        i = j;
    }
    return best;
}

/// Smallest m with k * Pr[Poisson(N/k) > m] <= level.
std::uint64_t poisson_max_threshold(double samples, double k, double level) {
    const double lambda = samples / k;
    std::uint64_t m = static_cast<std::uint64_t>(std::floor(lambda));
    while (k * detail::poisson_upper_tail(lambda, m) > level) {
        ++m;
    }
    return std::max<std::uint64_t>(m, 1);
}

}  // namespace

double distance_to_uniform(const PauliDistribution &dist, LpOrder p) {
    const double k = static_cast<double>(dist.domain_size());
    const double u = 1.0 / k;
    std::uint64_t support = 0;
    if (p.is_infinite()) {
        double best = 0;
        dist.for_each_nonzero([&](PauliIndex, double w) {
            ++support;
            best = std::max(best, std::abs(w - u));
        });
        if (static_cast<double>(support) < k) {
            best = std::max(best, u);
        }
        return best;
    }
    const double pv = p.value();
    detail::CompensatedSum sum;
    dist.for_each_nonzero([&](PauliIndex, double w) {
        ++support;
        sum.add(std::pow(std::abs(w - u), pv));
    });
    sum.add((k - static_cast<double>(support)) * std::pow(u, pv));
    return std::pow(sum.value(), 1.0 / pv);
}

TestVerdict test_uniformity(
    const SampleBatch &samples, LpOrder p, double epsilon, std::optional<std::uint64_t> planned_samples) {
    if (!(epsilon > 0)) {
        throw InvalidParameterError("epsilon must be positive");
    }
    const double k = static_cast<double>(domain_size(samples.num_qubits));
    const double nd = static_cast<double>(samples.count());
    TestVerdict v;
    v.sample_shortage = planned_samples && samples.count() < *planned_samples;
    if (!p.is_infinite() && p.value() <= 2.0) {
        if (samples.count() < 2) {
            // No pair to compare; never reject.
            v.sample_shortage = true;
            v.statistic = 0;
            v.threshold = 0;
            v.reject = false;
            return v;
        }
        const double pv = p.value();
        const double eps2 = epsilon * std::pow(k, 0.5 - 1.0 / pv);
        v.statistic = collision_norm_estimate(samples) - 1.0 / k;
        v.threshold = 0.5 * eps2 * eps2;
    } else {
        if (samples.count() == 0) {
            v.sample_shortage = true;
            return v;
        }
        // With N/k small the threshold is m = 1: any repeated string is the
        // heavy element that rejects.
        const std::uint64_t m = poisson_max_threshold(nd, k, 1.0 / 6.0);
        v.statistic = static_cast<double>(max_count(samples)) / nd - 1.0 / k;
        v.threshold = static_cast<double>(m) / nd - 1.0 / k;
    }
    v.reject = v.statistic > v.threshold;
    return v;
}

TestRates run_test_roc(
    const PauliDistribution &dist, LpOrder p, double epsilon, std::uint64_t trials, std::uint64_t seed,
    double plan_constant) {
    if (trials < 1) {
        throw InvalidParameterError("trials must be >= 1");
    }
    TestRates rates;
    rates.plan = plan_test_samples(p, dist.num_qubits(), epsilon, plan_constant);
    rates.trials = trials;
    rates.distance_to_uniform = distance_to_uniform(dist, p);
    if (rates.distance_to_uniform <= 1e-12) {
        rates.truth = Hypothesis::Null;
    } else if (rates.distance_to_uniform > epsilon) {
        rates.truth = Hypothesis::Alternative;
    }
    PauliSampler sampler(dist);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = RngStream::derive(seed, {t});
        auto batch = draw_samples(sampler, rates.plan.samples, rng);
        if (test_uniformity(batch, p, epsilon, rates.plan.samples).reject) {
            ++rates.rejections;
        }
    }
    rates.rejection_rate = static_cast<double>(rates.rejections) / static_cast<double>(trials);
    if (rates.truth == Hypothesis::Null) {
        rates.type_one_rate = rates.rejection_rate;
    } else if (rates.truth == Hypothesis::Alternative) {
        rates.type_two_rate = 1.0 - rates.rejection_rate;
    }
    return rates;
}

}  // namespace pauliprobe
