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

#ifndef PAULIPROBE_LEARNER_H
#define PAULIPROBE_LEARNER_H

#include <cstdint>
#include <span>
#include <string_view>

#include "pauliprobe/distribution.h"
#include "pauliprobe/metrics.h"
#include "pauliprobe/quantum_sim.h"

namespace pauliprobe {

enum class LearningRegime { SmallEps, Crossover, LargeEps, PGe2 };
std::string_view to_string(LearningRegime regime);

/// Sample-size plan for the empirical learner.
///
/// `upper` is the sufficient count with its 1/delta prefactor. `lower` is the
/// matching necessary-count formula with every unspecified constant set to 1;
/// it is an order-of-magnitude floor and is not guaranteed to sit below
/// `upper`.
struct SamplePlan {
    LpParams params;
    int num_qubits = 1;
    std::uint64_t upper = 1;
    std::uint64_t lower = 1;
    LearningRegime regime = LearningRegime::PGe2;
};

/// ceil(x) after absorbing relative round-off of 1e-12, so that a closed
/// form that is mathematically an integer (192 evaluated as 192.00000000003)
/// does not round up. Always at least 1.
std::uint64_t ceil_count(double x);

/// Planner. For 1 <= p < 2 the threshold t = 4^(-n(p-1)/p) splits three
/// regimes: eps <= t small, t < eps <= 2t crossover, eps > 2t large. Inside
/// the crossover band both bounds are Theta(4^n) and the planner takes the
/// larger of the two adjacent branches. p >= 2 needs 1/(delta eps^2).
SamplePlan plan_sample_size(LpOrder p, int num_qubits, double epsilon, double delta);

/// P_hat(i) = X_i / N over the observed outcomes. Sparse storage, so the
/// support is exactly the set of observed strings.
PauliDistribution learn_empirical(const SampleBatch &samples);

/// Coordinate-wise median of several empirical estimates, renormalized.
PauliDistribution learn_median_of_estimates(std::span<const SampleBatch> batches);

struct LearningRecord {
    double error = 0;
    bool success = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct LearningTrialOptions {
    /// Number of independent estimates combined by coordinate-wise median.
    /// 1 is the plain empirical learner.
    int boost = 1;
};

/// Draws plan.upper fresh samples (times boost), learns P_hat and scores
/// l_p(P_hat, P) against plan.params.epsilon.
LearningRecord run_learning_trial(
    const PauliDistribution &dist, const SamplePlan &plan, std::uint64_t seed, const LearningTrialOptions &options = {});

}  // namespace pauliprobe

#endif
