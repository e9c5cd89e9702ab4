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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "pauliprobe/channels.h"
#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/metrics.h"

namespace pauliprobe {
namespace {

TEST(Planner, L1RowIsExactArithmetic) {
    // 4^n / (delta eps^2) with n=2, eps=1/2, delta=1/3.
    auto plan = plan_sample_size(LpOrder::finite(1), 2, 0.5, 1.0 / 3.0);
    EXPECT_EQ(plan.upper, 192u);
    EXPECT_EQ(plan.lower, 64u);
    EXPECT_EQ(plan.regime, LearningRegime::SmallEps);
    // A four-digit decimal for delta lands just above the integer.
    EXPECT_EQ(plan_sample_size(LpOrder::finite(1), 2, 0.5, 0.3333).upper, 193u);
}

TEST(Planner, DimensionFreeRowForPAtLeastTwo) {
    for (int n : {1, 3, 8}) {
        auto p2 = plan_sample_size(LpOrder::finite(2), n, 0.1, 1.0 / 3.0);
        auto pinf = plan_sample_size(LpOrder::infinity(), n, 0.1, 1.0 / 3.0);
        EXPECT_EQ(p2.upper, 300u);
        EXPECT_EQ(p2.lower, 100u);
        EXPECT_EQ(pinf.upper, 300u);
        EXPECT_EQ(p2.regime, LearningRegime::PGe2);
    }
}

TEST(Planner, IntermediateOrderRegimes) {
    const double p = 1.5;
    const int n = 2;
    const double t = std::pow(4.0, -n * (p - 1) / p);
    // Small: 4^(n(2-p)/p) / (delta eps^2).
    auto small = plan_sample_size(LpOrder::finite(p), n, 0.1, 0.5);
    EXPECT_EQ(small.regime, LearningRegime::SmallEps);
    EXPECT_EQ(small.upper, static_cast<std::uint64_t>(std::ceil(std::pow(4.0, n * (2 - p) / p) / (0.5 * 0.01))));
    // Large: (2/eps)^(p/(p-1)) / (4 delta).
    const double eps_large = 2.5 * t;
    ASSERT_LT(eps_large, 1.0);
    auto large = plan_sample_size(LpOrder::finite(p), n, eps_large, 0.5);
    EXPECT_EQ(large.regime, LearningRegime::LargeEps);
    EXPECT_EQ(large.upper, static_cast<std::uint64_t>(std::ceil(0.25 * std::pow(2 / eps_large, p / (p - 1)) / 0.5)));
    auto cross = plan_sample_size(LpOrder::finite(p), n, 1.5 * t, 0.5);
    EXPECT_EQ(cross.regime, LearningRegime::Crossover);
    // At the boundary the small-eps row applies.
    EXPECT_EQ(plan_sample_size(LpOrder::finite(p), n, t, 0.5).regime, LearningRegime::SmallEps);
}

TEST(Planner, L1ScalesAsFourToTheN) {
    for (int n = 1; n < 8; ++n) {
        auto a = plan_sample_size(LpOrder::finite(1), n, 0.5, 0.5);
        auto b = plan_sample_size(LpOrder::finite(1), n + 1, 0.5, 0.5);
        EXPECT_EQ(b.upper, 4 * a.upper);
    }
}

TEST(Planner, RejectsBadParameters) {
    EXPECT_THROW(plan_sample_size(LpOrder::finite(1), 2, 0.0, 0.3), InvalidParameterError);
    EXPECT_THROW(plan_sample_size(LpOrder::finite(1), 2, 1.0, 0.3), InvalidParameterError);
    EXPECT_THROW(plan_sample_size(LpOrder::finite(1), 2, 0.5, 0.0), InvalidParameterError);
    EXPECT_THROW(plan_sample_size(LpOrder::finite(1), 0, 0.5, 0.3), InvalidParameterError);
    EXPECT_THROW(plan_sample_size(LpOrder::finite(1), 31, 1e-9, 1e-9), InvalidParameterError);
}

TEST(CeilCount, AbsorbsRoundOff) {
    EXPECT_EQ(ceil_count(192.0), 192u);
    EXPECT_EQ(ceil_count(192.0 * (1 + 1e-15)), 192u);
    EXPECT_EQ(ceil_count(192.02), 193u);
    EXPECT_EQ(ceil_count(0.0), 1u);
    EXPECT_THROW(ceil_count(std::numeric_limits<double>::infinity()), InvalidParameterError);
}

TEST(Learner, EmpiricalFrequencies) {
    SampleBatch b;
    b.num_qubits = 1;
    b.outcomes = {3, 0, 3, 3};
    auto d = learn_empirical(b);
    EXPECT_DOUBLE_EQ(d.weight(3), 0.75);
    EXPECT_DOUBLE_EQ(d.weight(0), 0.25);
    EXPECT_EQ(support_size(d), 2u);
    b.outcomes.clear();
    EXPECT_THROW(learn_empirical(b), PreconditionError);
}

TEST(Learner, MedianOfEstimates) {
    SampleBatch a{1, {0, 0, 0, 1}};
    SampleBatch b{1, {0, 0, 1, 1}};
    SampleBatch c{1, {0, 2, 2, 2}};
    std::vector<SampleBatch> batches{a, b, c};
    auto m = learn_median_of_estimates(batches);
    // Medians: I 0.5, X 0.25, Y 0 -> renormalized 2/3, 1/3.
    EXPECT_NEAR(m.weight(0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(m.weight(1), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(m.weight(2), 0.0);
    SampleBatch other{2, {0}};
    std::vector<SampleBatch> mixed{a, other};
    EXPECT_THROW(learn_median_of_estimates(mixed), ShapeError);
}

TEST(Learner, TrialIsDeterministicAndCountsSamples) {
    auto p = make_channel(DepolarizingChannel{0.3}, 2);
    auto plan = plan_sample_size(LpOrder::finite(1), 2, 0.3, 1.0 / 3.0);
    auto r1 = run_learning_trial(p, plan, 5);
    auto r2 = run_learning_trial(p, plan, 5);
    EXPECT_EQ(r1.error, r2.error);
    EXPECT_EQ(r1.samples, plan.upper);
    LearningTrialOptions boost;
    boost.boost = 3;
    EXPECT_EQ(run_learning_trial(p, plan, 5, boost).samples, 3 * plan.upper);
    EXPECT_THROW(run_learning_trial(make_channel(IdentityChannel{}, 3), plan, 5), ShapeError);
}

TEST(Learner, IdentityChannelIsLearnedExactly) {
    auto p = PauliDistribution::point_mass(3, 0);
    auto plan = plan_sample_size(LpOrder::finite(1), 3, 0.5, 0.5);
    auto r = run_learning_trial(p, plan, 1);
    EXPECT_EQ(r.error, 0.0);
    EXPECT_TRUE(r.success);
}

}  // namespace
}  // namespace pauliprobe
