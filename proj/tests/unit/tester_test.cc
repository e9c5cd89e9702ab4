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
#include <vector>

#include "pauliprobe/channels.h"
#include "pauliprobe/errors.h"
#include "pauliprobe/metrics.h"
#include "pauliprobe/tester.h"

namespace pauliprobe {
namespace {

TEST(TestPlanner, RowsAtTwoQubits) {
    // k = 16, eps = 1/2.
    auto p1 = plan_test_samples(LpOrder::finite(1), 2, 0.5);
    EXPECT_EQ(p1.regime, TestRegime::LowPSmallEps);
    EXPECT_EQ(p1.samples, 16u);  // k^(1/2) / eps^2
    auto p2 = plan_test_samples(LpOrder::finite(2), 2, 0.5);
    EXPECT_EQ(p2.regime, TestRegime::LowPLargeEps);
    EXPECT_EQ(p2.samples, 2u);  // eps^-1
    auto pinf = plan_test_samples(LpOrder::infinity(), 2, 0.5);
    EXPECT_EQ(pinf.regime, TestRegime::InfLarge);
    EXPECT_EQ(pinf.samples, 2u);
    auto pinf_small = plan_test_samples(LpOrder::infinity(), 2, 0.1);
    EXPECT_EQ(pinf_small.regime, TestRegime::InfSmall);
    EXPECT_EQ(pinf_small.samples, 13u);  // n / (k eps^2) = 12.5
    EXPECT_EQ(plan_test_samples(LpOrder::finite(1), 2, 0.5, 4.0).samples, 64u);
}

TEST(TestPlanner, IntermediateOrders) {
    // p = 3, n = 4: k = 256, c n / k = 1/64, k^(-1/2) = 1/16.
    EXPECT_EQ(plan_test_samples(LpOrder::finite(3), 4, 0.01).regime, TestRegime::MidPTiny);
    auto mod = plan_test_samples(LpOrder::finite(3), 4, 0.05);
    EXPECT_EQ(mod.regime, TestRegime::MidPModerate);
    EXPECT_EQ(mod.samples, 25u);  // 1 / (2^n eps^2)
    EXPECT_EQ(plan_test_samples(LpOrder::finite(3), 4, 0.5).regime, TestRegime::MidPLarge);
    EXPECT_EQ(plan_test_samples(LpOrder::finite(3), 4, 2.0).samples, 1u);
}

TEST(TestPlanner, Rejects) {
    EXPECT_THROW(plan_test_samples(LpOrder::finite(1), 2, 1.0), InvalidParameterError);
    EXPECT_THROW(plan_test_samples(LpOrder::infinity(), 2, 2.5), InvalidParameterError);
    EXPECT_THROW(plan_test_samples(LpOrder::finite(1), 2, 0.5, 0.0), InvalidParameterError);
}

// Variance of the pair-collision U-statistic with s2 = sum p^2, s3 = sum p^3.
double collision_variance(double s2, double s3, double n) {
    return 2.0 / (n * (n - 1)) * (2 * (n - 2) * (s3 - s2 * s2) + s2 - s2 * s2);
}

TEST(Collision, UnbiasedWithPredictedVariance) {
    auto p = make_channel(SparseRandomChannel{10, 3}, 2);
    double s2 = 0;
    double s3 = 0;
    p.for_each_nonzero([&](PauliIndex, double w) {
        s2 += w * w;
        s3 += w * w * w;
    });
    const int n = 40;
    const int reps = 4000;
    double mean = 0;
    double m2 = 0;
    for (int r = 0; r < reps; ++r) {
        auto b = draw_samples(p, n, static_cast<std::uint64_t>(r));
        const double x = collision_norm_estimate(b);
        mean += x;
        m2 += x * x;
    }
    mean /= reps;
    const double var = m2 / reps - mean * mean;
    const double expect_var = collision_variance(s2, s3, n);
    EXPECT_NEAR(mean, s2, 5 * std::sqrt(expect_var / reps));
    EXPECT_NEAR(var / expect_var, 1.0, 0.1);
}

TEST(Collision, SmallBatches) {
    SampleBatch b{1, {2, 2}};
    EXPECT_EQ(collision_norm_estimate(b), 1.0);
    SampleBatch c{1, {0, 1, 2}};
    EXPECT_EQ(collision_norm_estimate(c), 0.0);
}

TEST(Uniformity, DistanceToUniformMatchesGeneralMetric) {
    auto p = make_channel(DepolarizingChannel{0.6}, 3);
    for (auto order : {LpOrder::finite(1), LpOrder::finite(2), LpOrder::finite(3), LpOrder::infinity()}) {
        EXPECT_NEAR(distance_to_uniform(p, order), lp_distance(p, PauliDistribution::uniform(3), order), 1e-14);
    }
    EXPECT_NEAR(distance_to_uniform(PauliDistribution::point_mass(2, 0), LpOrder::finite(1)), 2 - 2.0 / 16, 1e-15);
}

TEST(Uniformity, RepeatedStringRejectsUnderMaxStatistic) {
    // Two draws out of k = 16 with N/k small: any repeat rejects.
    SampleBatch rep{2, {5, 5}};
    SampleBatch distinct{2, {5, 6}};
    EXPECT_TRUE(test_uniformity(rep, LpOrder::infinity(), 0.5).reject);
    EXPECT_FALSE(test_uniformity(distinct, LpOrder::infinity(), 0.5).reject);
}

TEST(Uniformity, ShortageIsFlagged) {
    SampleBatch one{2, {5}};
    auto v = test_uniformity(one, LpOrder::finite(1), 0.5, 16);
    EXPECT_TRUE(v.sample_shortage);
    EXPECT_FALSE(v.reject);
}

TEST(Uniformity, RatesAreDeterministicAndClassifyTruth) {
    auto u = PauliDistribution::uniform(2);
    auto id = PauliDistribution::point_mass(2, 0);
    auto a = run_test_roc(u, LpOrder::finite(2), 0.5, 50, 3, kCalibratedTestPlanConstant);
    auto b = run_test_roc(u, LpOrder::finite(2), 0.5, 50, 3, kCalibratedTestPlanConstant);
    EXPECT_EQ(a.rejections, b.rejections);
    EXPECT_EQ(a.truth, Hypothesis::Null);
    ASSERT_TRUE(a.type_one_rate.has_value());
    EXPECT_FALSE(a.type_two_rate.has_value());
    auto c = run_test_roc(id, LpOrder::finite(2), 0.5, 50, 3, kCalibratedTestPlanConstant);
    EXPECT_EQ(c.truth, Hypothesis::Alternative);
    EXPECT_EQ(*c.type_two_rate, 0.0);
    auto mid = run_test_roc(make_channel(DepolarizingChannel{0.9}, 2), LpOrder::finite(1), 0.5, 5, 3);
    EXPECT_EQ(mid.truth, Hypothesis::Neither);
}

}  // namespace
}  // namespace pauliprobe
