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
#include "pauliprobe/diamond.h"
#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/rng.h"

namespace pauliprobe {
namespace {

PauliDistribution random_channel(int n, RngStream &rng) {
    std::vector<double> w(domain_size(n));
    double s = 0;
    for (auto &x : w) {
        x = rng.uniform01() < 0.4 ? 0.0 : rng.exponential();
        s += x;
    }
    if (s == 0) {
        w[0] = s = 1;
    }
    for (auto &x : w) {
        x /= s;
    }
    return PauliDistribution::dense(n, w);
}

// Total variation as the largest probability difference over events,
// found by summing the positive part.
double oracle_tv(const PauliDistribution &a, const PauliDistribution &b) {
    auto va = a.to_dense_vector();
    auto vb = b.to_dense_vector();
    double event_a = 0;
    double event_b = 0;
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] > vb[i]) {
            event_a += va[i];
            event_b += vb[i];
        }
    }
    return event_a - event_b;
}

TEST(Diamond, ExactIsTwiceTotalVariation) {
    RngStream rng(31);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 3;
        auto a = random_channel(n, rng);
        auto b = random_channel(n, rng);
        EXPECT_NEAR(diamond_exact(a, b), 2 * oracle_tv(a, b), 1e-12);
    }
}

TEST(Diamond, ExactIsAMetric) {
    RngStream rng(32);
    for (int i = 0; i < 30; ++i) {
        auto a = random_channel(2, rng);
        auto b = random_channel(2, rng);
        auto c = random_channel(2, rng);
        EXPECT_NEAR(diamond_exact(a, a), 0.0, 1e-12);
        EXPECT_NEAR(diamond_exact(a, b), diamond_exact(b, a), 1e-12);
        EXPECT_LE(diamond_exact(a, c), diamond_exact(a, b) + diamond_exact(b, c) + 1e-12);
        EXPECT_GT(diamond_exact(a, b), 0.0);
    }
}

TEST(Diamond, ExactExamples) {
    EXPECT_NEAR(diamond_exact(make_channel(IdentityChannel{}, 2), make_channel(DepolarizingChannel{1.0}, 2)), 1.875,
                1e-15);
    EXPECT_NEAR(diamond_exact(make_channel(BitFlipChannel{0.25}, 1), make_channel(IdentityChannel{}, 1)), 0.5, 1e-15);
    EXPECT_THROW(diamond_exact(PauliDistribution::uniform(1), PauliDistribution::uniform(2)), ShapeError);
}

TEST(Diamond, PluginHonorsTriangleBound) {
    auto id = make_channel(IdentityChannel{}, 2);
    auto dep = make_channel(DepolarizingChannel{1.0}, 2);
    const double truth = diamond_exact(id, dep);
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto est = diamond_estimate_plugin(id, dep, 0.2, 1.0 / 3.0, seed);
        EXPECT_EQ(est.method, DiamondMethod::Plugin);
        EXPECT_EQ(est.queries_per_channel, plan_sample_size(LpOrder::finite(1), 2, 0.2, 1.0 / 6.0).upper);
        EXPECT_DOUBLE_EQ(est.epsilon_target, 0.4);
        if (est.learning_error_first < 0.2 && est.learning_error_second < 0.2) {
            EXPECT_LT(std::abs(est.value - truth), 0.4);
        }
        within += std::abs(est.value - truth) < 0.4;
    }
    EXPECT_GE(within, 67);
}

TEST(Diamond, PluginIsExactOnIdenticalIdentity) {
    auto id = make_channel(IdentityChannel{}, 2);
    auto est = diamond_estimate_plugin(id, id, 0.3, 0.3, 4);
    EXPECT_EQ(est.value, 0.0);
    auto again = diamond_estimate_plugin(id, make_channel(DepolarizingChannel{0.5}, 2), 0.3, 0.3, 4);
    auto twice = diamond_estimate_plugin(id, make_channel(DepolarizingChannel{0.5}, 2), 0.3, 0.3, 4);
    EXPECT_EQ(again.value, twice.value);
}

TEST(Diamond, UnseenUsesFewerQueriesThanPlugin) {
    auto id = make_channel(IdentityChannel{}, 3);
    auto est = diamond_estimate_unseen(id, id, 0.5, 2.0, 1);
    EXPECT_EQ(est.method, DiamondMethod::Unseen);
    EXPECT_EQ(est.queries_per_channel, unseen_sample_size(2.0, 0.5, 3));
    EXPECT_DOUBLE_EQ(est.epsilon_target, 0.5);
    EXPECT_NEAR(est.value, 0.0, 1e-9);
    EXPECT_THROW(diamond_estimate_unseen(id, id, 1.5, 2.0, 1), InvalidParameterError);
}

TEST(Diamond, MethodNames) {
    for (auto m : {DiamondMethod::Exact, DiamondMethod::Plugin, DiamondMethod::Unseen}) {
        EXPECT_EQ(parse_diamond_method(to_string(m)), m);
    }
    EXPECT_THROW(parse_diamond_method("sdp"), ValidationError);
}

}  // namespace
}  // namespace pauliprobe
