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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "pauliprobe/bench.h"
#include "pauliprobe/errors.h"

namespace pauliprobe {
namespace {

const char *kLearnConfig = R"json({
  "task": "learn",
  "channel": "depolarizing(0.3)",
  "grid": {"p": [1, "inf"], "n": [2], "epsilon": [0.3], "samples": [64, 256]},
  "trials": 4,
  "seed": 11
})json";

TEST(BenchConfig, ParsesAndExpands) {
    auto cfg = parse_experiment_config(kLearnConfig);
    EXPECT_EQ(cfg.task, ExperimentTask::Learn);
    EXPECT_EQ(cfg.trials, 4u);
    EXPECT_EQ(cfg.master_seed, 11u);
    ASSERT_EQ(cfg.grid.delta.size(), 1u);
    EXPECT_DOUBLE_EQ(cfg.grid.delta[0], 1.0 / 3.0);
    auto cells = expand_grid(cfg);
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_TRUE(cells[2].p.is_infinite());
    EXPECT_EQ(*cells[1].samples, 256u);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        EXPECT_EQ(cells[i].index, i);
    }
}

TEST(BenchConfig, Rejects) {
    EXPECT_THROW(parse_experiment_config("{"), ValidationError);
    EXPECT_THROW(parse_experiment_config(R"json({"task": "learn", "channel": "identity", "grid": {"n": []}})json"),
                 ValidationError);
    EXPECT_THROW(parse_experiment_config(
                     R"json({"task": "learn", "channel": "identity", "grid": {"n": [2], "epsilon": [0.1]}, "trials": 0})json"),
                 ValidationError);
    EXPECT_THROW(parse_experiment_config(
                     R"json({"task": "learn", "channel": "identity", "grid": {"n": [2], "epsilon": [0.1]}, "colour": 1})json"),
                 ValidationError);
    EXPECT_THROW(parse_experiment_config(R"json({"task": "fly", "channel": "identity"})json"), ValidationError);
    EXPECT_THROW(parse_experiment_config(
                     R"json({"task": "diamond", "channel": "identity", "grid": {"n": [2], "epsilon": [0.1]}})json"),
                 ValidationError);
    EXPECT_THROW(parse_experiment_config(
                     R"json({"task": "learn", "channel": {"n": 1, "weights": {"I": 1}}, "grid": {"n": [2], "epsilon": [0.1]}})json"),
                 ValidationError);
}

TEST(Bench, NonTimingOutputIsReproducibleAcrossWorkerCounts) {
    auto cfg = parse_experiment_config(kLearnConfig);
    auto a = run_experiment(cfg, 1);
    auto b = run_experiment(cfg, 3);
    EXPECT_EQ(report_to_json(a, false), report_to_json(b, false));
    EXPECT_EQ(report_to_csv(a, false), report_to_csv(b, false));
    EXPECT_EQ(a.records.size(), 16u);
    EXPECT_FALSE(a.partial);
    std::uint64_t total = 0;
    for (const auto &r : a.records) {
        total += r.queries;
        EXPECT_EQ(r.queries, r.samples);
    }
    EXPECT_EQ(total, a.total_queries);
}

TEST(Bench, SeedsAreDistinctPerCellAndTrial) {
    auto rep = run_experiment(parse_experiment_config(kLearnConfig), 1);
    std::set<std::uint64_t> seeds;
    for (const auto &r : rep.records) {
        seeds.insert(r.seed);
    }
    EXPECT_EQ(seeds.size(), rep.records.size());
}

TEST(Bench, FailingTrialsMarkReportPartial) {
    // One sample per batch cannot feed the unseen estimator.
    auto cfg = parse_experiment_config(R"json({
      "task": "entropy", "channel": "depolarizing(0.5)",
      "grid": {"n": [2], "epsilon": [0.5], "samples": [1, 50]}, "trials": 2, "seed": 3})json");
    auto rep = run_experiment(cfg, 1);
    EXPECT_TRUE(rep.partial);
    ASSERT_EQ(rep.summaries.size(), 2u);
    EXPECT_EQ(rep.summaries[0].failed, 2u);
    EXPECT_EQ(rep.summaries[1].failed, 0u);
    EXPECT_FALSE(rep.records[0].failure.empty());
}

TEST(Bench, CsvHeaderIsFixed) {
    auto rep = run_experiment(parse_experiment_config(kLearnConfig), 1);
    const std::string head =
        "format_version,task,cell,trial,seed,p,n,epsilon,delta,samples,queries,estimate,truth,error,success,"
        "reject,failure";
    const std::string with = report_to_csv(rep, true);
    const std::string without = report_to_csv(rep, false);
    EXPECT_EQ(with.substr(0, with.find('\n')), head + ",wall_ms");
    EXPECT_EQ(without.substr(0, without.find('\n')), head);
    EXPECT_EQ(std::count(without.begin(), without.end(), '\n'), 1 + static_cast<long>(rep.records.size()));
}

TEST(Scaling, ExactPowerLaw) {
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 8; i <= 16; ++i) {
        x.push_back(std::ldexp(1.0, i));
        y.push_back(3.0 / std::sqrt(x.back()));
    }
    auto fit = fit_power_law(x, y);
    EXPECT_NEAR(fit.slope, -0.5, 1e-9);
    EXPECT_NEAR(std::exp(fit.intercept), 3.0, 1e-9);
    EXPECT_NEAR(fit.r2, 1.0, 1e-12);
    EXPECT_EQ(fit.points, x.size());
    std::vector<double> flat(x.size(), 2.0);
    EXPECT_NEAR(fit_power_law(x, flat).slope, 0.0, 1e-12);
}

TEST(Scaling, DegenerateInputs) {
    std::vector<double> two{1, 2};
    EXPECT_THROW(fit_power_law(two, two), ValidationError);
    std::vector<double> same{2, 2, 2};
    std::vector<double> y{1, 2, 3};
    EXPECT_THROW(fit_power_law(same, y), ValidationError);
    std::vector<double> neg{-1, 2, 3};
    EXPECT_THROW(fit_power_law(y, neg), ValidationError);
    EXPECT_THROW(parse_scaling_field("speed"), ValidationError);
}

}  // namespace
}  // namespace pauliprobe
