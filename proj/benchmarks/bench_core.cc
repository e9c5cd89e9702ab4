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


#include <benchmark/benchmark.h>

#include <cstdint>

#include "pauliprobe/channels.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/linear_program.h"
#include "pauliprobe/quantum_sim.h"
#include "pauliprobe/rng.h"
#include "pauliprobe/unseen.h"

namespace pauliprobe {
namespace {

// Dense random LP with a known feasible point.
LinearProgram random_lp(std::size_t vars, std::size_t rows) {
    RngStream rng(17);
    LinearProgram lp(vars);
    for (std::size_t j = 0; j < vars; ++j) {
        lp.set_objective(j, rng.uniform01() + 0.1);
    }
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<double> a(vars);
        double s = 0;
        for (auto &v : a) {
            v = rng.uniform01();
            s += v;
        }
        lp.add_row(a, RowSense::GreaterEqual, 0.5 * s);
    }
    return lp;
}

void BM_LinearProgram(benchmark::State &state) {
    auto lp = random_lp(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0) / 2));
    LpSolverOptions opt;
    opt.method = state.range(1) ? LpMethod::Simplex : LpMethod::InteriorPoint;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear_program(lp, opt));
    }
}
BENCHMARK(BM_LinearProgram)->ArgsProduct({{50, 200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_UnseenEntropy(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto batch = draw_samples(PauliDistribution::uniform(n), static_cast<std::size_t>(state.range(1)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_entropy_unseen(batch, domain_size(n)));
    }
}
BENCHMARK(BM_UnseenEntropy)->Args({4, 100})->Args({6, 985})->Unit(benchmark::kMillisecond);

void BM_Sampler(benchmark::State &state) {
    auto dist = make_channel(DepolarizingChannel{0.3}, static_cast<int>(state.range(0)));
    PauliSampler sampler(dist);
    RngStream rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(draw_samples(sampler, 10000, rng));
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Sampler)->Arg(2)->Arg(6);

void BM_BellDistribution(benchmark::State &state) {
    auto dist = make_channel(DepolarizingChannel{0.3}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bell_outcome_distribution(dist));
    }
}
BENCHMARK(BM_BellDistribution)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_Planner(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan_sample_size(LpOrder::finite(1), 6, 0.1, 1.0 / 3.0));
        benchmark::DoNotOptimize(plan_sample_size(LpOrder::infinity(), 6, 0.1, 1.0 / 3.0));
    }
}
BENCHMARK(BM_Planner);

}  // namespace
}  // namespace pauliprobe

BENCHMARK_MAIN();
