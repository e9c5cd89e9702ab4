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

#ifndef PAULIPROBE_BENCH_H
#define PAULIPROBE_BENCH_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pauliprobe/channels.h"
#include "pauliprobe/distribution.h"
#include "pauliprobe/metrics.h"

namespace pauliprobe {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

enum class ExperimentTask { Learn, Test, Entropy, Support, Diamond, VerifyBell };
std::string_view to_string(ExperimentTask task);
ExperimentTask parse_experiment_task(std::string_view text);

/// A channel is either a preset instantiated at each grid n, or a fixed
/// distribution (whose n must then match the grid).
struct ChannelSpec {
    std::optional<ChannelPreset> preset;
    std::optional<PauliDistribution> fixed;
    std::string description;

    PauliDistribution materialize(int num_qubits) const;
};

struct ParameterGrid {
    std::vector<LpOrder> p;
    std::vector<int> n;
    std::vector<double> epsilon;
    std::vector<double> delta;
    /// Overrides the planned sample count when non-empty.
    std::vector<std::uint64_t> samples;
};

struct ExperimentConfig {
    ExperimentTask task = ExperimentTask::Learn;
    std::vector<ChannelSpec> channels;
    ParameterGrid grid;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    double plan_constant = 1.0;
    double gamma = 2.0;
    /// Diamond task only: "plugin" or "unseen".
    std::string diamond_method = "unseen";
    /// Echo of the source document, stored verbatim in the report.
    std::string source;

    /// Throws ValidationError for an empty grid, zero trials, a missing or
    /// extra channel, or a fixed channel whose n is absent from the grid.
    void validate() const;
};

/// Parses the JSON form of ExperimentConfig. Channel entries are either
/// {"preset": "depolarizing(0.3)"}, {"file": "relative/or/absolute.json"}
/// resolved against `base_dir`, or an inline {"n": .., "weights": {..}}.
ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir = ".");

struct CellParams {
    std::size_t index = 0;
    LpOrder p = LpOrder::finite(1.0);
    int n = 1;
    double epsilon = 0.1;
    double delta = 1.0 / 3.0;
    std::optional<std::uint64_t> samples;
};

struct TrialRecord {
    std::size_t cell = 0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    /// Samples drawn per channel.
    std::uint64_t samples = 0;
    /// Channel uses charged to this trial (all channels).
    std::uint64_t queries = 0;
    double estimate = 0;
    double truth = 0;
    double error = 0;
    bool success = false;
    std::optional<bool> reject;
    std::string failure;
    /// Excluded from reproducibility.
    double wall_ms = 0;
};

struct CellSummary {
    std::size_t cell = 0;
    std::uint64_t completed = 0;
    std::uint64_t failed = 0;
    double median_error = 0;
    double q1_error = 0;
    double q3_error = 0;
    double mean_error = 0;
    double success_rate = 0;
    std::optional<double> rejection_rate;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<CellParams> cells;
    std::vector<TrialRecord> records;
    std::vector<CellSummary> summaries;
    std::uint64_t total_queries = 0;
    bool partial = false;
};

/// The cartesian product of the grid in (p, n, eps, delta, samples) order.
std::vector<CellParams> expand_grid(const ExperimentConfig &config);

/// Runs every (cell, trial) with seed derive_seed(master, {cell, trial}).
/// Jobs run on up to `workers` threads; records are stored by index so the
/// report does not depend on scheduling. A throwing trial is recorded with
/// its message and the run continues.
ExperimentReport run_experiment(const ExperimentConfig &config, unsigned workers = 1);

std::string report_to_json(const ExperimentReport &report, bool include_timing = true);
/// One row per record under a fixed, versioned header.
std::string report_to_csv(const ExperimentReport &report, bool include_timing = true);

struct ScalingFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    std::size_t points = 0;
};

enum class ScalingField { Samples, Qubits, Epsilon, Domain, UnseenScale, MedianError, MeanError, SuccessRate };
ScalingField parse_scaling_field(std::string_view text);

/// Least squares of log y on log x. Needs >= 3 points with x, y > 0 and
/// x not all equal; throws ValidationError otherwise.
ScalingFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// fit_power_law over the per-cell values of two fields of a report.
ScalingFit fit_scaling(const ExperimentReport &report, ScalingField x, ScalingField y);

}  // namespace pauliprobe

#endif
