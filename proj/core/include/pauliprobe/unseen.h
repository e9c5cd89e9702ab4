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

#ifndef PAULIPROBE_UNSEEN_H
#define PAULIPROBE_UNSEEN_H

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pauliprobe/linear_program.h"
#include "pauliprobe/quantum_sim.h"

namespace pauliprobe {

/// F_j = number of distinct strings seen exactly j times (j >= 1).
struct Fingerprint {
    std::uint64_t sample_count = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t distinct() const;
    /// sum_j j F_j; equals sample_count for any fingerprint built here.
    std::uint64_t weighted_total() const;
};

Fingerprint fingerprint(const SampleBatch &samples);

/// Knobs of the histogram program. Every default is a calibration choice.
struct UnseenConfig {
    /// Ratio between consecutive grid probabilities.
    double grid_ratio = 1.05;
    /// Grid floor is max(1/(k * floor_divisor), 1/N^2).
    double floor_divisor = 50;
    /// Fingerprint entries above T = max(cut_min, N^cut_exponent) are treated
    /// empirically; the program fits entries j <= T.
    double cut_min = 10;
    double cut_exponent = 0.4;
    /// Second stage: among histograms whose fit is within `fit_slack` of the
    /// best fit, take the one with the fewest elements (one sample) or the
    /// smallest distance (two samples).
    double fit_slack = 0.5;
    /// Ratio of the coarser grid used per axis by the two-sample program.
    double joint_grid_ratio = 1.5;
    LpSolverOptions solver{};
};

/// Recovered histogram: h_i elements at probability grid[i], plus the
/// empirical part (probability, multiplicity) for frequently seen strings.
struct HistogramEstimate {
    std::vector<double> grid;
    std::vector<double> masses;
    std::vector<std::pair<double, std::uint64_t>> empirical_part;
    /// Objective value of the fitting stage.
    double fit_objective = 0;
    /// Largest constraint violation of the returned program solution.
    double max_residual = 0;

    double total_probability() const;
    double implied_support() const;
    double entropy_bits() const;
};

/// Linear-programming reconstruction of the histogram behind `fp` for a
/// domain of `domain` strings. With `probability_floor` set, no grid point
/// lies below it (the support promise P(i) >= 1/k). Requires N >= 2; throws
/// EstimationError when the program is infeasible.
HistogramEstimate estimate_unseen(
    const Fingerprint &fp, std::uint64_t domain, const UnseenConfig &config = {},
    std::optional<double> probability_floor = std::nullopt);

/// Entropy in bits from the recovered histogram, clamped to [0, log2 k].
double estimate_entropy_unseen(const SampleBatch &samples, std::uint64_t domain, const UnseenConfig &config = {});

struct SupportEstimate {
    std::uint64_t value = 0;
    /// False when the batch itself refutes the promise (a string observed
    /// once in N >> k draws is fine; the promise cannot be checked from
    /// samples in general, so this is only an advisory flag).
    bool promise_verified = false;
};

/// Support size from the histogram with grid floor 1/k, rounded half-up and
/// clamped to [distinct observed, k].
SupportEstimate estimate_support_unseen(
    const SampleBatch &samples, std::uint64_t domain, const UnseenConfig &config = {});

/// Plug-in entropy of the empirical distribution, for comparison.
double plugin_entropy(const SampleBatch &samples);

/// l_1 distance between the distributions behind two independent batches,
/// via a two-dimensional histogram program over the joint fingerprint
/// F_(a,b). Result in [0, 2]. Both batches need N >= 2.
double estimate_l1_unseen(
    const SampleBatch &first, const SampleBatch &second, std::uint64_t domain, const UnseenConfig &config = {});

/// ceil(gamma / eps^2 * 4^n / n): queries for entropy, support and distance
/// estimation at accuracy eps.
std::uint64_t unseen_sample_size(double gamma, double epsilon, int num_qubits);

/// Default gamma for unseen_sample_size.
inline constexpr double kDefaultUnseenGamma = 2.0;

/// log Pr[Poisson(lambda) = j], stable for lambda up to 1e4 and beyond.
double log_poisson_pmf(double lambda, std::uint64_t j);

}  // namespace pauliprobe

#endif
