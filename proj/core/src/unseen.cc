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

#include "pauliprobe/unseen.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "poisson.h"
#include "summation.h"

namespace pauliprobe {

std::uint64_t Fingerprint::distinct() const {
    std::uint64_t total = 0;
    for (const auto &[j, f] : counts) {
        total += f;
    }
    return total;
}

std::uint64_t Fingerprint::weighted_total() const {
    std::uint64_t total = 0;
    for (const auto &[j, f] : counts) {
        total += j * f;
    }
    return total;
}

namespace {

std::vector<std::pair<PauliIndex, std::uint64_t>> count_outcomes(const SampleBatch &samples) {
    std::vector<PauliIndex> sorted = samples.outcomes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<PauliIndex, std::uint64_t>> out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        out.emplace_back(sorted[i], j - i);
        i = j;
    }
    return out;
}

double cut_count(const UnseenConfig &cfg, double n) {
    return std::max(cfg.cut_min, std::pow(n, cfg.cut_exponent));
}

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
    std::vector<double> grid;
    if (!(ratio > 1)) {
        throw InvalidParameterError("grid ratio must exceed 1");
    }
    if (lo >= hi) {
        grid.push_back(hi);
        return grid;
    }
    for (double x = lo; x < hi * (1 - 1e-12); x *= ratio) {
        grid.push_back(x);
    }
    grid.push_back(hi);
    return grid;
}

double poisson_pmf(double lambda, std::uint64_t j) {
    return std::exp(detail::log_poisson(lambda, j));
}

void require_ok(const LpSolution &sol, std::string_view what) {
    if (sol.status != LpStatus::Optimal) {
        throw EstimationError(std::string(what) + ": linear program " + std::string(to_string(sol.status)),
                              std::string(to_string(sol.status)));
    }
}

enum class SecondStage { MinSupport, MaxSupport };

HistogramEstimate solve_histogram(
    const Fingerprint &fp, std::uint64_t domain, const UnseenConfig &cfg, std::optional<double> floor,
    SecondStage goal) {
    const std::uint64_t N = fp.sample_count;
    if (N < 2) {
        throw PreconditionError("unseen estimation needs at least 2 samples");
    }
    if (fp.weighted_total() != N) {
        throw ValidationError("fingerprint does not sum to its sample count");
    }
    if (domain < 1) {
        throw InvalidParameterError("domain size must be >= 1");
    }
    const double n = static_cast<double>(N);
    const double k = static_cast<double>(domain);
    const double cut = cut_count(cfg, n);

    HistogramEstimate est;
    double empirical_mass = 0;
    std::uint64_t empirical_elements = 0;
    std::uint64_t fit_top = 0;
    for (const auto &[j, f] : fp.counts) {
        if (static_cast<double>(j) > cut) {
            double p = static_cast<double>(j) / n;
            est.empirical_part.emplace_back(p, f);
            empirical_mass += p * static_cast<double>(f);
            empirical_elements += f;
        }
    }
    const double lp_mass = 1.0 - empirical_mass;
    if (lp_mass <= 1e-12) {
        return est;
    }
    fit_top = static_cast<std::uint64_t>(std::floor(cut));

    const double x_cut = cut / n;
    double x_min = floor ? *floor : std::max(1.0 / (k * cfg.floor_divisor), 1.0 / (n * n));
    x_min = std::min(x_min, x_cut);
    est.grid = geometric_grid(x_min, x_cut, cfg.grid_ratio);
    const std::size_t m = est.grid.size();
    const std::size_t J = fit_top;
    // Columns: y_i = h_i x_i (mass at grid point i), then per fitted index j
    // a positive and a negative slack.
    const std::size_t nv = m + 2 * J;
    LinearProgram lp(nv);
    std::vector<double> weights(J);
    for (std::size_t jj = 0; jj < J; ++jj) {
        const std::uint64_t j = jj + 1;
        auto it = fp.counts.find(j);
        const double F = it == fp.counts.end() ? 0.0 : static_cast<double>(it->second);
        weights[jj] = 1.0 / std::sqrt(1.0 + F);
        std::vector<double> row(nv, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            row[i] = poisson_pmf(n * est.grid[i], j) / est.grid[i];
        }
        row[m + 2 * jj] = -1.0;
        row[m + 2 * jj + 1] = 1.0;
        lp.add_row(std::move(row), RowSense::Equal, F);
    }
    {
        std::vector<double> row(nv, 0.0);
        std::fill(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m), 1.0);
        lp.add_row(std::move(row), RowSense::Equal, lp_mass);
    }
    // Support cap, scaled by x_min so coefficients stay within [0, 1].
    std::vector<double> support_row(nv, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        support_row[i] = x_min / est.grid[i];
    }
    lp.add_row(support_row, RowSense::LessEqual,
               std::max(0.0, k - static_cast<double>(empirical_elements)) * x_min);

    std::vector<double> fit_row(nv, 0.0);
    for (std::size_t jj = 0; jj < J; ++jj) {
        fit_row[m + 2 * jj] = weights[jj];
        fit_row[m + 2 * jj + 1] = weights[jj];
        lp.set_objective(m + 2 * jj, weights[jj]);
        lp.set_objective(m + 2 * jj + 1, weights[jj]);
    }
    LpSolution first = solve_linear_program(lp, cfg.solver);
    require_ok(first, "histogram fit");
    est.fit_objective = first.objective;

    lp.add_row(fit_row, RowSense::LessEqual, first.objective + cfg.fit_slack);
    const double sign = goal == SecondStage::MinSupport ? 1.0 : -1.0;
    for (std::size_t i = 0; i < nv; ++i) {
        lp.set_objective(i, i < m ? sign * support_row[i] : 0.0);
    }
    LpSolution second = solve_linear_program(lp, cfg.solver);
    const LpSolution &chosen = second.status == LpStatus::Optimal ? second : first;
    est.max_residual = chosen.max_residual;
    est.masses.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        est.masses[i] = chosen.x[i] / est.grid[i];
    }
    return est;
}

}  // namespace

Fingerprint fingerprint(const SampleBatch &samples) {
    Fingerprint fp;
    fp.sample_count = samples.count();
    for (const auto &[index, c] : count_outcomes(samples)) {
        ++fp.counts[c];
    }
    return fp;
}

double log_poisson_pmf(double lambda, std::uint64_t j) {
    if (!(lambda >= 0) || !std::isfinite(lambda)) {
        throw InvalidParameterError("Poisson mean must be finite and >= 0");
    }
    return detail::log_poisson(lambda, j);
}

double HistogramEstimate::total_probability() const {
    detail::CompensatedSum s;
    for (std::size_t i = 0; i < grid.size() && i < masses.size(); ++i) {
        s.add(grid[i] * masses[i]);
    }
    for (const auto &[p, mult] : empirical_part) {
        s.add(p * static_cast<double>(mult));
    }
    return s.value();
}

double HistogramEstimate::implied_support() const {
    detail::CompensatedSum s;
    for (double h : masses) {
        s.add(h);
    }
    for (const auto &[p, mult] : empirical_part) {
        s.add(static_cast<double>(mult));
    }
    return s.value();
}

double HistogramEstimate::entropy_bits() const {
    detail::CompensatedSum s;
    for (std::size_t i = 0; i < grid.size() && i < masses.size(); ++i) {
        if (masses[i] > 0) {
            s.add(-masses[i] * grid[i] * std::log2(grid[i]));
        }
    }
    for (const auto &[p, mult] : empirical_part) {
        if (p > 0 && p < 1) {
            s.add(-static_cast<double>(mult) * p * std::log2(p));
        }
    }
    return s.value();
}

HistogramEstimate estimate_unseen(
    const Fingerprint &fp, std::uint64_t domain, const UnseenConfig &config, std::optional<double> probability_floor) {
    return solve_histogram(fp, domain, config, probability_floor, SecondStage::MinSupport);
}

double estimate_entropy_unseen(const SampleBatch &samples, std::uint64_t domain, const UnseenConfig &config) {
    HistogramEstimate h = estimate_unseen(fingerprint(samples), domain, config);
    return std::clamp(h.entropy_bits(), 0.0, std::log2(static_cast<double>(domain)));
}

SupportEstimate estimate_support_unseen(const SampleBatch &samples, std::uint64_t domain, const UnseenConfig &config) {
    Fingerprint fp = fingerprint(samples);
    const double floor = 1.0 / static_cast<double>(domain);
    // The support is not pinned by the fit; report the centre of the range of
    // supports consistent with it.
    HistogramEstimate low = solve_histogram(fp, domain, config, floor, SecondStage::MinSupport);
    HistogramEstimate high = solve_histogram(fp, domain, config, floor, SecondStage::MaxSupport);
    const double mid = 0.5 * (low.implied_support() + high.implied_support());
    double rounded = std::floor(mid + 0.5);
    rounded = std::clamp(rounded, static_cast<double>(fp.distinct()), static_cast<double>(domain));
    SupportEstimate out;
    out.value = static_cast<std::uint64_t>(rounded);
    out.promise_verified = false;
    return out;
}

double plugin_entropy(const SampleBatch &samples) {
    if (samples.count() == 0) {
        throw PreconditionError("plug-in entropy needs at least 1 sample");
    }
    const double n = static_cast<double>(samples.count());
    detail::CompensatedSum s;
    for (const auto &[index, c] : count_outcomes(samples)) {
        double p = static_cast<double>(c) / n;
        if (p < 1) {
            s.add(-p * std::log2(p));
        }
    }
    return s.value();
}

double estimate_l1_unseen(
    const SampleBatch &first, const SampleBatch &second, std::uint64_t domain, const UnseenConfig &cfg) {
    if (first.count() < 2 || second.count() < 2) {
        throw PreconditionError("distance estimation needs at least 2 samples per batch");
    }
    if (first.num_qubits != second.num_qubits) {
        throw ShapeError("batches act on different numbers of qubits");
    }
    const double n1 = static_cast<double>(first.count());
    const double n2 = static_cast<double>(second.count());
    const double k = static_cast<double>(domain);
    const double cut = cut_count(cfg, std::min(n1, n2));

    std::unordered_map<PauliIndex, std::pair<std::uint64_t, std::uint64_t>> joint;
    for (const auto &[index, c] : count_outcomes(first)) {
        joint[index].first = c;
    }
    for (const auto &[index, c] : count_outcomes(second)) {
        joint[index].second = c;
    }
    detail::CompensatedSum empirical_distance;
    double mass1 = 1.0;
    double mass2 = 1.0;
    std::uint64_t empirical_elements = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> fp;
    std::uint64_t top1 = 0;
    std::uint64_t top2 = 0;
    for (const auto &[index, ab] : joint) {
        const auto [a, b] = ab;
        if (static_cast<double>(a) > cut || static_cast<double>(b) > cut) {
            double p1 = static_cast<double>(a) / n1;
            double p2 = static_cast<double>(b) / n2;
            empirical_distance.add(std::abs(p1 - p2));
            mass1 -= p1;
            mass2 -= p2;
            ++empirical_elements;
        } else {
            fp[{a, b}] += 1.0;
            top1 = std::max(top1, a);
            top2 = std::max(top2, b);
        }
    }
    mass1 = std::max(0.0, mass1);
    mass2 = std::max(0.0, mass2);
    double lp_distance = 0;
    if (mass1 > 1e-12 || mass2 > 1e-12) {
        const std::uint64_t cut_floor = static_cast<std::uint64_t>(std::floor(cut));
        const std::uint64_t A = std::min(cut_floor, top1 + 1);
        const std::uint64_t B = std::min(cut_floor, top2 + 1);
        const double x_min =
            std::max(1.0 / (k * cfg.floor_divisor), 1.0 / (std::min(n1, n2) * std::min(n1, n2)));
        std::vector<double> ax = {0.0};
        std::vector<double> ay = {0.0};
        if (mass1 > 1e-12) {
            auto g = geometric_grid(std::min(x_min, cut / n1), cut / n1, cfg.joint_grid_ratio);
            ax.insert(ax.end(), g.begin(), g.end());
        }
        if (mass2 > 1e-12) {
            auto g = geometric_grid(std::min(x_min, cut / n2), cut / n2, cfg.joint_grid_ratio);
            ay.insert(ay.end(), g.begin(), g.end());
        }
        struct Cell {
            double x;
            double y;
            double scale;
        };
        std::vector<Cell> cells;
        for (double x : ax) {
            for (double y : ay) {
                if (x == 0 && y == 0) {
                    continue;
                }
                cells.push_back({x, y, std::max(x, y)});
            }
        }
        std::vector<std::pair<std::uint64_t, std::uint64_t>> fitted;
        for (std::uint64_t a = 0; a <= A; ++a) {
            for (std::uint64_t b = 0; b <= B; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                fitted.emplace_back(a, b);
            }
        }
        const std::size_t m = cells.size();
        const std::size_t R = fitted.size();
        const std::size_t nv = m + 2 * R;
        // Poisson tables per axis.
        auto table = [&](const std::vector<double> &axis, double n, std::uint64_t top) {
            std::vector<std::vector<double>> t(axis.size(), std::vector<double>(top + 1));
            for (std::size_t i = 0; i < axis.size(); ++i) {
                for (std::uint64_t j = 0; j <= top; ++j) {
                    t[i][j] = poisson_pmf(n * axis[i], j);
                }
            }
            return t;
        };
        auto px = table(ax, n1, A);
        auto py = table(ay, n2, B);
        LinearProgram lp(nv);
        std::vector<double> fit_row(nv, 0.0);
        for (std::size_t r = 0; r < R; ++r) {
            const auto [a, b] = fitted[r];
            auto it = fp.find({a, b});
            const double F = it == fp.end() ? 0.0 : it->second;
            std::vector<double> row(nv, 0.0);
            std::size_t c = 0;
            for (std::size_t i = 0; i < ax.size(); ++i) {
                for (std::size_t j = 0; j < ay.size(); ++j) {
                    if (i == 0 && j == 0) {
                        continue;
                    }
                    const double v = px[i][a] * py[j][b] / cells[c].scale;
                    row[c] = v < 1e-12 ? 0.0 : v;
                    ++c;
                }
            }
            row[m + 2 * r] = -1.0;
            row[m + 2 * r + 1] = 1.0;
            const double w = 1.0 / std::sqrt(1.0 + F);
            fit_row[m + 2 * r] = w;
            fit_row[m + 2 * r + 1] = w;
            lp.set_objective(m + 2 * r, w);
            lp.set_objective(m + 2 * r + 1, w);
            lp.add_row(std::move(row), RowSense::Equal, F);
        }
        std::vector<double> r1(nv, 0.0);
        std::vector<double> r2(nv, 0.0);
        std::vector<double> support(nv, 0.0);
        std::vector<double> dist(nv, 0.0);
        for (std::size_t c = 0; c < m; ++c) {
            r1[c] = cells[c].x / cells[c].scale;
            r2[c] = cells[c].y / cells[c].scale;
            support[c] = x_min / cells[c].scale;
            dist[c] = std::abs(cells[c].x - cells[c].y) / cells[c].scale;
        }
        lp.add_row(r1, RowSense::Equal, mass1);
        lp.add_row(r2, RowSense::Equal, mass2);
        lp.add_row(support, RowSense::LessEqual, std::max(0.0, k - static_cast<double>(empirical_elements)) * x_min);
        LpSolution fit = solve_linear_program(lp, cfg.solver);
        require_ok(fit, "joint histogram fit");
        lp.add_row(fit_row, RowSense::LessEqual, fit.objective + cfg.fit_slack);
        // Among near-best fits take the one with the smallest distance.
        for (std::size_t i = 0; i < nv; ++i) {
            lp.set_objective(i, i < m ? dist[i] : 0.0);
        }
        LpSolution sol = solve_linear_program(lp, cfg.solver);
        const LpSolution &use = sol.status == LpStatus::Optimal ? sol : fit;
        long double total = 0;
        for (std::size_t c = 0; c < m; ++c) {
            total += static_cast<long double>(dist[c]) * use.x[c];
        }
        lp_distance = static_cast<double>(total);
    }
    return std::clamp(empirical_distance.value() + lp_distance, 0.0, 2.0);
}

std::uint64_t unseen_sample_size(double gamma, double epsilon, int num_qubits) {
    if (!(gamma > 0) || !std::isfinite(gamma)) {
        throw InvalidParameterError("gamma must be positive");
    }
    if (!(epsilon > 0 && epsilon < 1)) {
        throw InvalidParameterError("epsilon must lie in (0, 1)");
    }
    const double k = static_cast<double>(domain_size(num_qubits));
    return ceil_count(gamma / (epsilon * epsilon) * k / num_qubits);
}

}  // namespace pauliprobe
