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

#include "pauliprobe/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pauliprobe/channel_io.h"
#include "pauliprobe/diamond.h"
#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/quantum_sim.h"
#include "pauliprobe/rng.h"
#include "pauliprobe/tester.h"
#include "pauliprobe/unseen.h"

namespace pauliprobe {

using nlohmann::json;

std::string_view to_string(ExperimentTask task) {
    switch (task) {
        case ExperimentTask::Learn:
            return "learn";
        case ExperimentTask::Test:
            return "test";
        case ExperimentTask::Entropy:
            return "entropy";
        case ExperimentTask::Support:
            return "support";
        case ExperimentTask::Diamond:
            return "diamond";
        case ExperimentTask::VerifyBell:
            return "verify-bell";
    }
    return "unknown";
}

ExperimentTask parse_experiment_task(std::string_view text) {
    for (auto t : {ExperimentTask::Learn, ExperimentTask::Test, ExperimentTask::Entropy, ExperimentTask::Support,
                   ExperimentTask::Diamond, ExperimentTask::VerifyBell}) {
        if (to_string(t) == text) {
            return t;
        }
    }
    throw ValidationError("unknown experiment task '" + std::string(text) + "'");
}

PauliDistribution ChannelSpec::materialize(int num_qubits) const {
    if (fixed) {
        if (fixed->num_qubits() != num_qubits) {
            throw ShapeError("channel '" + description + "' has n=" + std::to_string(fixed->num_qubits()) +
                             ", cell asks for n=" + std::to_string(num_qubits));
        }
        return *fixed;
    }
    if (preset) {
        return make_channel(*preset, num_qubits);
    }
    throw ValidationError("channel spec is empty");
}

void ExperimentConfig::validate() const {
    if (grid.n.empty() || grid.p.empty() || grid.epsilon.empty() || grid.delta.empty()) {
        throw ValidationError("parameter grid is empty");
    }
    if (trials < 1) {
        throw ValidationError("trials must be >= 1");
    }
    const std::size_t wanted = task == ExperimentTask::Diamond ? 2 : 1;
    if (channels.size() != wanted) {
        throw ValidationError("task '" + std::string(to_string(task)) + "' takes " + std::to_string(wanted) +
                              " channel(s), config has " + std::to_string(channels.size()));
    }
    for (int n : grid.n) {
        if (n < 1 || n > kMaxQubits) {
            throw ValidationError("grid n=" + std::to_string(n) + " is out of range");
        }
    }
    for (const auto &c : channels) {
        if (!c.fixed && !c.preset) {
            throw ValidationError("channel spec is empty");
        }
        if (c.fixed && std::find(grid.n.begin(), grid.n.end(), c.fixed->num_qubits()) == grid.n.end()) {
            throw ValidationError("channel '" + c.description + "' has n=" + std::to_string(c.fixed->num_qubits()) +
                                  " which is not in the grid");
        }
        if (c.fixed && grid.n.size() != 1) {
            throw ValidationError("a fixed channel needs a single-valued n grid");
        }
    }
    for (double e : grid.epsilon) {
        if (!(e > 0) || !std::isfinite(e)) {
            throw ValidationError("grid epsilon values must be positive");
        }
    }
    for (double d : grid.delta) {
        if (!(d > 0 && d < 1)) {
            throw ValidationError("grid delta values must lie in (0, 1)");
        }
    }
    for (auto s : grid.samples) {
        if (s < 1) {
            throw ValidationError("grid sample overrides must be >= 1");
        }
    }
    if (task == ExperimentTask::Diamond && !grid.samples.empty()) {
        throw ValidationError("the diamond task plans its own sample counts");
    }
    if (task == ExperimentTask::Diamond && diamond_method != "plugin" && diamond_method != "unseen") {
        throw ValidationError("diamond method must be 'plugin' or 'unseen'");
    }
    if (!(plan_constant > 0) || !(gamma > 0)) {
        throw ValidationError("plan_constant and gamma must be positive");
    }
}

namespace {

const std::set<std::string> kConfigKeys = {"task", "channel", "channels", "grid", "trials", "seed",
                                           "plan_constant", "gamma", "method"};
const std::set<std::string> kGridKeys = {"p", "n", "epsilon", "delta", "samples"};

template <typename T>
std::vector<T> number_list(const json &value, const char *what) {
    std::vector<T> out;
    auto one = [&](const json &v) {
        if (!v.is_number()) {
            throw ValidationError(std::string("grid '") + what + "' entries must be numbers");
        }
        if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer() || v.get<double>() < 0) {
                throw ValidationError(std::string("grid '") + what + "' entries must be non-negative integers");
            }
        }
        out.push_back(v.get<T>());
    };
    if (value.is_array()) {
        for (const auto &v : value) {
            one(v);
        }
    } else {
        one(value);
    }
    return out;
}

LpOrder order_from_json(const json &v) {
    if (v.is_string()) {
        return LpOrder::parse(v.get<std::string>());
    }
    if (v.is_number()) {
        return LpOrder::finite(v.get<double>());
    }
    throw ValidationError("grid 'p' entries must be numbers or \"inf\"");
}

ChannelSpec channel_from_json(const json &v, const std::filesystem::path &base_dir) {
    ChannelSpec spec;
    if (v.is_string()) {
        spec.preset = parse_channel_preset(v.get<std::string>());
        spec.description = to_string(*spec.preset);
        return spec;
    }
    if (!v.is_object()) {
        throw ValidationError("channel entries must be objects or preset strings");
    }
    if (v.contains("preset")) {
        spec.preset = parse_channel_preset(v.at("preset").get<std::string>());
        spec.description = to_string(*spec.preset);
    } else if (v.contains("file")) {
        std::filesystem::path p = v.at("file").get<std::string>();
        spec.fixed = load_channel_file(p.is_absolute() ? p : base_dir / p);
        spec.description = "file:" + v.at("file").get<std::string>();
    } else if (v.contains("weights")) {
        spec.fixed = parse_channel_json(v.dump());
        spec.description = "inline";
    } else {
        throw ValidationError("channel entry needs 'preset', 'file' or 'weights'");
    }
    return spec;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (!kConfigKeys.count(key)) {
            throw ValidationError("unknown config key '" + key + "'");
        }
    }
    ExperimentConfig cfg;
    cfg.source = std::string(json_text);
    try {
        if (!doc.contains("task")) {
            throw ValidationError("config needs a 'task'");
        }
        cfg.task = parse_experiment_task(doc.at("task").get<std::string>());
        if (doc.contains("channel") && doc.contains("channels")) {
            throw ValidationError("give either 'channel' or 'channels'");
        }
        if (doc.contains("channel")) {
            cfg.channels.push_back(channel_from_json(doc.at("channel"), base_dir));
        } else if (doc.contains("channels")) {
            for (const auto &c : doc.at("channels")) {
                cfg.channels.push_back(channel_from_json(c, base_dir));
            }
        }
        const json grid = doc.value("grid", json::object());
        if (!grid.is_object()) {
            throw ValidationError("'grid' must be an object");
        }
        for (const auto &[key, value] : grid.items()) {
            if (!kGridKeys.count(key)) {
                throw ValidationError("unknown grid key '" + key + "'");
            }
        }
        if (grid.contains("p")) {
            const json &p = grid.at("p");
            if (p.is_array()) {
                for (const auto &v : p) {
                    cfg.grid.p.push_back(order_from_json(v));
                }
            } else {
                cfg.grid.p.push_back(order_from_json(p));
            }
        } else {
            cfg.grid.p.push_back(LpOrder::finite(1.0));
        }
        if (grid.contains("n")) {
            cfg.grid.n = number_list<int>(grid.at("n"), "n");
        }
        if (grid.contains("epsilon")) {
            cfg.grid.epsilon = number_list<double>(grid.at("epsilon"), "epsilon");
        }
        cfg.grid.delta = grid.contains("delta") ? number_list<double>(grid.at("delta"), "delta")
                                                : std::vector<double>{1.0 / 3.0};
        if (grid.contains("samples")) {
            cfg.grid.samples = number_list<std::uint64_t>(grid.at("samples"), "samples");
        }
        cfg.trials = doc.value("trials", std::uint64_t{1});
        cfg.master_seed = doc.value("seed", std::uint64_t{0});
        cfg.plan_constant = doc.value("plan_constant", 1.0);
        cfg.gamma = doc.value("gamma", kDefaultUnseenGamma);
        cfg.diamond_method = doc.value("method", std::string("unseen"));
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::vector<CellParams> expand_grid(const ExperimentConfig &config) {
    std::vector<CellParams> cells;
    std::vector<std::optional<std::uint64_t>> samples;
    if (config.grid.samples.empty()) {
        samples.push_back(std::nullopt);
    } else {
        samples.assign(config.grid.samples.begin(), config.grid.samples.end());
    }
    for (const auto &p : config.grid.p) {
        for (int n : config.grid.n) {
            for (double e : config.grid.epsilon) {
                for (double d : config.grid.delta) {
                    for (const auto &s : samples) {
                        CellParams c;
                        c.index = cells.size();
                        c.p = p;
                        c.n = n;
                        c.epsilon = e;
                        c.delta = d;
                        c.samples = s;
                        cells.push_back(c);
                    }
                }
            }
        }
    }
    return cells;
}

namespace {

void run_trial(const ExperimentConfig &cfg, const CellParams &cell, TrialRecord &rec) {
    const std::uint64_t seed = rec.seed;
    switch (cfg.task) {
        case ExperimentTask::Learn: {
            PauliDistribution dist = cfg.channels[0].materialize(cell.n);
            SamplePlan plan = plan_sample_size(cell.p, cell.n, cell.epsilon, cell.delta);
            if (cell.samples) {
                plan.upper = *cell.samples;
            }
            LearningRecord r = run_learning_trial(dist, plan, seed);
            rec.samples = r.samples;
            rec.queries = r.samples;
            rec.estimate = r.error;
            rec.truth = 0;
            rec.error = r.error;
            rec.success = r.success;
            break;
        }
        case ExperimentTask::Test: {
            PauliDistribution dist = cfg.channels[0].materialize(cell.n);
            TestPlan plan = plan_test_samples(cell.p, cell.n, cell.epsilon, cfg.plan_constant);
            const std::uint64_t N = cell.samples.value_or(plan.samples);
            RngStream rng(seed);
            SampleBatch batch = draw_samples(dist, N, rng);
            TestVerdict v = test_uniformity(batch, cell.p, cell.epsilon, plan.samples);
            const double d = distance_to_uniform(dist, cell.p);
            rec.samples = N;
            rec.queries = N;
            rec.estimate = v.statistic;
            rec.truth = d;
            rec.reject = v.reject;
            if (d <= 1e-12) {
                rec.success = !v.reject;
            } else if (d > cell.epsilon) {
                rec.success = v.reject;
            } else {
                rec.success = true;
            }
            rec.error = rec.success ? 0.0 : 1.0;
            break;
        }
        case ExperimentTask::Entropy:
        case ExperimentTask::Support: {
            PauliDistribution dist = cfg.channels[0].materialize(cell.n);
            const std::uint64_t N =
                cell.samples.value_or(unseen_sample_size(cfg.gamma, std::min(cell.epsilon, 0.999), cell.n));
            RngStream rng(seed);
            SampleBatch batch = draw_samples(dist, N, rng);
            rec.samples = N;
            rec.queries = N;
            if (cfg.task == ExperimentTask::Entropy) {
                rec.estimate = estimate_entropy_unseen(batch, dist.domain_size());
                rec.truth = shannon_entropy(dist);
                rec.error = std::abs(rec.estimate - rec.truth);
            } else {
                rec.estimate = static_cast<double>(estimate_support_unseen(batch, dist.domain_size()).value);
                rec.truth = static_cast<double>(support_size(dist));
                rec.error = std::abs(rec.estimate - rec.truth) / static_cast<double>(dist.domain_size());
            }
            rec.success = rec.error < cell.epsilon;
            break;
        }
        case ExperimentTask::Diamond: {
            PauliDistribution a = cfg.channels[0].materialize(cell.n);
            PauliDistribution b = cfg.channels[1].materialize(cell.n);
            DiamondEstimate e = cfg.diamond_method == "plugin"
                                    ? diamond_estimate_plugin(a, b, cell.epsilon, cell.delta, seed)
                                    : diamond_estimate_unseen(a, b, cell.epsilon, cfg.gamma, seed);
            rec.samples = e.queries_per_channel;
            rec.queries = 2 * e.queries_per_channel;
            rec.estimate = e.value;
            rec.truth = diamond_exact(a, b);
            rec.error = std::abs(rec.estimate - rec.truth);
            rec.success = rec.error < e.epsilon_target;
            break;
        }
        case ExperimentTask::VerifyBell: {
            PauliDistribution dist = cfg.channels[0].materialize(cell.n);
            PauliDistribution bell = bell_outcome_distribution(dist);
            PauliDistribution circuit = bell_circuit_distribution(dist);
            rec.estimate = lp_distance(bell, dist, LpOrder::infinity());
            rec.truth = 0;
            rec.error = std::max(rec.estimate, lp_distance(circuit, dist, LpOrder::infinity()));
            rec.success = rec.error < 1e-10;
            break;
        }
    }
}

double quantile(std::vector<double> sorted, double q) {
    if (sorted.empty()) {
        return 0;
    }
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig &config, unsigned workers) {
    config.validate();
    ExperimentReport report;
    report.config = config;
    report.cells = expand_grid(config);
    const std::uint64_t trials = config.trials;
    const std::size_t jobs = report.cells.size() * trials;
    report.records.resize(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
        auto &rec = report.records[j];
        rec.cell = j / trials;
        rec.trial = j % trials;
        rec.seed = derive_seed(config.master_seed, {static_cast<std::uint64_t>(rec.cell), rec.trial});
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs) {
                return;
            }
            TrialRecord &rec = report.records[j];
            auto start = std::chrono::steady_clock::now();
            try {
                run_trial(config, report.cells[rec.cell], rec);
            } catch (const std::exception &e) {
                rec.failure = e.what();
                rec.success = false;
            }
            rec.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &cell : report.cells) {
        CellSummary s;
        s.cell = cell.index;
        std::vector<double> errors;
        std::uint64_t successes = 0;
        std::uint64_t rejections = 0;
        bool any_verdict = false;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const TrialRecord &rec = report.records[cell.index * trials + t];
            if (!rec.failure.empty()) {
                ++s.failed;
                continue;
            }
            ++s.completed;
            errors.push_back(rec.error);
            successes += rec.success ? 1 : 0;
            if (rec.reject) {
                any_verdict = true;
                rejections += *rec.reject ? 1 : 0;
            }
            report.total_queries += rec.queries;
        }
        if (s.completed > 0) {
            s.median_error = quantile(errors, 0.5);
            s.q1_error = quantile(errors, 0.25);
            s.q3_error = quantile(errors, 0.75);
            double total = 0;
            for (double e : errors) {
                total += e;
            }
            s.mean_error = total / static_cast<double>(errors.size());
            s.success_rate = static_cast<double>(successes) / static_cast<double>(s.completed);
            if (any_verdict) {
                s.rejection_rate = static_cast<double>(rejections) / static_cast<double>(s.completed);
            }
        }
        report.partial = report.partial || s.failed > 0;
        report.summaries.push_back(s);
    }
    return report;
}

namespace {

json config_echo(const ExperimentConfig &cfg) {
    json j;
    j["task"] = std::string(to_string(cfg.task));
    json channels = json::array();
    for (const auto &c : cfg.channels) {
        channels.push_back(c.description);
    }
    j["channels"] = channels;
    json p = json::array();
    for (const auto &o : cfg.grid.p) {
        p.push_back(o.to_string());
    }
    j["grid"] = {{"p", p},
                 {"n", cfg.grid.n},
                 {"epsilon", cfg.grid.epsilon},
                 {"delta", cfg.grid.delta},
                 {"samples", cfg.grid.samples}};
    j["trials"] = cfg.trials;
    j["seed"] = cfg.master_seed;
    j["plan_constant"] = cfg.plan_constant;
    j["gamma"] = cfg.gamma;
    if (cfg.task == ExperimentTask::Diamond) {
        j["method"] = cfg.diamond_method;
    }
    return j;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string report_to_json(const ExperimentReport &report, bool include_timing) {
    json j;
    j["format_version"] = kReportFormatVersion;
    j["tool_version"] = std::string(kToolVersion);
    j["config"] = config_echo(report.config);
    json cells = json::array();
    for (const auto &c : report.cells) {
        json cj = {{"index", c.index}, {"p", c.p.to_string()}, {"n", c.n}, {"epsilon", c.epsilon}, {"delta", c.delta}};
        cj["samples"] = c.samples ? json(*c.samples) : json(nullptr);
        cells.push_back(cj);
    }
    j["cells"] = cells;
    json records = json::array();
    for (const auto &r : report.records) {
        json rj = {{"cell", r.cell},       {"trial", r.trial}, {"seed", r.seed},   {"samples", r.samples},
                   {"queries", r.queries}, {"estimate", r.estimate}, {"truth", r.truth}, {"error", r.error},
                   {"success", r.success}};
        rj["reject"] = r.reject ? json(*r.reject) : json(nullptr);
        rj["failure"] = r.failure.empty() ? json(nullptr) : json(r.failure);
        if (include_timing) {
            rj["wall_ms"] = r.wall_ms;
        }
        records.push_back(rj);
    }
    j["records"] = records;
    json summaries = json::array();
    for (const auto &s : report.summaries) {
        json sj = {{"cell", s.cell},
                   {"completed", s.completed},
                   {"failed", s.failed},
                   {"median_error", s.median_error},
                   {"q1_error", s.q1_error},
                   {"q3_error", s.q3_error},
                   {"mean_error", s.mean_error},
                   {"success_rate", s.success_rate}};
        sj["rejection_rate"] = s.rejection_rate ? json(*s.rejection_rate) : json(nullptr);
        summaries.push_back(sj);
    }
    j["summaries"] = summaries;
    j["total_queries"] = report.total_queries;
    j["partial"] = report.partial;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ExperimentReport &report, bool include_timing) {
    std::ostringstream out;
    out << "format_version,task,cell,trial,seed,p,n,epsilon,delta,samples,queries,estimate,truth,error,success,"
           "reject,failure";
    if (include_timing) {
        out << ",wall_ms";
    }
    out << "\n";
    const std::string task(to_string(report.config.task));
    for (const auto &r : report.records) {
        const CellParams &c = report.cells[r.cell];
        out << kReportFormatVersion << ',' << task << ',' << r.cell << ',' << r.trial << ',' << r.seed << ','
            << c.p.to_string() << ',' << c.n << ',' << fmt_double(c.epsilon) << ',' << fmt_double(c.delta) << ','
            << r.samples << ',' << r.queries << ',' << fmt_double(r.estimate) << ',' << fmt_double(r.truth) << ','
            << fmt_double(r.error) << ',' << (r.success ? 1 : 0) << ','
            << (r.reject ? (*r.reject ? "1" : "0") : "") << ',' << csv_quote(r.failure);
        if (include_timing) {
            out << ',' << fmt_double(r.wall_ms);
        }
        out << "\n";
    }
    return out.str();
}

ScalingField parse_scaling_field(std::string_view text) {
    static const std::pair<std::string_view, ScalingField> kNames[] = {
        {"samples", ScalingField::Samples},         {"n", ScalingField::Qubits},
        {"epsilon", ScalingField::Epsilon},         {"domain", ScalingField::Domain},
        {"unseen-scale", ScalingField::UnseenScale}, {"median-error", ScalingField::MedianError},
        {"mean-error", ScalingField::MeanError},    {"success-rate", ScalingField::SuccessRate},
    };
    for (const auto &[name, field] : kNames) {
        if (name == text) {
            return field;
        }
    }
    throw ValidationError("unknown scaling field '" + std::string(text) + "'");
}

ScalingFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ValidationError("fit needs equally many x and y values");
    }
    if (x.size() < 3) {
        throw ValidationError("fit needs at least 3 points");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw ValidationError("fit needs positive finite values");
        }
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const double n = static_cast<double>(lx.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx <= 1e-300) {
        throw ValidationError("fit needs at least two distinct x values");
    }
    ScalingFit fit;
    fit.points = lx.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy <= 1e-300 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

ScalingFit fit_scaling(const ExperimentReport &report, ScalingField x, ScalingField y) {
    auto value = [&](const CellParams &c, const CellSummary &s, ScalingField f) -> double {
        switch (f) {
            case ScalingField::Samples: {
                const std::uint64_t trials = report.config.trials;
                for (std::uint64_t t = 0; t < trials; ++t) {
                    const auto &rec = report.records[c.index * trials + t];
                    if (rec.failure.empty()) {
                        return static_cast<double>(rec.samples);
                    }
                }
                return 0;
            }
            case ScalingField::Qubits:
                return c.n;
            case ScalingField::Epsilon:
                return c.epsilon;
            case ScalingField::Domain:
                return static_cast<double>(domain_size(c.n));
            case ScalingField::UnseenScale:
                return static_cast<double>(domain_size(c.n)) / c.n;
            case ScalingField::MedianError:
                return s.median_error;
            case ScalingField::MeanError:
                return s.mean_error;
            case ScalingField::SuccessRate:
                return s.success_rate;
        }
        return 0;
    };
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        if (report.summaries[i].completed == 0) {
            continue;
        }
        xs.push_back(value(report.cells[i], report.summaries[i], x));
        ys.push_back(value(report.cells[i], report.summaries[i], y));
    }
    return fit_power_law(xs, ys);
}

}  // namespace pauliprobe
