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


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauliprobe/bench.h"
#include "pauliprobe/channel_io.h"
#include "pauliprobe/channels.h"
#include "pauliprobe/diamond.h"
#include "pauliprobe/errors.h"
#include "pauliprobe/learner.h"
#include "pauliprobe/metrics.h"
#include "pauliprobe/quantum_sim.h"
#include "pauliprobe/rng.h"
#include "pauliprobe/tester.h"
#include "pauliprobe/unseen.h"

namespace pauliprobe::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Text, Csv };

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::string output = "json";
    bool quiet = false;

    OutputFormat format() const {
        if (output == "text") {
            return OutputFormat::Text;
        }
        if (output == "csv") {
            return OutputFormat::Csv;
        }
        return OutputFormat::Json;
    }
    std::uint64_t effective_seed() const {
        return seed ? *seed : entropy_seed();
    }
};

std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? ";" : "") + scalar_text(v[i]);
        }
        return s;
    }
    return v.dump();
}

void flatten(const Json &v, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

// CSV shows the first list of records as a table, or else the flattened
// top-level fields as a single row.
void write_csv(const Json &result, std::ostream &out) {
    for (auto it = result.begin(); it != result.end(); ++it) {
        const Json &v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::vector<std::pair<std::string, std::string>> head;
            flatten(v.front(), "", head);
            for (std::size_t i = 0; i < head.size(); ++i) {
                out << (i ? "," : "") << csv_cell(head[i].first);
            }
            out << "\n";
            for (const auto &row : v) {
                std::vector<std::pair<std::string, std::string>> cells;
                flatten(row, "", cells);
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    out << (i ? "," : "") << csv_cell(cells[i].second);
                }
                out << "\n";
            }
            return;
        }
    }
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(result, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "," : "") << csv_cell(cells[i].first);
    }
    out << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "," : "") << csv_cell(cells[i].second);
    }
    out << "\n";
}

void emit(const Json &result, const GlobalOptions &g, std::ostream &out) {
    switch (g.format()) {
        case OutputFormat::Json:
            out << result.dump(2) << "\n";
            break;
        case OutputFormat::Text: {
            std::vector<std::pair<std::string, std::string>> cells;
            flatten(result, "", cells);
            for (const auto &[k, v] : cells) {
                out << k << ": " << v << "\n";
            }
            break;
        }
        case OutputFormat::Csv:
            write_csv(result, out);
            break;
    }
}

Json plan_json(const SamplePlan &plan) {
    Json j;
    j["p"] = plan.params.p.to_string();
    j["n"] = plan.num_qubits;
    j["epsilon"] = plan.params.epsilon;
    j["delta"] = plan.params.delta;
    j["regime"] = std::string(to_string(plan.regime));
    j["N_upper"] = plan.upper;
    j["N_lower"] = plan.lower;
    return j;
}

Json test_plan_json(const TestPlan &plan) {
    Json j;
    j["p"] = plan.p.to_string();
    j["n"] = plan.num_qubits;
    j["epsilon"] = plan.epsilon;
    j["regime"] = std::string(to_string(plan.regime));
    j["plan_constant"] = plan.plan_constant;
    j["N"] = plan.samples;
    j["N_necessary"] = plan.necessary;
    return j;
}

LpOrder parse_order(const std::string &text) {
    return LpOrder::parse(text);
}

// Options shared by the subcommands, bound to CLI11 as strings so that
// fractions and "inf" pass through our own parsers.
struct Args {
    std::string p = "1";
    int n = 1;
    std::string eps;
    std::string delta = "1/3";
    std::string channel;
    std::string channel2;
    std::uint64_t trials = 1;
    int boost = 1;
    std::optional<double> cplan;
    std::optional<std::uint64_t> samples;
    std::string gamma = "2";
    std::string method = "unseen";
    int nmax = 3;
    double tol = 1e-10;
    std::string config;
    std::string out_dir;
    unsigned workers = 1;
    bool no_timing = false;
};

int cmd_plan(const Args &a, const GlobalOptions &g, std::ostream &out) {
    SamplePlan plan = plan_sample_size(parse_order(a.p), a.n, parse_real(a.eps), parse_real(a.delta));
    Json j;
    j["command"] = "plan";
    j.update(plan_json(plan));
    emit(j, g, out);
    return kExitOk;
}

int cmd_learn(const Args &a, const GlobalOptions &g, std::ostream &out) {
    PauliDistribution dist = load_channel_file(a.channel);
    if (a.trials < 1) {
        throw InvalidParameterError("trials must be >= 1");
    }
    SamplePlan plan = plan_sample_size(parse_order(a.p), dist.num_qubits(), parse_real(a.eps), parse_real(a.delta));
    const std::uint64_t seed = g.effective_seed();
    LearningTrialOptions opts;
    opts.boost = a.boost;
    Json j;
    j["command"] = "learn";
    j["seed"] = seed;
    j["plan"] = plan_json(plan);
    j["boost"] = a.boost;
    Json trials = Json::array();
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < a.trials; ++t) {
        const std::uint64_t ts = derive_seed(seed, {t});
        LearningRecord rec = run_learning_trial(dist, plan, ts, opts);
        failures += rec.success ? 0 : 1;
        Json r;
        r["trial"] = t;
        r["seed"] = ts;
        r["samples"] = rec.samples;
        r["error"] = rec.error;
        r["success"] = rec.success;
        trials.push_back(r);
    }
    j["failure_rate"] = static_cast<double>(failures) / static_cast<double>(a.trials);
    j["trials"] = trials;
    emit(j, g, out);
    return kExitOk;
}

int cmd_test(const Args &a, const GlobalOptions &g, std::ostream &out) {
    PauliDistribution dist = load_channel_file(a.channel);
    if (a.trials < 1) {
        throw InvalidParameterError("trials must be >= 1");
    }
    const LpOrder p = parse_order(a.p);
    const double eps = parse_real(a.eps);
    const double c = a.cplan.value_or(kCalibratedTestPlanConstant);
    const std::uint64_t seed = g.effective_seed();
    TestPlan plan = plan_test_samples(p, dist.num_qubits(), eps, c);
    PauliSampler sampler(dist);
    Json verdicts = Json::array();
    for (std::uint64_t t = 0; t < a.trials; ++t) {
        // Same streams as run_test_roc, so the summary below matches it.
        RngStream rng = RngStream::derive(seed, {t});
        auto batch = draw_samples(sampler, plan.samples, rng);
        TestVerdict v = test_uniformity(batch, p, eps, plan.samples);
        Json r;
        r["trial"] = t;
        r["statistic"] = v.statistic;
        r["threshold"] = v.threshold;
        r["verdict"] = v.reject ? "reject" : "accept";
        verdicts.push_back(r);
    }
    TestRates rates = run_test_roc(dist, p, eps, a.trials, seed, c);
    Json j;
    j["command"] = "test-uniformity";
    j["seed"] = seed;
    j["plan"] = test_plan_json(plan);
    j["distance_to_uniform"] = rates.distance_to_uniform;
    j["truth"] = std::string(to_string(rates.truth));
    j["rejection_rate"] = rates.rejection_rate;
    j["type_one_rate"] = rates.type_one_rate ? Json(*rates.type_one_rate) : Json(nullptr);
    j["type_two_rate"] = rates.type_two_rate ? Json(*rates.type_two_rate) : Json(nullptr);
    j["trials"] = verdicts;
    emit(j, g, out);
    return kExitOk;
}

struct UnseenInputs {
    PauliDistribution dist;
    SampleBatch batch;
    std::uint64_t seed;
    std::uint64_t recommended;
    double epsilon;
    double gamma;
};

UnseenInputs unseen_inputs(const Args &a, const GlobalOptions &g) {
    PauliDistribution dist = load_channel_file(a.channel);
    const double eps = a.eps.empty() ? 0.5 : parse_real(a.eps);
    const double gamma = parse_real(a.gamma);
    const std::uint64_t rec = unseen_sample_size(gamma, eps, dist.num_qubits());
    const std::uint64_t n = a.samples.value_or(rec);
    if (n < 2) {
        throw PreconditionError("need at least 2 samples");
    }
    const std::uint64_t seed = g.effective_seed();
    SampleBatch batch = draw_samples(dist, n, seed);
    return {std::move(dist), std::move(batch), seed, rec, eps, gamma};
}

Json unseen_header(const char *command, const UnseenInputs &in) {
    Json j;
    j["command"] = command;
    j["seed"] = in.seed;
    j["n"] = in.dist.num_qubits();
    j["samples"] = in.batch.count();
    j["epsilon"] = in.epsilon;
    j["gamma"] = in.gamma;
    j["recommended_samples"] = in.recommended;
    return j;
}

int cmd_entropy(const Args &a, const GlobalOptions &g, std::ostream &out) {
    UnseenInputs in = unseen_inputs(a, g);
    const std::uint64_t k = domain_size(in.dist.num_qubits());
    Json j = unseen_header("estimate-entropy", in);
    j["estimate"] = estimate_entropy_unseen(in.batch, k);
    j["plugin"] = plugin_entropy(in.batch);
    j["exact"] = shannon_entropy(in.dist);
    emit(j, g, out);
    return kExitOk;
}

int cmd_support(const Args &a, const GlobalOptions &g, std::ostream &out, std::ostream &err) {
    UnseenInputs in = unseen_inputs(a, g);
    const std::uint64_t k = domain_size(in.dist.num_qubits());
    SupportEstimate est = estimate_support_unseen(in.batch, k);
    Json j = unseen_header("estimate-support", in);
    j["estimate"] = est.value;
    j["plugin"] = fingerprint(in.batch).distinct();
    j["exact"] = support_size(in.dist);
    j["promise_verified"] = est.promise_verified;
    emit(j, g, out);
    if (!est.promise_verified && !g.quiet) {
        err << "warning: promise-not-verified (every nonzero probability is assumed >= 1/4^n)\n";
    }
    return kExitOk;
}

int cmd_diamond(const Args &a, const GlobalOptions &g, std::ostream &out) {
    PauliDistribution p1 = load_channel_file(a.channel);
    PauliDistribution p2 = load_channel_file(a.channel2);
    const DiamondMethod method = parse_diamond_method(a.method);
    Json j;
    j["command"] = "estimate-diamond";
    DiamondEstimate est;
    if (method == DiamondMethod::Exact) {
        est.value = diamond_exact(p1, p2);
        est.method = DiamondMethod::Exact;
    } else {
        const std::uint64_t seed = g.effective_seed();
        j["seed"] = seed;
        const double eps = parse_real(a.eps);
        if (method == DiamondMethod::Plugin) {
            est = diamond_estimate_plugin(p1, p2, eps, parse_real(a.delta), seed);
        } else {
            est = diamond_estimate_unseen(p1, p2, eps, parse_real(a.gamma), seed);
        }
    }
    j["method"] = std::string(to_string(est.method));
    j["value"] = est.value;
    j["queries_per_channel"] = est.queries_per_channel;
    j["epsilon_target"] = est.epsilon_target;
    if (est.method == DiamondMethod::Plugin) {
        j["learning_error_first"] = est.learning_error_first;
        j["learning_error_second"] = est.learning_error_second;
    }
    emit(j, g, out);
    return kExitOk;
}

int cmd_verify_bell(const Args &a, const GlobalOptions &g, std::ostream &out) {
    if (a.nmax < 1 || a.nmax > kDefaultMaxExactQubits) {
        throw InvalidParameterError("nmax must lie in [1, " + std::to_string(kDefaultMaxExactQubits) + "]");
    }
    std::vector<std::pair<std::string, PauliDistribution>> channels;
    if (!a.channel.empty()) {
        PauliDistribution d = load_channel_file(a.channel);
        if (d.num_qubits() > a.nmax) {
            throw InvalidParameterError("channel has more qubits than nmax");
        }
        channels.emplace_back(std::filesystem::path(a.channel).filename().string(), std::move(d));
    } else {
        for (int n = 1; n <= a.nmax; ++n) {
            for (const char *preset : {"identity", "depolarizing(0.3)", "bit_flip(0.1)", "dephasing(0.2)",
                                       "sparse_random(3,1)"}) {
                channels.emplace_back(std::string(preset) + " n=" + std::to_string(n),
                                      make_channel(parse_channel_preset(preset), n));
            }
        }
    }
    Json rows = Json::array();
    bool all = true;
    for (const auto &[name, dist] : channels) {
        const double bell = lp_distance(bell_outcome_distribution(dist), dist, LpOrder::infinity());
        const double circuit = lp_distance(bell_circuit_distribution(dist), dist, LpOrder::infinity());
        const bool pass = bell < a.tol && circuit < a.tol;
        all = all && pass;
        Json r;
        r["channel"] = name;
        r["n"] = dist.num_qubits();
        r["projector_deviation"] = bell;
        r["circuit_deviation"] = circuit;
        r["pass"] = pass;
        rows.push_back(r);
    }
    Json j;
    j["command"] = "verify-bell";
    j["tolerance"] = a.tol;
    j["channels"] = rows;
    j["result"] = all ? "PASS" : "FAIL";
    emit(j, g, out);
    return all ? kExitOk : kExitRuntime;
}

int cmd_bench(const Args &a, const GlobalOptions &g, std::ostream &out) {
    std::ifstream in(a.config);
    if (!in) {
        throw ValidationError("cannot read config '" + a.config + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ExperimentConfig cfg = parse_experiment_config(buf.str(), std::filesystem::path(a.config).parent_path());
    if (g.seed) {
        cfg.master_seed = *g.seed;
    }
    const unsigned workers = a.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.workers;
    ExperimentReport report = run_experiment(cfg, workers);
    std::filesystem::create_directories(a.out_dir);
    const bool timing = !a.no_timing;
    {
        std::ofstream f(std::filesystem::path(a.out_dir) / "report.json");
        f << report_to_json(report, timing);
    }
    {
        std::ofstream f(std::filesystem::path(a.out_dir) / "records.csv");
        f << report_to_csv(report, timing);
    }
    Json j;
    j["command"] = "bench";
    j["seed"] = cfg.master_seed;
    j["task"] = std::string(to_string(cfg.task));
    j["cells"] = report.cells.size();
    j["records"] = report.records.size();
    j["total_queries"] = report.total_queries;
    j["partial"] = report.partial;
    Json cells = Json::array();
    for (const auto &s : report.summaries) {
        Json c;
        c["cell"] = s.cell;
        c["completed"] = s.completed;
        c["failed"] = s.failed;
        c["median_error"] = s.median_error;
        c["success_rate"] = s.success_rate;
        cells.push_back(c);
    }
    j["summaries"] = cells;
    emit(j, g, out);
    return report.partial ? kExitPartial : kExitOk;
}

int cmd_sample(const Args &a, const GlobalOptions &g, std::ostream &out) {
    PauliDistribution dist = load_channel_file(a.channel);
    const std::uint64_t n = a.samples.value_or(1);
    const std::uint64_t seed = g.effective_seed();
    SampleBatch batch = draw_samples(dist, n, seed);
    Json labels = Json::array();
    Json indices = Json::array();
    for (PauliIndex i : batch.outcomes) {
        labels.push_back(decode_index(i, dist.num_qubits()));
        indices.push_back(i);
    }
    Json j;
    j["command"] = "sample";
    j["seed"] = seed;
    j["n"] = dist.num_qubits();
    j["count"] = batch.count();
    j["channel_uses"] = batch.channel_uses;
    j["outcomes"] = labels;
    j["indices"] = indices;
    emit(j, g, out);
    return kExitOk;
}

}  // namespace

double parse_real(const std::string &text) {
    auto one = [&](std::string_view s) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw InvalidParameterError("not a number: '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return one(text);
    }
    const double num = one(std::string_view(text).substr(0, slash));
    const double den = one(std::string_view(text).substr(slash + 1));
    if (den == 0) {
        throw InvalidParameterError("zero denominator in '" + text + "'");
    }
    return num / den;
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli channel learning, testing and property estimation", "pauliprobe"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    GlobalOptions g;
    Args a;
    app.add_option("--seed", g.seed, "Seed for stochastic commands (default: fresh, echoed)");
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_flag("--quiet,-q", g.quiet, "Suppress warnings");

    auto *plan = app.add_subcommand("plan", "Sample-size plan for the empirical learner");
    plan->add_option("-p,--p", a.p, "Order p (number or inf)")->required();
    plan->add_option("-n,--n", a.n, "Qubits")->required();
    plan->add_option("--eps", a.eps, "Accuracy")->required();
    plan->add_option("--delta", a.delta, "Failure probability (decimal or fraction)");

    auto *learn = app.add_subcommand("learn", "Learn a channel from simulated samples");
    learn->add_option("--channel", a.channel)->required();
    learn->add_option("-p,--p", a.p)->required();
    learn->add_option("--eps", a.eps)->required();
    learn->add_option("--delta", a.delta);
    learn->add_option("--trials", a.trials);
    learn->add_option("--boost", a.boost, "Median of this many estimates");

    auto *test = app.add_subcommand("test-uniformity", "White-noise test against the uniform channel");
    test->add_option("--channel", a.channel)->required();
    test->add_option("-p,--p", a.p)->required();
    test->add_option("--eps", a.eps)->required();
    test->add_option("--trials", a.trials);
    test->add_option("--cplan", a.cplan, "Plan constant (default: calibrated)");

    auto *entropy = app.add_subcommand("estimate-entropy", "Entropy via the unseen estimator");
    auto *support = app.add_subcommand("estimate-support", "Support size via the unseen estimator");
    for (auto *sub : {entropy, support}) {
        sub->add_option("--channel", a.channel)->required();
        sub->add_option("--samples,-N", a.samples, "Samples (default: recommended)");
        sub->add_option("--eps", a.eps, "Accuracy for the recommendation (default 0.5)");
        sub->add_option("--gamma", a.gamma, "Constant of the recommendation");
    }

    auto *diamond = app.add_subcommand("estimate-diamond", "Diamond distance between two Pauli channels");
    diamond->add_option("--channel1", a.channel)->required();
    diamond->add_option("--channel2", a.channel2)->required();
    diamond->add_option("--eps", a.eps);
    diamond->add_option("--delta", a.delta);
    diamond->add_option("--method", a.method)->check(CLI::IsMember({"exact", "plugin", "unseen"}));
    diamond->add_option("--gamma", a.gamma);

    auto *bell = app.add_subcommand("verify-bell", "Check the Bell sampling protocol exactly");
    bell->add_option("--channel", a.channel, "Channel file (default: presets for n = 1..nmax)");
    bell->add_option("--nmax", a.nmax);
    bell->add_option("--tol", a.tol);

    auto *bench = app.add_subcommand("bench", "Run a seeded experiment");
    bench->add_option("--config", a.config)->required();
    bench->add_option("--out", a.out_dir)->required();
    bench->add_option("--workers", a.workers, "Threads (0: all cores)");
    bench->add_flag("--no-timing", a.no_timing, "Omit wall-clock fields from the outputs");

    auto *sample = app.add_subcommand("sample", "Draw Bell-measurement outcomes");
    sample->add_option("--channel", a.channel)->required();
    sample->add_option("-N,--samples", a.samples)->required();

    for (auto *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        if (!args.empty()) {
            err << "error: " << e.what() << "\n";
        }
        err << app.help();
        return kExitValidation;
    }

    try {
        if (*plan) {
            if (a.eps.empty()) {
                throw InvalidParameterError("--eps is required");
            }
            return cmd_plan(a, g, out);
        }
        if (*learn) {
            return cmd_learn(a, g, out);
        }
        if (*test) {
            return cmd_test(a, g, out);
        }
        if (*entropy) {
            return cmd_entropy(a, g, out);
        }
        if (*support) {
            return cmd_support(a, g, out, err);
        }
        if (*diamond) {
            if (a.method != "exact" && a.eps.empty()) {
                throw InvalidParameterError("--eps is required for sampled methods");
            }
            return cmd_diamond(a, g, out);
        }
        if (*bell) {
            return cmd_verify_bell(a, g, out);
        }
        if (*bench) {
            return cmd_bench(a, g, out);
        }
        if (*sample) {
            return cmd_sample(a, g, out);
        }
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    err << app.help();
    return kExitValidation;
}

}  // namespace pauliprobe::cli
