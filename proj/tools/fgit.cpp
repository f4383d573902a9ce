// Copyright 2026 The fgit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: model, plan, moments, reconstruct, sweep,
// shots-demo, report.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgit/errors.hpp"
#include "fgit/experiments.hpp"
#include "fgit/io.hpp"
#include "fgit/moments.hpp"
#include "fgit/planner.hpp"
#include "fgit/spectrum.hpp"
#include "fgit/transform.hpp"

namespace {

using namespace fgit;
using io::format_double;

enum Exit { ok = 0, invalid_input = 1, formula_domain = 2, io_failure = 3 };

// Spectrum source: a named model or a CSV file.
struct SourceOpts {
    std::string model;
    std::string spectrum;
    std::size_t n_eigen = 512;
    Placement placement = Placement::midpoint;
    ModelOptions params;
    double mu0 = 1.0;
    double mu1 = 0.0;
    double sigma = 0.0;
    double mu_tilde = 0.0;
    CLI::Option *mu1_opt = nullptr;
    CLI::Option *sigma_opt = nullptr;
    CLI::Option *mu_tilde_opt = nullptr;
    CLI::Option *mu0_opt = nullptr;

    [[nodiscard]] bool has_spectrum() const { return !model.empty() || !spectrum.empty(); }
};

struct PlanOpts {
    double delta = 0.02;
    double sigma_leak = 0.01;
    double lambda = 0.0;
    double norm = 1.0;
    double eps = 0.01;
    double eps_total = 0.03;
    double eps_p = 0.01;
    double eps_n = 0.01;
    double eps_s = 0.01;
    double omega = 2.0 / 512.0;
    double confidence = 0.05;
    std::vector<double> window{-1.0, -0.8};
    PlanMethod method = PlanMethod::general;
    int order = 2;
    WindowOffset offset = WindowOffset::max_side;
    ChiMode chi_mode = ChiMode::practical;
    CentralMode central_mode = CentralMode::bound;
    TermsMode terms_mode = TermsMode::standard;
    ShotMode shot_mode = ShotMode::conservative;
    bool cap_at_general = false;
    std::string plan_file;

    CLI::Option *lambda_opt = nullptr;
    CLI::Option *norm_opt = nullptr;
    CLI::Option *eps_opt = nullptr;
    CLI::Option *eps_total_opt = nullptr;
    CLI::Option *eps_p_opt = nullptr;
    CLI::Option *eps_n_opt = nullptr;
    CLI::Option *eps_s_opt = nullptr;
};

template <class Enum, std::size_t N> std::map<std::string, Enum> enum_map(const std::array<Enum, N> &all) {
    std::map<std::string, Enum> m;
    for (auto e : all) {
        m.emplace(to_string(e), e);
    }
    return m;
}

std::map<std::string, PlanMethod> method_map() {
    auto m = enum_map(std::array{PlanMethod::general, PlanMethod::variance, PlanMethod::central_moment});
    m.emplace("central", PlanMethod::central_moment);
    return m;
}

void add_source_options(CLI::App *app, SourceOpts &s) {
    app->add_option("--model", s.model, "Built-in model spectrum")->check(CLI::IsMember({"A", "B"}));
    app->add_option("--spectrum", s.spectrum, "Spectrum CSV (omega,weight)")->excludes("--model");
    app->add_option("--n-eigen", s.n_eigen, "Eigenvalue count for built-in models")->check(CLI::Range(2, 1 << 24));
    app->add_option("--placement", s.placement, "Eigenvalue placement")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Placement>{{"midpoint", Placement::midpoint}, {"endpoints", Placement::endpoints}}));
    app->add_option("--xi", s.params.peak.xi, "Peak location");
    app->add_option("--beta", s.params.peak.beta, "Peak width");
    app->add_option("--alpha", s.params.peak.alpha, "Peak skewness");
    app->add_option("--omega-thr", s.params.tail.omega_thr, "Tail threshold");
    app->add_option("--tail-lambda", s.params.tail.lambda, "Tail scale");
    app->add_option("--rho", s.params.tail.rho, "Tail amplitude");
    app->add_option("--gamma", s.params.tail.gamma, "Tail exponent");
    s.mu0_opt = app->add_option("--mu0", s.mu0, "Total weight (overrides the spectrum)");
    s.mu1_opt = app->add_option("--mu1", s.mu1, "Mean frequency (overrides the spectrum)");
    s.sigma_opt = app->add_option("--sigma", s.sigma, "Standard deviation (overrides the spectrum)");
    s.mu_tilde_opt = app->add_option("--mu-tilde", s.mu_tilde, "Absolute central moment for --method central");
}

void add_plan_options(CLI::App *app, PlanOpts &p, bool allow_plan_file) {
    app->add_option("--delta", p.delta, "Resolution Delta");
    app->add_option("--Sigma,--sigma-leak", p.sigma_leak, "Kernel leakage Sigma");
    p.lambda_opt = app->add_option("--lambda", p.lambda, "Kernel width (overrides Delta, Sigma)");
    p.norm_opt = app->add_option("--norm", p.norm, "Spectral norm ||H||");
    p.eps_opt = app->add_option("--eps", p.eps, "Sets eps_p, eps_n and eps_s");
    p.eps_total_opt =
        app->add_option("--eps-total", p.eps_total, "Split equally into eps_p, eps_n, eps_s")->excludes(p.eps_opt);
    p.eps_p_opt = app->add_option("--eps-p", p.eps_p, "Periodic-extension budget");
    p.eps_n_opt = app->add_option("--eps-n", p.eps_n, "Truncation budget");
    p.eps_s_opt = app->add_option("--eps-s", p.eps_s, "Statistical budget");
    app->add_option("--omega", p.omega, "Energy scale Omega of the error metric");
    app->add_option("--confidence-delta", p.confidence, "Failure probability for shot counts");
    app->add_option("--window", p.window, "Frequency window nu_min nu_max")->expected(2);
    app->add_option("--method", p.method, "Planner method")->transform(CLI::CheckedTransformer(method_map()));
    app->add_option("--order", p.order, "Central-moment order")->check(CLI::Range(2, 64));
    app->add_option("--offset", p.offset, "Window offset convention")
        ->transform(CLI::CheckedTransformer(
            enum_map(std::array{WindowOffset::max_side, WindowOffset::min_side, WindowOffset::span})));
    app->add_option("--chi-mode", p.chi_mode, "General period formula")
        ->transform(CLI::CheckedTransformer(enum_map(std::array{ChiMode::practical, ChiMode::full})));
    app->add_option("--central-mode", p.central_mode, "Central-moment period formula")
        ->transform(CLI::CheckedTransformer(enum_map(std::array{CentralMode::bound, CentralMode::simplified})));
    app->add_option("--terms-mode", p.terms_mode, "Truncation-order bound")
        ->transform(CLI::CheckedTransformer(enum_map(std::array{TermsMode::standard, TermsMode::tight})));
    app->add_option("--shot-mode", p.shot_mode, "Shot-count formula")
        ->transform(CLI::CheckedTransformer(
            enum_map(std::array{ShotMode::conservative, ShotMode::uncorrelated, ShotMode::chebyshev})));
    app->add_flag("--cap-at-general", p.cap_at_general, "Fall back to the general period when it is shorter");
    if (allow_plan_file) {
        app->add_option("--plan", p.plan_file, "Plan key=value file (replaces the planning flags)");
    }
}

DiscreteSpectrum load_spectrum(const SourceOpts &s, const PlanOpts &p) {
    if (!s.model.empty()) {
        ModelOptions opts = s.params;
        opts.placement = s.placement;
        return make_model(s.model == "A" ? ModelKind::A : ModelKind::B, s.n_eigen, opts);
    }
    if (!s.spectrum.empty()) {
        std::istringstream in(io::read_file(s.spectrum));
        return io::read_spectrum_csv(in, p.norm_opt->count() > 0 ? p.norm : 1.0);
    }
    throw InvalidInput("a spectrum is required: pass --model A|B or --spectrum FILE");
}

ErrorBudget resolve_budget(const PlanOpts &p) {
    ErrorBudget b = p.eps_total_opt->count() > 0 ? ErrorBudget::equal_split(p.eps_total, p.omega, p.confidence)
                                                 : ErrorBudget::uniform(p.eps, p.omega, p.confidence);
    if (p.eps_p_opt->count() > 0) {
        b.eps_p = p.eps_p;
    }
    if (p.eps_n_opt->count() > 0) {
        b.eps_n = p.eps_n;
    }
    if (p.eps_s_opt->count() > 0) {
        b.eps_s = p.eps_s;
    }
    b.validate();
    return b;
}

// Without --norm the spectrum's own norm is used, or the smallest norm that
// contains the window.
double resolve_norm(const PlanOpts &p, const std::optional<DiscreteSpectrum> &s) {
    if (p.norm_opt->count() > 0) {
        return p.norm;
    }
    if (s) {
        return s->norm_scale();
    }
    return std::max({1.0, std::abs(p.window[0]), std::abs(p.window[1])});
}

PlanRequest build_request(const PlanOpts &p, const SourceOpts &src, const std::optional<DiscreteSpectrum> &s) {
    PlanRequest r;
    r.method = p.method;
    const double norm = resolve_norm(p, s);
    r.kernel = p.lambda_opt->count() > 0 ? KernelSpec::from_width(p.lambda, p.sigma_leak, norm)
                                         : KernelSpec::from_resolution(p.delta, p.sigma_leak, norm);
    r.budget = resolve_budget(p);
    r.window = FrequencyWindow{p.window[0], p.window[1]};
    r.order = p.order;
    r.offset = p.offset;
    r.chi_mode = p.chi_mode;
    r.central_mode = p.central_mode;
    r.terms_mode = p.terms_mode;
    r.shot_mode = p.shot_mode;
    r.cap_at_general = p.cap_at_general;
    if (s) {
        const auto summary = summarize(*s, {p.order});
        r.mu0 = summary.mu0;
        r.mu1 = summary.mu1;
        r.sigma = summary.sigma;
        r.mu_tilde = summary.central.at(p.order) / summary.mu0;
    }
    if (src.mu0_opt->count() > 0) {
        r.mu0 = src.mu0;
    }
    if (src.mu1_opt->count() > 0) {
        r.mu1 = src.mu1;
    }
    if (src.sigma_opt->count() > 0) {
        r.sigma = src.sigma;
    }
    if (src.mu_tilde_opt->count() > 0) {
        r.mu_tilde = src.mu_tilde;
    }
    if (!s && r.method != PlanMethod::general && src.mu1_opt->count() == 0) {
        throw InvalidInput("moment-informed plans need --model, --spectrum or explicit --mu1/--sigma");
    }
    return r;
}

ExtensionPlan resolve_plan(const PlanOpts &p, const SourceOpts &src, const std::optional<DiscreteSpectrum> &s) {
    if (!p.plan_file.empty()) {
        std::istringstream in(io::read_file(p.plan_file));
        auto plan = io::plan_from_key_values(io::read_key_values(in));
        if (s && std::abs(s->norm_scale() - plan.request.kernel.norm_scale) > 1e-12 * plan.request.kernel.norm_scale) {
            throw InvalidInput("plan norm_scale " + format_double(plan.request.kernel.norm_scale) +
                               " does not match the spectrum norm " + format_double(s->norm_scale()));
        }
        return plan;
    }
    return make_plan(build_request(p, src, s));
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        io::write_file(path, text);
    }
}

std::string key_values_text(const io::KeyValues &kv) {
    std::ostringstream out;
    io::write_key_values(out, kv);
    return out.str();
}

io::KeyValues source_key_values(const SourceOpts &s) {
    io::KeyValues kv;
    if (!s.model.empty()) {
        kv.emplace_back("source.model", s.model);
        kv.emplace_back("source.n_eigen", std::to_string(s.n_eigen));
        kv.emplace_back("source.placement", s.placement == Placement::midpoint ? "midpoint" : "endpoints");
        kv.emplace_back("source.gamma", format_double(s.params.tail.gamma));
    } else if (!s.spectrum.empty()) {
        kv.emplace_back("source.spectrum", s.spectrum);
    }
    return kv;
}

void append(io::KeyValues &a, const io::KeyValues &b) { a.insert(a.end(), b.begin(), b.end()); }

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// --config FILE: each key=value line becomes "--key value" unless the flag
// is already on the command line, so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    std::string config;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (config.empty()) {
        return out;
    }
    std::set<std::string> present;
    for (const auto &a : out) {
        if (a.rfind("--", 0) == 0) {
            present.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
        }
    }
    std::istringstream in(io::read_file(config));
    for (const auto &[key, value] : io::read_key_values(in)) {
        if (present.count(key) != 0U) {
            continue;
        }
        std::istringstream tokens(value);
        std::vector<std::string> parts{std::istream_iterator<std::string>(tokens), {}};
        if (parts.size() == 1) {
            out.push_back("--" + key + "=" + parts[0]);
        } else {
            out.push_back("--" + key);
            out.insert(out.end(), parts.begin(), parts.end());
        }
    }
    return out;
}

int run(int argc, char **argv) {
    CLI::App app{"Fourier-moment integral transforms with a shortened periodic kernel"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // model
    SourceOpts model_src;
    PlanOpts model_plan;
    std::string model_out;
    auto *model_cmd = app.add_subcommand("model", "Write a model spectrum and its moment summary");
    model_cmd->add_option("--kind", model_src.model, "Model A or B")->required()->check(CLI::IsMember({"A", "B"}));
    model_cmd->add_option("--n-eigen", model_src.n_eigen, "Eigenvalue count")->check(CLI::Range(2, 1 << 24));
    model_cmd->add_option("--placement", model_src.placement, "Eigenvalue placement")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Placement>{{"midpoint", Placement::midpoint}, {"endpoints", Placement::endpoints}}));
    model_cmd->add_option("--xi", model_src.params.peak.xi, "Peak location");
    model_cmd->add_option("--beta", model_src.params.peak.beta, "Peak width");
    model_cmd->add_option("--alpha", model_src.params.peak.alpha, "Peak skewness");
    model_cmd->add_option("--omega-thr", model_src.params.tail.omega_thr, "Tail threshold");
    model_cmd->add_option("--tail-lambda", model_src.params.tail.lambda, "Tail scale");
    model_cmd->add_option("--rho", model_src.params.tail.rho, "Tail amplitude");
    model_cmd->add_option("--gamma", model_src.params.tail.gamma, "Tail exponent");
    model_cmd->add_option("--out", model_out, "Spectrum CSV path");

    // plan
    SourceOpts plan_src;
    PlanOpts plan_opts;
    std::string plan_out;
    std::vector<double> plan_sweep;
    auto *plan_cmd = app.add_subcommand("plan", "Choose the period, moment count and shot count");
    add_source_options(plan_cmd, plan_src);
    add_plan_options(plan_cmd, plan_opts, false);
    plan_cmd->add_option("--sweep", plan_sweep, "eps_p sweep: min max count (CSV output)")->expected(3);
    plan_cmd->add_option("--out", plan_out, "Output path");

    // moments
    SourceOpts mom_src;
    PlanOpts mom_opts;
    std::string mom_out;
    std::int64_t mom_shots = 0;
    bool mom_sampled = false;
    bool mom_clamp = false;
    std::uint64_t mom_seed = 0;
    auto *mom_cmd = app.add_subcommand("moments", "Exact or shot-sampled Fourier moments for a plan");
    add_source_options(mom_cmd, mom_src);
    add_plan_options(mom_cmd, mom_opts, true);
    auto *shots_opt =
        mom_cmd->add_option("--shots", mom_shots, "Shots per real/imaginary part")->check(CLI::PositiveNumber);
    mom_cmd->add_flag("--sampled", mom_sampled, "Sample with the plan's shot count")->excludes(shots_opt);
    mom_cmd->add_option("--seed", mom_seed, "RNG seed");
    mom_cmd->add_flag("--clamp", mom_clamp, "Project sampled moments onto |m| <= 1");
    mom_cmd->add_option("--out", mom_out, "Moments CSV path");

    // reconstruct
    SourceOpts rec_src;
    PlanOpts rec_opts;
    std::string rec_out;
    std::string rec_meta;
    std::string rec_moments;
    std::size_t rec_count = 1024;
    std::vector<double> rec_range;
    auto *rec_cmd = app.add_subcommand("reconstruct", "Reconstruct the transform and measure its errors");
    add_source_options(rec_cmd, rec_src);
    add_plan_options(rec_cmd, rec_opts, true);
    rec_cmd->add_option("--moments", rec_moments, "Moments CSV (default: exact moments)");
    rec_cmd->add_option("--grid-count", rec_count, "Grid points")->check(CLI::Range(1, 1 << 24));
    rec_cmd->add_option("--range", rec_range, "Evaluation range lo hi (default: the window)")->expected(2);
    rec_cmd->add_option("--out", rec_out, "Curves CSV path");
    rec_cmd->add_option("--meta", rec_meta, "Metadata key=value path (default: <out>.meta)");

    // sweep
    experiments::ModelScenario sweep_sc;
    std::vector<double> sweep_range{1e-4, 1e-1};
    std::size_t sweep_count = 10;
    std::size_t sweep_grid = 1024;
    std::string sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "Period reduction and measured error versus target eps_p");
    sweep_cmd->add_option("--eps-range", sweep_range, "Target range min max")->expected(2);
    sweep_cmd->add_option("--count", sweep_count, "Log-spaced targets")->check(CLI::Range(1, 10000));
    sweep_cmd->add_option("--grid-count", sweep_grid, "Window grid points")->check(CLI::Range(1, 1 << 24));
    sweep_cmd->add_option("--gamma", sweep_sc.model.tail.gamma, "Tail exponent of model B");
    sweep_cmd->add_option("--out", sweep_out, "CSV path");

    // shots-demo
    SourceOpts shot_src;
    PlanOpts shot_opts;
    std::vector<double> shot_factors{1.0, 0.01};
    int shot_seeds = 200;
    std::uint64_t shot_seed = 0;
    std::size_t shot_grid = 1024;
    std::string shot_out;
    auto *shot_cmd = app.add_subcommand("shots-demo", "Monte Carlo coverage of the statistical budget");
    add_source_options(shot_cmd, shot_src);
    add_plan_options(shot_cmd, shot_opts, true);
    shot_cmd->add_option("--factors", shot_factors, "Multipliers on the planned shot count");
    shot_cmd->add_option("--seeds", shot_seeds, "Seeds per factor")->check(CLI::Range(1, 1000000));
    shot_cmd->add_option("--seed", shot_seed, "First seed")->required();
    shot_cmd->add_option("--grid-count", shot_grid, "Window grid points")->check(CLI::Range(1, 1 << 24));
    shot_cmd->add_option("--out", shot_out, "CSV path");

    // report
    std::string report_out;
    auto *report_cmd = app.add_subcommand("report", "Reproduction manifest: every quoted number and its command");
    report_cmd->add_option("--out", report_out, "Output path");

    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    }

    if (model_cmd->parsed()) {
        model_src.params.placement = model_src.placement;
        const auto s =
            make_model(model_src.model == "A" ? ModelKind::A : ModelKind::B, model_src.n_eigen, model_src.params);
        const auto summary = summarize(s);
        if (!model_out.empty()) {
            std::ostringstream csv;
            io::write_spectrum_csv(csv, s);
            io::write_file(model_out, csv.str());
        }
        io::KeyValues kv{{"kind", model_src.model},
                         {"n_eigen", std::to_string(s.size())},
                         {"mu0", format_double(summary.mu0)},
                         {"mu1", fixed3(summary.mu1)},
                         {"sigma", fixed3(summary.sigma)},
                         {"mu1_full", format_double(summary.mu1)},
                         {"sigma_full", format_double(summary.sigma)}};
        std::cout << key_values_text(kv);
        return ok;
    }

    if (plan_cmd->parsed()) {
        std::optional<DiscreteSpectrum> s;
        if (plan_src.has_spectrum()) {
            s = load_spectrum(plan_src, plan_opts);
        }
        if (!plan_sweep.empty()) {
            const auto count = static_cast<std::size_t>(plan_sweep[2]);
            if (plan_sweep[2] < 1 || static_cast<double>(count) != plan_sweep[2]) {
                throw InvalidInput("--sweep count must be a positive integer");
            }
            auto req = build_request(plan_opts, plan_src, s);
            std::ostringstream csv;
            csv << "eps_p,method,period,chi,n_terms,total_shots,shots_per_part\n";
            for (double eps : experiments::log_spaced(plan_sweep[0], plan_sweep[1], count)) {
                req.budget.eps_p = eps;
                const auto plan = make_plan(req);
                csv << format_double(eps) << ',' << to_string(plan.method) << ',' << format_double(plan.period) << ','
                    << format_double(plan.chi) << ',' << plan.n_terms << ',' << plan.total_shots << ','
                    << plan.shots_per_part << '\n';
            }
            emit(csv.str(), plan_out);
            return ok;
        }
        const auto plan = make_plan(build_request(plan_opts, plan_src, s));
        auto kv = io::plan_to_key_values(plan);
        append(kv, source_key_values(plan_src));
        emit(key_values_text(kv), plan_out);
        return ok;
    }

    if (mom_cmd->parsed()) {
        const auto s = load_spectrum(mom_src, mom_opts);
        const auto plan = resolve_plan(mom_opts, mom_src, s);
        const auto exact = exact_moments(s, plan.dt, plan.n_terms);
        FourierMomentSet out = exact;
        if (shots_opt->count() > 0 || mom_sampled) {
            const auto shots = shots_opt->count() > 0 ? mom_shots : std::max<std::int64_t>(1, plan.shots_per_part);
            out = sample_from_exact(exact, SamplingOptions{shots, mom_seed, mom_clamp});
        }
        std::ostringstream csv;
        io::write_moments_csv(csv, out);
        emit(csv.str(), mom_out);
        return ok;
    }

    if (rec_cmd->parsed()) {
        const auto s = load_spectrum(rec_src, rec_opts);
        const auto plan = resolve_plan(rec_opts, rec_src, s);
        const auto periodic = plan.periodic();
        const double lambda = plan.request.kernel.lambda;
        const auto window = *plan.request.window;
        const auto grid =
            rec_range.empty() ? uniform_grid(window, rec_count) : uniform_grid(rec_range[0], rec_range[1], rec_count);
        const auto window_grid = uniform_grid(window, rec_count);

        std::vector<TransformCurve> curves;
        curves.push_back(exact_transform(s, lambda, grid));
        curves.push_back(exact_transform(s, lambda, grid, periodic));
        const auto exact = exact_moments(s, plan.dt, plan.n_terms);
        curves.push_back(reconstruct(exact, lambda, periodic, plan.n_terms, grid));

        const auto report = error_report(s, plan, window_grid);
        auto kv = io::plan_to_key_values(plan);
        append(kv, source_key_values(rec_src));
        kv.emplace_back("grid_count", std::to_string(rec_count));
        kv.emplace_back("range_lo", format_double(grid.front()));
        kv.emplace_back("range_hi", format_double(grid.back()));
        kv.emplace_back("eps_p_measured", format_double(report.eps_p_measured));
        kv.emplace_back("eps_n_measured", format_double(report.eps_n_measured));
        kv.emplace_back("eps_total_measured", format_double(report.eps_total_measured));
        kv.emplace_back("within_budget", report.within_budget() ? "true" : "false");

        if (!rec_moments.empty()) {
            std::istringstream in(io::read_file(rec_moments));
            const auto loaded = io::read_moments_csv(in);
            curves.push_back(reconstruct(loaded, lambda, periodic, plan.n_terms, grid));
            const auto in_window_loaded = reconstruct(loaded, lambda, periodic, plan.n_terms, window_grid);
            const auto in_window_exact = reconstruct(exact, lambda, periodic, plan.n_terms, window_grid);
            kv.emplace_back("moments.file", rec_moments);
            kv.emplace_back("moments.provenance", loaded.provenance == Provenance::exact ? "exact" : "sampled");
            kv.emplace_back("moments.shots_per_part", std::to_string(loaded.shots_per_part));
            kv.emplace_back("moments.seed", std::to_string(loaded.seed));
            kv.emplace_back("eps_s_measured",
                            format_double(plan.request.budget.omega_scale *
                                          max_abs_difference(in_window_loaded.values, in_window_exact.values)));
        }

        std::ostringstream csv;
        io::write_curves_csv(csv, curves);
        emit(csv.str(), rec_out);
        const auto meta = key_values_text(kv);
        if (!rec_meta.empty()) {
            io::write_file(rec_meta, meta);
        } else if (!rec_out.empty() && rec_out != "-") {
            io::write_file(rec_out + ".meta", meta);
        } else {
            std::cerr << meta;
        }
        return ok;
    }

    if (sweep_cmd->parsed()) {
        const auto rows = experiments::sweep(
            sweep_sc, experiments::log_spaced(sweep_range[0], sweep_range[1], sweep_count), sweep_grid);
        std::ostringstream csv;
        csv << "model,eps_target,period_general,period_moment,ratio,measured,bound,analytic_bound,n_terms\n";
        for (const auto &r : rows) {
            csv << r.model << ',' << format_double(r.eps_target) << ',' << format_double(r.period_general) << ','
                << format_double(r.period_moment) << ',' << format_double(r.ratio) << ',' << format_double(r.measured)
                << ',' << format_double(r.bound) << ',' << format_double(r.analytic_bound) << ',' << r.n_terms << '\n';
        }
        emit(csv.str(), sweep_out);
        return ok;
    }

    if (shot_cmd->parsed()) {
        const auto s = load_spectrum(shot_src, shot_opts);
        const auto plan = resolve_plan(shot_opts, shot_src, s);
        const auto rows = experiments::shots_coverage(s, plan, shot_factors, shot_seeds, shot_seed, shot_grid);
        std::ostringstream csv;
        csv << "factor,shots_per_part,total_shots,seeds,coverage,target_coverage,max_error,mean_error,eps_s\n";
        for (const auto &r : rows) {
            csv << format_double(r.factor) << ',' << r.shots_per_part << ',' << r.total_shots << ',' << r.seeds << ','
                << format_double(r.coverage) << ',' << format_double(1.0 - plan.request.budget.confidence_delta) << ','
                << format_double(r.max_error) << ',' << format_double(r.mean_error) << ',' << format_double(r.eps_s)
                << '\n';
        }
        emit(csv.str(), shot_out);
        return ok;
    }

    if (report_cmd->parsed()) {
        std::ostringstream out;
        for (const auto &e : experiments::reproduction_manifest()) {
            out << "# " << e.command << '\n' << e.key << '=' << e.value << '\n';
        }
        emit(out.str(), report_out);
        return ok;
    }
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const fgit::FormulaDomainError &e) {
        std::cerr << "formula precondition violated: " << e.what() << '\n';
        return formula_domain;
    } catch (const fgit::IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return io_failure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid_input;
    }
}
