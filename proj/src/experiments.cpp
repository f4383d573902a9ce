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

#include "fgit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fgit/errors.hpp"
#include "fgit/io.hpp"
#include "fgit/moments.hpp"
#include "fgit/transform.hpp"

namespace fgit::experiments {

PlanRequest model_request(const ModelScenario &sc, const DiscreteSpectrum &s, PlanMethod method, double eps_p,
                          double eps_n, double eps_s) {
    const auto summary = summarize(s, {2, 4});
    PlanRequest r;
    r.method = method;
    r.kernel = sc.kernel();
    r.budget = ErrorBudget{eps_p, eps_n, eps_s, sc.omega, 0.05};
    r.window = sc.window;
    r.mu0 = summary.mu0;
    r.mu1 = summary.mu1;
    r.sigma = summary.sigma;
    if (method == PlanMethod::central_moment) {
        r.order = 4;
        r.mu_tilde = summary.central.at(4) / summary.mu0;
    }
    return r;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    detail::require(lo > 0 && hi >= lo && count >= 1, "log_spaced: need 0 < lo <= hi and count >= 1");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        out[i] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<SweepRow> sweep(const ModelScenario &sc, const std::vector<double> &eps_targets, std::size_t grid_count) {
    std::vector<SweepRow> rows;
    const auto grid = uniform_grid(sc.window, grid_count);
    for (auto kind : {ModelKind::A, ModelKind::B}) {
        const auto spectrum = make_model(kind, sc.n_eigen, sc.model);
        for (double eps : eps_targets) {
            const auto req = model_request(sc, spectrum, PlanMethod::variance, eps, eps);
            const auto plan = make_plan(req);
            const auto general = chi_general(req.kernel, req.budget, req.mu0);
            const auto excess = replica_excess(spectrum, req.kernel.lambda, grid, plan.periodic());

            SweepRow row;
            row.model = kind == ModelKind::A ? 'A' : 'B';
            row.eps_target = eps;
            row.period_general = general.period;
            row.period_moment = plan.period;
            row.ratio = plan.period / general.period;
            row.measured = sc.omega * *std::max_element(excess.begin(), excess.end());
            row.bound = eps;
            row.analytic_bound = plan.choice.analytic_bound;
            row.n_terms = plan.n_terms;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<CoverageRow> shots_coverage(const DiscreteSpectrum &s, const ExtensionPlan &plan,
                                        const std::vector<double> &factors, int seeds, std::uint64_t first_seed,
                                        std::size_t grid_count) {
    detail::require(seeds >= 1, "shots_coverage: need at least one seed");
    const auto &req = plan.request;
    const auto window = req.window.value_or(FrequencyWindow{-req.kernel.norm_scale, req.kernel.norm_scale});
    const auto grid = uniform_grid(window, grid_count);
    const auto periodic = plan.periodic();
    const auto exact = exact_moments(s, periodic.dt, plan.n_terms);
    const auto reference = reconstruct(exact, req.kernel.lambda, periodic, plan.n_terms, grid);
    const double omega = req.budget.omega_scale;

    std::vector<CoverageRow> rows;
    for (double factor : factors) {
        detail::require(factor > 0, "shots_coverage: factors must be positive");
        CoverageRow row;
        row.factor = factor;
        row.shots_per_part = std::max<std::int64_t>(1, std::llround(static_cast<double>(plan.shots_per_part) * factor));
        row.total_shots = row.shots_per_part * 2 * plan.n_terms;
        row.seeds = seeds;
        row.eps_s = req.budget.eps_s;
        int covered = 0;
        double sum = 0.0;
        for (int i = 0; i < seeds; ++i) {
            const auto sampled = sample_from_exact(
                exact, SamplingOptions{row.shots_per_part, first_seed + static_cast<std::uint64_t>(i)});
            const auto rec = reconstruct(sampled, req.kernel.lambda, periodic, plan.n_terms, grid);
            const double err = omega * max_abs_difference(rec.values, reference.values);
            covered += err <= row.eps_s ? 1 : 0;
            sum += err;
            row.max_error = std::max(row.max_error, err);
        }
        row.coverage = static_cast<double>(covered) / seeds;
        row.mean_error = sum / seeds;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::vector<ManifestEntry> reproduction_manifest() {
    using io::format_double;
    std::vector<ManifestEntry> out;
    const ModelScenario sc;
    const auto kernel = sc.kernel();
    out.push_back({"model.lambda", format_double(kernel.lambda), "fgit plan --method general"});

    const auto a = make_model(ModelKind::A);
    const auto b = make_model(ModelKind::B);
    const auto sa = summarize(a);
    const auto sb = summarize(b);
    out.push_back({"model.A.mu1", fixed3(sa.mu1), "fgit model --kind A"});
    out.push_back({"model.A.sigma", fixed3(sa.sigma), "fgit model --kind A"});
    out.push_back({"model.B.mu1", fixed3(sb.mu1), "fgit model --kind B"});
    out.push_back({"model.B.sigma", fixed3(sb.sigma), "fgit model --kind B"});

    const auto gen = make_plan(model_request(sc, b, PlanMethod::general, 0.01, 0.01));
    const auto var_a = make_plan(model_request(sc, a, PlanMethod::variance, 0.01, 0.01));
    const auto var_b = make_plan(model_request(sc, b, PlanMethod::variance, 0.01, 0.01));
    out.push_back({"model.general.chi", format_double(gen.chi), "fgit plan --method general"});
    out.push_back({"model.general.n_terms", std::to_string(gen.n_terms), "fgit plan --method general"});
    out.push_back({"model.A.period_ratio", fixed3(var_a.period / gen.period), "fgit plan --method variance --model A"});
    out.push_back({"model.B.period_ratio", fixed3(var_b.period / gen.period), "fgit plan --method variance --model B"});
    out.push_back({"model.A.variance.n_terms", std::to_string(var_a.n_terms), "fgit plan --method variance --model A"});
    out.push_back({"model.B.variance.n_terms", std::to_string(var_b.n_terms), "fgit plan --method variance --model B"});

    const auto grid = uniform_grid(sc.window);
    const auto rep_gen = error_report(b, gen, grid);
    const auto rep_var = error_report(b, var_b, grid);
    out.push_back({"model.B.general.eps_p_measured", format_double(rep_gen.eps_p_measured),
                   "fgit reconstruct --model B --method general"});
    out.push_back({"model.B.variance.eps_p_measured", format_double(rep_var.eps_p_measured),
                   "fgit reconstruct --model B --method variance"});

    const NuclearScenario nuc;
    const auto nk = KernelSpec::from_resolution(nuc.delta, nuc.sigma_leak, nuc.norm);
    const auto nb = ErrorBudget::uniform(nuc.eps, nuc.omega);
    const std::string nuclear_flags = " --delta 1 --Sigma 0.01 --eps 0.01 --omega 1 --norm 7987.5";
    out.push_back({"nuclear.lambda", format_double(nk.lambda), "fgit plan --method general" + nuclear_flags});

    PlanRequest gt;
    gt.method = PlanMethod::variance;
    gt.kernel = nk;
    gt.budget = nb;
    gt.window = FrequencyWindow{0.0, 100.0};
    gt.mu1 = 20.0;
    gt.sigma = 22.0;
    const auto gt_plan = make_plan(gt);
    const std::string gt_cmd = "fgit plan --method variance --mu1 20 --sigma 22 --window 0 100" + nuclear_flags;
    out.push_back({"nuclear.dipole.variance.period", format_double(gt_plan.period), gt_cmd});
    out.push_back({"nuclear.dipole.variance.n_terms", std::to_string(gt_plan.n_terms), gt_cmd});

    PlanRequest general = gt;
    general.method = PlanMethod::general;
    const auto gen_plan = make_plan(general);
    out.push_back(
        {"nuclear.general.n_terms", std::to_string(gen_plan.n_terms), "fgit plan --method general" + nuclear_flags});
    const double inverted = norm_for_general_terms(42372.0, nk.lambda, nuc.sigma_leak, nb);
    out.push_back({"nuclear.general.norm_for_42372", format_double(inverted), "fgit report"});
    general.kernel = KernelSpec::from_resolution(nuc.delta, nuc.sigma_leak, inverted);
    out.push_back(
        {"nuclear.general.n_terms_at_inverted_norm", std::to_string(make_plan(general).n_terms), "fgit report"});

    PlanRequest qe = gt;
    qe.mu1 = 400.0 * 400.0 / (2.0 * 939.0);
    qe.sigma = 250.0;
    qe.window = FrequencyWindow{0.0, 400.0};
    const std::string qe_cmd =
        "fgit plan --method variance --mu1 85.197018104366351 --sigma 250 --window 0 400" + nuclear_flags;
    out.push_back({"nuclear.quasielastic.max_side.n_terms", std::to_string(make_plan(qe).n_terms), qe_cmd});
    qe.offset = WindowOffset::min_side;
    out.push_back({"nuclear.quasielastic.min_side.n_terms", std::to_string(make_plan(qe).n_terms),
                   qe_cmd + " --offset min_side"});
    return out;
}

} // namespace fgit::experiments
