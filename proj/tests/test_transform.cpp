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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fgit/errors.hpp"
#include "fgit/experiments.hpp"
#include "fgit/moments.hpp"
#include "fgit/transform.hpp"

using namespace fgit;

namespace {

const double pi = std::acos(-1.0);
const experiments::ModelScenario scenario;

ExtensionPlan model_plan(const DiscreteSpectrum &s, PlanMethod method, double eps) {
    return make_plan(experiments::model_request(scenario, s, method, eps, eps));
}

double max_abs(const std::vector<double> &v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

} // namespace

TEST_CASE("grids") {
    const auto g = uniform_grid(-1.0, -0.8, 1024);
    CHECK(g.size() == 1024);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == -0.8);
    CHECK(uniform_grid(0.3, 0.3, 1).front() == 0.3);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 4), InvalidInput);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 0), InvalidInput);
}

TEST_CASE("exact transform") {
    const double lambda = scenario.kernel().lambda;
    const DiscreteSpectrum single({0.25}, {1.0});
    CHECK(exact_transform(single, lambda, {0.25}).values[0] == doctest::Approx(1 / (std::sqrt(2 * pi) * lambda)));

    const auto a = make_model(ModelKind::A);
    const double d_omega = 2.0 / 512.0;
    std::vector<double> mid(512);
    for (int i = 0; i < 512; ++i) {
        mid[i] = -1.0 + (i + 0.5) * d_omega;
    }
    const auto phi = exact_transform(a, lambda, mid);
    double integral = 0.0;
    for (double v : phi.values) {
        CHECK(v >= 0.0);
        integral += v * d_omega;
    }
    CHECK(std::abs(integral - 1.0) <= 2 * scenario.sigma_leak);

    const auto fine = uniform_grid(-1.0, -0.5, 4001);
    const auto curve = exact_transform(a, lambda, fine);
    const auto peak = std::max_element(curve.values.begin(), curve.values.end()) - curve.values.begin();
    const auto sa = summarize(a);
    CHECK(std::abs(fine[static_cast<std::size_t>(peak)] - sa.mu1) <= scenario.delta);

    const auto scaled = rescale_to_dimensionless(phi, d_omega);
    const auto w = a.weights();
    const double w_max = *std::max_element(w.begin(), w.end());
    CHECK(max_abs(scaled.values) / w_max == doctest::Approx(1.0).epsilon(0.5));
    REQUIRE(scaled.scale_note.has_value());
    CHECK(*scaled.scale_note == d_omega);
}

TEST_CASE("rescaling") {
    const auto a = make_model(ModelKind::A);
    const auto phi = exact_transform(a, 0.0066, uniform_grid(-1.0, -0.8, 64));
    const auto back = rescale_to_dimensionless(rescale_to_dimensionless(phi, 2.0 / 512.0), 512.0 / 2.0);
    for (std::size_t i = 0; i < phi.values.size(); ++i) {
        CHECK(back.values[i] == doctest::Approx(phi.values[i]).epsilon(1e-15));
    }
    CHECK(rescale_to_dimensionless(phi, 1.0).values == phi.values);
    CHECK_THROWS_AS(rescale_to_dimensionless(phi, 0.0), InvalidInput);
}

TEST_CASE("reconstruction input checks") {
    const auto b = make_model(ModelKind::B);
    const auto plan = model_plan(b, PlanMethod::variance, 0.01);
    const auto m = exact_moments(b, plan.dt, plan.n_terms);
    const auto grid = uniform_grid(scenario.window, 16);
    CHECK_THROWS_AS(reconstruct(m, 0.0066, plan.periodic(), plan.n_terms + 1, grid), InvalidInput);
    auto other = plan.periodic();
    other = PeriodicKernelParams::from_period(other.period * 1.001, 0.0066);
    CHECK_THROWS_AS(reconstruct(m, 0.0066, other, plan.n_terms, grid), InvalidInput);
    CHECK_THROWS_AS(error_report(b, plan, {}), InvalidInput);
}

TEST_CASE("reconstruction is real and periodic") {
    for (auto kind : {ModelKind::A, ModelKind::B}) {
        const auto s = make_model(kind);
        const auto plan = model_plan(s, PlanMethod::variance, 0.01);
        const double lambda = plan.request.kernel.lambda;
        const auto m = exact_moments(s, plan.dt, plan.n_terms);
        const auto grid = uniform_grid(-1.0, 1.0, 257);
        auto shifted = grid;
        for (auto &x : shifted) {
            x += plan.period;
        }
        const auto r = reconstruct(m, lambda, plan.periodic(), plan.n_terms, grid);
        const auto rs = reconstruct(m, lambda, plan.periodic(), plan.n_terms, shifted);
        const double scale = max_abs(r.values);
        CHECK(r.imag_residue < 1e-10 * scale);
        CHECK(r.kind == CurveKind::reconstructed);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(rs.values[i] - r.values[i]) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("reconstruction matches the periodic oracle on small spectra") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t size = 1; size <= 8; ++size) {
        std::vector<double> f(size), w(size);
        for (std::size_t k = 0; k < size; ++k) {
            f[k] = u(rng);
            w[k] = std::abs(u(rng)) + 0.01;
        }
        const auto s = DiscreteSpectrum::from_unsorted(f, w).normalized();
        const double lambda = 0.01 + 0.02 * std::abs(u(rng));
        const double period = 0.3 + 2.0 * std::abs(u(rng));
        const auto p = PeriodicKernelParams::from_period(period, lambda);
        long n = 1;
        while (truncation_error_bound(n, lambda, period) >= 1e-10) {
            ++n;
        }
        const auto grid = uniform_grid(-1.0, 1.0, 301);
        const auto rec = reconstruct(exact_moments(s, p.dt, n), lambda, p, n, grid);
        const auto oracle = exact_transform(s, lambda, grid, p);
        CHECK(max_abs_difference(rec.values, oracle.values) < 1e-9);
    }
}

TEST_CASE("measured truncation error stays under its bound") {
    const auto b = make_model(ModelKind::B);
    const auto plan = model_plan(b, PlanMethod::variance, 0.01);
    const double lambda = plan.request.kernel.lambda;
    const auto p = plan.periodic();
    const auto grid = uniform_grid(scenario.window, 256);
    const auto oracle = exact_transform(b, lambda, grid, p);
    const auto m = exact_moments(b, p.dt, 60);
    double prev = std::numeric_limits<double>::infinity();
    for (long n = 1; n <= 60; ++n) {
        const double bound = truncation_error_bound(n, lambda, p.period);
        CHECK(bound <= prev);
        prev = bound;
        const auto rec = reconstruct(m, lambda, p, n, grid);
        CHECK(max_abs_difference(rec.values, oracle.values) <= bound * (1 + 1e-9) + 1e-12);
    }
}

TEST_CASE("measured periodic-extension errors for model B") {
    const auto b = make_model(ModelKind::B);
    const auto grid = uniform_grid(scenario.window);
    const auto general = error_report(b, model_plan(b, PlanMethod::general, 0.01), grid);
    CHECK(general.eps_p_measured <= 1e-6);
    CHECK(general.eps_p_measured == doctest::Approx(3.39e-9).epsilon(0.01));
    CHECK(general.within_budget());
    const auto variance = error_report(b, model_plan(b, PlanMethod::variance, 0.01), grid);
    CHECK(variance.eps_p_measured <= 1e-3);
    CHECK(variance.eps_p_measured >= 1e-5);
    CHECK(variance.within_budget());
    CHECK(variance.eps_total_measured <= variance.eps_p_measured + variance.eps_n_measured + 1e-15);
}

TEST_CASE("a long period adds no replica error") {
    const auto a = make_model(ModelKind::A);
    auto plan = model_plan(a, PlanMethod::general, 0.01);
    const auto excess = replica_excess(a, plan.request.kernel.lambda, uniform_grid(-1.0, 1.0, 512),
                                       PeriodicKernelParams::from_period(10.0, plan.request.kernel.lambda));
    CHECK(max_abs(excess) * scenario.omega < 1e-12);
}

TEST_CASE("measured errors never exceed their budgets") {
    const auto grid = uniform_grid(scenario.window, 512);
    for (auto kind : {ModelKind::A, ModelKind::B}) {
        const auto s = make_model(kind);
        for (double eps : {1e-4, 1e-3, 1e-2, 1e-1}) {
            for (auto method : {PlanMethod::general, PlanMethod::variance, PlanMethod::central_moment}) {
                CAPTURE(eps);
                CAPTURE(static_cast<int>(method));
                const auto r = error_report(s, model_plan(s, method, eps), grid);
                CHECK(r.eps_p_measured <= eps);
                CHECK(r.eps_n_measured <= eps);
            }
        }
    }
}

TEST_CASE("target sweep") {
    const auto rows = experiments::sweep(scenario, experiments::log_spaced(1e-4, 1e-1, 10), 512);
    REQUIRE(rows.size() == 20);
    for (const auto &r : rows) {
        CHECK(r.measured <= r.bound);
        CHECK(r.measured <= r.analytic_bound);
        CHECK(r.ratio < 1.0);
    }
    // Model A rows run from the smallest target; the last decade is rows 0..3.
    std::vector<double> slopes;
    for (int i = 3; i > 0; --i) {
        const auto &hi = rows[static_cast<std::size_t>(i)];
        const auto &lo = rows[static_cast<std::size_t>(i - 1)];
        slopes.push_back(std::log(hi.measured / lo.measured) / std::log(hi.eps_target / lo.eps_target));
    }
    CHECK(slopes[1] > slopes[0]);
    CHECK(slopes[2] > slopes[1]);
    CHECK(rows[9].bound / rows[9].measured > 10);
    CHECK(rows[19].bound / rows[19].measured > 10);
}
