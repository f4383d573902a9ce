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

#include "fgit/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fgit/errors.hpp"

namespace fgit {

const char *to_string(CurveKind kind) {
    switch (kind) {
    case CurveKind::exact_gaussian:
        return "exact_gaussian";
    case CurveKind::exact_periodic:
        return "exact_periodic";
    case CurveKind::reconstructed:
        return "reconstructed";
    case CurveKind::sampled_reconstructed:
        return "sampled_reconstructed";
    }
    return "?";
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    detail::require(lo <= hi, "grid: lower end exceeds upper end");
    detail::require(count >= 1, "grid: need at least one point");
    std::vector<double> g(count);
    if (count == 1) {
        g[0] = lo;
        return g;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = lo + step * static_cast<double>(i);
    }
    g.back() = hi;
    return g;
}

std::vector<double> uniform_grid(const FrequencyWindow &window, std::size_t count) {
    return uniform_grid(window.nu_min, window.nu_max, count);
}

TransformCurve exact_transform(const DiscreteSpectrum &s, double lambda, const std::vector<double> &grid,
                               const std::optional<PeriodicKernelParams> &periodic) {
    detail::require(lambda > 0, "exact_transform: lambda must be positive");
    TransformCurve c;
    c.grid = grid;
    c.kind = periodic ? CurveKind::exact_periodic : CurveKind::exact_gaussian;
    c.values.resize(grid.size());
    const auto f = s.frequencies();
    const auto w = s.weights();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (w[k] == 0.0) {
                continue;
            }
            acc += w[k] * (periodic ? periodic_kernel(grid[i], f[k], lambda, *periodic)
                                    : gaussian_kernel(grid[i], f[k], lambda));
        }
        c.values[i] = acc;
    }
    return c;
}

std::vector<double> replica_excess(const DiscreteSpectrum &s, double lambda, const std::vector<double> &grid,
                                   const PeriodicKernelParams &periodic) {
    std::vector<double> out(grid.size());
    const auto f = s.frequencies();
    const auto w = s.weights();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (w[k] != 0.0) {
                acc += w[k] * replica_sum(grid[i], f[k], lambda, periodic);
            }
        }
        out[i] = acc;
    }
    return out;
}

TransformCurve reconstruct(const FourierMomentSet &moments, double lambda, const PeriodicKernelParams &periodic,
                           long n_terms, const std::vector<double> &grid) {
    if (std::abs(moments.dt - periodic.dt) > 1e-12 * periodic.dt) {
        throw InvalidInput("reconstruct: moment time step does not match the kernel period");
    }
    if (n_terms < 0 || n_terms > moments.n_max()) {
        throw InvalidInput("reconstruct: n_terms exceeds the available moments");
    }
    TransformCurve c;
    c.grid = grid;
    c.kind = moments.provenance == Provenance::exact ? CurveKind::reconstructed : CurveKind::sampled_reconstructed;
    c.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::complex<double> acc = moments.values[0];
        for (long n = 1; n <= n_terms; ++n) {
            acc += fourier_coefficient(n, grid[i], lambda, periodic) * moments.at(n);
            acc += fourier_coefficient(-n, grid[i], lambda, periodic) * moments.at(-n);
        }
        acc /= periodic.period;
        c.values[i] = acc.real();
        c.imag_residue = std::max(c.imag_residue, std::abs(acc.imag()));
    }
    return c;
}

double max_abs_difference(const std::vector<double> &a, const std::vector<double> &b) {
    detail::require(a.size() == b.size(), "curve sizes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

ErrorReport error_report(const DiscreteSpectrum &s, const ExtensionPlan &plan, const std::vector<double> &grid) {
    detail::require(!grid.empty(), "error_report: empty frequency grid");
    const double lambda = plan.request.kernel.lambda;
    const double omega = plan.request.budget.omega_scale;
    const auto periodic = plan.periodic();

    const auto gaussian = exact_transform(s, lambda, grid);
    const auto excess = replica_excess(s, lambda, grid, periodic);
    std::vector<double> periodic_values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        periodic_values[i] = gaussian.values[i] + excess[i];
    }
    const auto moments = exact_moments(s, periodic.dt, plan.n_terms);
    const auto rec = reconstruct(moments, lambda, periodic, plan.n_terms, grid);

    ErrorReport r;
    r.eps_p_measured = omega * *std::max_element(excess.begin(), excess.end());
    r.eps_n_measured = omega * max_abs_difference(rec.values, periodic_values);
    r.eps_total_measured = omega * max_abs_difference(rec.values, gaussian.values);
    r.eps_p_budget = plan.request.budget.eps_p;
    r.eps_n_budget = plan.request.budget.eps_n;
    return r;
}

TransformCurve rescale_to_dimensionless(const TransformCurve &curve, double d_omega) {
    detail::require(d_omega > 0 && std::isfinite(d_omega), "rescale: d_omega must be positive");
    TransformCurve out = curve;
    for (auto &v : out.values) {
        v *= d_omega;
    }
    out.imag_residue *= d_omega;
    out.scale_note = curve.scale_note.value_or(1.0) * d_omega;
    return out;
}

} // namespace fgit
