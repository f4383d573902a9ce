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

#include "fgit/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fgit/errors.hpp"

namespace fgit {

using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

// sqrt(log(x)) for x > 1, else 0 (the branch carries no constraint).
double sqrt_log_or_zero(double x) { return x > 1.0 ? std::sqrt(std::log(x)) : 0.0; }

double window_offset(const FrequencyWindow &w, double mu1, WindowOffset kind) {
    const double below = mu1 - w.nu_min;
    const double above = w.nu_max - mu1;
    switch (kind) {
    case WindowOffset::max_side:
        return std::max(below, above);
    case WindowOffset::min_side:
        return std::min(below, above);
    case WindowOffset::span:
        return w.span();
    }
    return std::max(below, above);
}

// Central-peak leakage bound shared by all period choices: replicas at
// distance >= reach_eta from the kept region.
double replica_leak_bound(double lambda, double period, double mu0, double reach_eta) {
    return 2.0 * mu0 / (std::sqrt(2.0 * pi) * lambda) * (1.0 + std::sqrt(pi / 2.0) * lambda / period) *
           std::exp(-reach_eta * reach_eta / (2.0 * lambda * lambda));
}

void check_inputs(const KernelSpec &kernel, const ErrorBudget &budget, double mu0) {
    kernel.validate();
    budget.validate();
    detail::require(mu0 > 0 && std::isfinite(mu0), "planner: mu0 must be positive");
}

} // namespace

ErrorBudget ErrorBudget::equal_split(double total, double omega_scale, double confidence_delta) {
    ErrorBudget b{total / 3.0, total / 3.0, total / 3.0, omega_scale, confidence_delta};
    b.validate();
    return b;
}

ErrorBudget ErrorBudget::uniform(double eps, double omega_scale, double confidence_delta) {
    ErrorBudget b{eps, eps, eps, omega_scale, confidence_delta};
    b.validate();
    return b;
}

void ErrorBudget::validate() const {
    using detail::require;
    require(eps_p > 0 && eps_n > 0 && eps_s > 0, "budget: all error budgets must be positive");
    require(omega_scale > 0 && std::isfinite(omega_scale), "budget: omega must be positive");
    require(confidence_delta > 0 && confidence_delta < 1, "budget: confidence delta must lie in (0, 1)");
}

void FrequencyWindow::validate(double norm_scale) const {
    detail::require(nu_min <= nu_max, "window: nu_min must not exceed nu_max");
    detail::require(nu_min >= -norm_scale * (1 + 1e-12) && nu_max <= norm_scale * (1 + 1e-12),
                    "window: must lie inside [-norm, norm]");
}

PeriodChoice chi_general(const KernelSpec &kernel, const ErrorBudget &budget, double mu0, ChiMode mode,
                         const std::optional<FrequencyWindow> &window) {
    check_inputs(kernel, budget, mu0);
    const double L = kernel.lambda;
    const double H = kernel.norm_scale;
    const double omega = budget.omega_scale;
    PeriodChoice c;
    double replica_gap = 0.0;
    if (mode == ChiMode::practical) {
        const double arg = 2.0 * omega / (budget.eps_p * L);
        if (arg <= 1.0) {
            c.clamped = true;
            c.warnings.emplace_back("chi_general: log argument <= 1, using chi = 2");
        }
        c.chi = 2.0 + sqrt2 * L / H * sqrt_log_or_zero(arg);
        c.period = c.chi * H;
        c.eta = c.chi - 2.0;
        c.offset = H;
        replica_gap = c.period - 2.0 * H;
    } else {
        if (!window) {
            throw InvalidInput("chi_general: full mode needs a frequency window");
        }
        window->validate(H);
        const double arg = std::sqrt(2.0 / pi) * mu0 / budget.eps_p * omega / L * (1.0 + std::sqrt(pi / 2.0) * L / H);
        if (arg <= 1.0) {
            c.clamped = true;
            c.warnings.emplace_back("chi_general: log argument <= 1, using eta = 0");
        }
        c.eta = sqrt2 * L / H * sqrt_log_or_zero(arg);
        c.offset = std::max(std::abs(window->nu_min), window->nu_max);
        c.period = (1.0 + c.eta) * H + c.offset;
        c.chi = c.period / H;
        replica_gap = c.eta * H;
    }
    c.reach = H;
    c.analytic_bound = omega * replica_leak_bound(L, c.period, mu0, replica_gap);
    return c;
}

namespace {

PeriodChoice moment_period(int order, double mu_tilde, const KernelSpec &kernel, const ErrorBudget &budget, double mu0,
                           double mu1, const FrequencyWindow &window, WindowOffset offset) {
    const double L = kernel.lambda;
    const double omega = budget.omega_scale;
    const double eps = budget.eps_p;
    const double n = order;
    const double scale = std::pow(mu_tilde, 1.0 / n);

    // alpha * scale >= sqrt(2) L max[sqrt(log(c mu0 Omega/(eps L))), (mu~ Omega/eps)^(1/(n+1)) 0.9/L]
    const double log_const = order == 2 ? 3.6 : 4.0;
    const double log_branch = sqrt_log_or_zero(log_const * mu0 * omega / (eps * L));
    const double power_branch = std::pow(mu_tilde * omega / eps, 1.0 / (n + 1.0)) * 0.9 / L;

    PeriodChoice c;
    c.order = order;
    c.reach = sqrt2 * L * std::max(log_branch, power_branch);
    c.alpha = scale > 0 ? c.reach / scale : std::numeric_limits<double>::infinity();
    const double eta_log = sqrt_log_or_zero(std::sqrt(8.0 / pi) * mu0 / eps * omega / L * (1.0 + std::sqrt(pi / 2.0)));
    c.eta = c.reach > 0 ? sqrt2 * L / c.reach * eta_log : 0.0;
    c.offset = window_offset(window, mu1, offset);
    c.period = (1.0 + c.eta) * c.reach + c.offset;
    c.chi = c.period / kernel.norm_scale;

    const double tail_term = std::isfinite(c.alpha) ? mu0 / (c.period * std::pow(c.alpha, n)) : 0.0;
    c.analytic_bound = omega * (tail_term + replica_leak_bound(L, c.period, mu0, c.eta * c.reach));
    return c;
}

void warn_if_no_saving(PeriodChoice &c, const KernelSpec &kernel, const ErrorBudget &budget, double mu0) {
    const auto general = chi_general(kernel, budget, mu0);
    if (c.period > general.period) {
        std::ostringstream os;
        os << "moment-informed period " << c.period << " exceeds the general period " << general.period
           << " (no saving)";
        c.warnings.push_back(os.str());
    }
}

} // namespace

PeriodChoice chi_with_variance(const KernelSpec &kernel, const ErrorBudget &budget, double mu0, double mu1,
                               double sigma, const FrequencyWindow &window, WindowOffset offset) {
    check_inputs(kernel, budget, mu0);
    window.validate(kernel.norm_scale);
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw FormulaDomainError("chi_with_variance: sigma must be positive (use chi_general)");
    }
    auto c = moment_period(2, sigma * sigma, kernel, budget, mu0, mu1, window, offset);
    warn_if_no_saving(c, kernel, budget, mu0);
    return c;
}

PeriodChoice chi_with_central_moment(int order, double mu_tilde_n, const KernelSpec &kernel, const ErrorBudget &budget,
                                     double mu0, double mu1, const FrequencyWindow &window, WindowOffset offset,
                                     CentralMode mode) {
    check_inputs(kernel, budget, mu0);
    window.validate(kernel.norm_scale);
    detail::require(order >= 2, "chi_with_central_moment: order must be at least 2");
    detail::require(mu_tilde_n >= 0 && std::isfinite(mu_tilde_n),
                    "chi_with_central_moment: central moment must be non-negative");

    if (mode == CentralMode::bound) {
        auto c = moment_period(order, mu_tilde_n, kernel, budget, mu0, mu1, window, offset);
        warn_if_no_saving(c, kernel, budget, mu0);
        return c;
    }

    if (order > 15) {
        throw FormulaDomainError("chi_with_central_moment: simplified form holds only up to order 15");
    }
    const double n = order;
    if (std::pow(mu_tilde_n, 1.0 / n) < kernel.lambda) {
        throw FormulaDomainError("chi_with_central_moment: simplified form needs mu~_n^(1/n) >= lambda");
    }
    PeriodChoice c;
    c.order = order;
    c.reach = 2.7 * std::pow(budget.omega_scale * mu_tilde_n / budget.eps_p, 1.0 / (n + 1.0));
    c.alpha = c.reach / std::pow(mu_tilde_n, 1.0 / n);
    c.offset = window.span();
    c.period = c.reach + c.offset;
    c.chi = c.period / kernel.norm_scale;
    c.analytic_bound = std::numeric_limits<double>::quiet_NaN();
    warn_if_no_saving(c, kernel, budget, mu0);
    return c;
}

double n_terms_bound(double chi, const KernelSpec &kernel, const ErrorBudget &budget, double mu0, TermsMode mode) {
    check_inputs(kernel, budget, mu0);
    detail::require(chi > 0 && std::isfinite(chi), "n_terms: chi must be positive");
    const double L = kernel.lambda;
    const double P = chi * kernel.norm_scale;
    const double omega = budget.omega_scale;
    double prefactor = 0.0;
    double arg = 0.0;
    if (mode == TermsMode::standard) {
        prefactor = P / (std::sqrt(2.0 * pi) * L);
        arg = 0.4 * omega / (budget.eps_n * L);
    } else {
        prefactor = P / (sqrt2 * pi * L);
        arg = mu0 * omega / (std::sqrt(2.0 * pi) * L * budget.eps_n);
    }
    if (!(arg > 1.0)) {
        throw FormulaDomainError("n_terms: logarithm argument <= 1 (truncation budget too loose)");
    }
    return prefactor * std::sqrt(std::log(arg));
}

long n_terms(double chi, const KernelSpec &kernel, const ErrorBudget &budget, double mu0, TermsMode mode) {
    const double bound = n_terms_bound(chi, kernel, budget, mu0, mode);
    return std::max(1L, static_cast<long>(std::ceil(bound)));
}

double truncation_error_bound(long n_terms, double lambda, double period, double mu0) {
    return mu0 / (std::sqrt(2.0 * pi) * lambda) *
           std::erfc(static_cast<double>(n_terms) * sqrt2 * pi * lambda / period);
}

double shots_bound(long n_terms, double period, const KernelSpec &kernel, const ErrorBudget &budget, double mu0,
                   ShotMode mode) {
    check_inputs(kernel, budget, mu0);
    detail::require(n_terms >= 0, "shots: n_terms must be non-negative");
    const double L = kernel.lambda;
    const double ratio = budget.omega_scale / budget.eps_s;
    const double log_term = std::log(2.0 / budget.confidence_delta);
    const auto N = static_cast<double>(n_terms);
    switch (mode) {
    case ShotMode::conservative:
        return N * ratio * ratio * mu0 * mu0 / (L * L) * log_term;
    case ShotMode::uncorrelated:
        return N * ratio * ratio * mu0 * mu0 / (period * L) * log_term;
    case ShotMode::chebyshev:
        return 2.0 * N * ratio * ratio / (L * L) * log_term;
    }
    return 0.0;
}

std::int64_t shots(long n_terms, double period, const KernelSpec &kernel, const ErrorBudget &budget, double mu0,
                   ShotMode mode) {
    const double s = std::ceil(shots_bound(n_terms, period, kernel, budget, mu0, mode));
    if (!(s < 9.0e18)) {
        throw FormulaDomainError("shots: sample count overflows 64-bit range");
    }
    return static_cast<std::int64_t>(s);
}

PeriodicKernelParams ExtensionPlan::periodic() const {
    return PeriodicKernelParams::from_period(period, request.kernel.lambda, request.kernel.norm_scale);
}

ExtensionPlan make_plan(const PlanRequest &request) {
    ExtensionPlan plan;
    plan.request = request;
    plan.method = request.method;
    const auto &k = request.kernel;
    const auto &b = request.budget;

    auto need_window = [&]() -> const FrequencyWindow & {
        if (!request.window) {
            throw InvalidInput("plan: moment-informed methods need a frequency window");
        }
        return *request.window;
    };

    switch (request.method) {
    case PlanMethod::general:
        plan.choice = chi_general(k, b, request.mu0, request.chi_mode, request.window);
        break;
    case PlanMethod::variance:
        if (!(request.sigma > 0)) {
            plan.method = PlanMethod::general;
            plan.warnings.emplace_back("variance plan: sigma <= 0, fell back to the general period");
            plan.choice = chi_general(k, b, request.mu0, request.chi_mode, request.window);
        } else {
            plan.choice =
                chi_with_variance(k, b, request.mu0, request.mu1, request.sigma, need_window(), request.offset);
        }
        break;
    case PlanMethod::central_moment:
        plan.choice = chi_with_central_moment(request.order, request.mu_tilde, k, b, request.mu0, request.mu1,
                                              need_window(), request.offset, request.central_mode);
        if (request.order != 2 && request.sigma > 0) {
            const auto order2 =
                chi_with_variance(k, b, request.mu0, request.mu1, request.sigma, need_window(), request.offset);
            if (order2.period < plan.choice.period) {
                std::ostringstream os;
                os << "order-" << request.order << " period " << plan.choice.period << " exceeds the variance period "
                   << order2.period << " (no saving over order 2)";
                plan.warnings.push_back(os.str());
            }
        }
        break;
    }
    for (const auto &w : plan.choice.warnings) {
        plan.warnings.push_back(w);
    }

    if (request.cap_at_general && plan.method != PlanMethod::general) {
        auto general = chi_general(k, b, request.mu0);
        if (general.period < plan.choice.period) {
            plan.method = PlanMethod::general;
            plan.choice = general;
            plan.warnings.emplace_back("capped at the general period");
        }
    }

    plan.period = plan.choice.period;
    plan.chi = plan.choice.chi;
    plan.dt = 2.0 * pi / plan.period;
    plan.n_terms = n_terms(plan.chi, k, b, request.mu0, request.terms_mode);
    plan.total_shots = shots(plan.n_terms, plan.period, k, b, request.mu0, request.shot_mode);
    plan.shots_per_part = plan.n_terms > 0 ? (plan.total_shots + 2 * plan.n_terms - 1) / (2 * plan.n_terms) : 0;
    return plan;
}

double norm_for_general_terms(double target_terms, double lambda, double sigma_leak, const ErrorBudget &budget,
                              TermsMode mode) {
    detail::require(target_terms > 0, "norm_for_general_terms: target must be positive");
    auto terms_at = [&](double norm) {
        const auto kernel = KernelSpec::from_width(lambda, sigma_leak, norm);
        const auto choice = chi_general(kernel, budget, 1.0);
        return n_terms_bound(choice.chi, kernel, budget, 1.0, mode);
    };
    double lo = lambda * 1e-6;
    double hi = lambda;
    while (terms_at(hi) < target_terms) {
        hi *= 2.0;
        if (hi > 1e300) {
            throw FormulaDomainError("norm_for_general_terms: target unreachable");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (terms_at(mid) < target_terms ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

const char *to_string(PlanMethod m) {
    switch (m) {
    case PlanMethod::general:
        return "general";
    case PlanMethod::variance:
        return "variance";
    case PlanMethod::central_moment:
        return "central_moment";
    }
    return "?";
}

const char *to_string(WindowOffset o) {
    switch (o) {
    case WindowOffset::max_side:
        return "max_side";
    case WindowOffset::min_side:
        return "min_side";
    case WindowOffset::span:
        return "span";
    }
    return "?";
}

const char *to_string(ChiMode m) { return m == ChiMode::practical ? "practical" : "full"; }
const char *to_string(CentralMode m) { return m == CentralMode::bound ? "bound" : "simplified"; }
const char *to_string(TermsMode m) { return m == TermsMode::standard ? "standard" : "tight"; }

const char *to_string(ShotMode m) {
    switch (m) {
    case ShotMode::conservative:
        return "conservative";
    case ShotMode::uncorrelated:
        return "uncorrelated";
    case ShotMode::chebyshev:
        return "chebyshev";
    }
    return "?";
}

} // namespace fgit
