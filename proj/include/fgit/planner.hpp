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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgit/kernel.hpp"

namespace fgit {

/**
 Dimensionless error budgets. The pointwise target is
 |Phi_est(nu) - Phi(nu)| <= (eps_p + eps_n + eps_s) / omega_scale.
 */
struct ErrorBudget {
    double eps_p = 0.01;
    double eps_n = 0.01;
    double eps_s = 0.01;
    double omega_scale = 1.0;
    double confidence_delta = 0.05;

    /// eps_p = eps_n = eps_s = total / 3.
    static ErrorBudget equal_split(double total, double omega_scale, double confidence_delta = 0.05);
    /// Every component set to `eps`.
    static ErrorBudget uniform(double eps, double omega_scale, double confidence_delta = 0.05);

    void validate() const;
};

struct FrequencyWindow {
    double nu_min = -1.0;
    double nu_max = 1.0;

    [[nodiscard]] double span() const { return nu_max - nu_min; }
    void validate(double norm_scale) const;
};

enum class PlanMethod { general, variance, central_moment };

/// `practical`: chi = 2 + sqrt(2) L / ||H|| sqrt(log(2 Omega / (eps L))).
/// `full`: P = (1 + eta) ||H|| + max(|nu_min|, nu_max) with the sharper eta.
enum class ChiMode { practical, full };

/// How the window enters the moment-informed period.
enum class WindowOffset {
    max_side, ///< max(mu1 - nu_min, nu_max - mu1), the rigorous choice
    min_side, ///< min(mu1 - nu_min, nu_max - mu1)
    span,     ///< nu_max - nu_min
};

/// `bound`: alpha from the generalized tail bound. `simplified`: closed-form
/// chi with 2.7 / eps^(1/(n+1)) prefactor (needs mu~_n^(1/n) >= lambda, n <= 15).
enum class CentralMode { bound, simplified };

/// N bound with the sqrt(2 pi) prefactor (standard) or the sqrt(2) pi one (tight, smaller N).
enum class TermsMode { standard, tight };

enum class ShotMode { conservative, uncorrelated, chebyshev };

struct PeriodChoice {
    double period = 0.0;
    double chi = 0.0;
    double alpha = 0.0; ///< tail-bound multiplier (moment methods); inf for zero spread
    double eta = 0.0;
    double reach = 0.0;  ///< alpha times the spread scale
    double offset = 0.0; ///< window contribution added to the period
    int order = 0;       ///< central-moment order used, 0 for general
    bool clamped = false;
    double analytic_bound = 0.0; ///< guaranteed eps_P (dimensionless) for this period
    std::vector<std::string> warnings;
};

PeriodChoice chi_general(const KernelSpec &kernel, const ErrorBudget &budget, double mu0 = 1.0,
                         ChiMode mode = ChiMode::practical,
                         const std::optional<FrequencyWindow> &window = std::nullopt);

PeriodChoice chi_with_variance(const KernelSpec &kernel, const ErrorBudget &budget, double mu0, double mu1,
                               double sigma, const FrequencyWindow &window,
                               WindowOffset offset = WindowOffset::max_side);

/// `mu_tilde_n` is the absolute central moment of the unit-normalized spectrum.
PeriodChoice chi_with_central_moment(int order, double mu_tilde_n, const KernelSpec &kernel, const ErrorBudget &budget,
                                     double mu0, double mu1, const FrequencyWindow &window,
                                     WindowOffset offset = WindowOffset::max_side,
                                     CentralMode mode = CentralMode::bound);

/// Real-valued N bound before rounding.
double n_terms_bound(double chi, const KernelSpec &kernel, const ErrorBudget &budget, double mu0 = 1.0,
                     TermsMode mode = TermsMode::standard);

long n_terms(double chi, const KernelSpec &kernel, const ErrorBudget &budget, double mu0 = 1.0,
             TermsMode mode = TermsMode::standard);

/// mu0 / (sqrt(2 pi) L) erfc(N sqrt(2) pi L / P): worst-case |Phi_N - Phi^P|.
double truncation_error_bound(long n_terms, double lambda, double period, double mu0 = 1.0);

double shots_bound(long n_terms, double period, const KernelSpec &kernel, const ErrorBudget &budget, double mu0,
                   ShotMode mode);

std::int64_t shots(long n_terms, double period, const KernelSpec &kernel, const ErrorBudget &budget, double mu0 = 1.0,
                   ShotMode mode = ShotMode::conservative);

struct PlanRequest {
    PlanMethod method = PlanMethod::general;
    KernelSpec kernel;
    ErrorBudget budget;
    std::optional<FrequencyWindow> window;
    double mu0 = 1.0;
    double mu1 = 0.0;
    double sigma = 0.0;
    int order = 2;
    double mu_tilde = 0.0; ///< central moment for PlanMethod::central_moment
    WindowOffset offset = WindowOffset::max_side;
    ChiMode chi_mode = ChiMode::practical;
    CentralMode central_mode = CentralMode::bound;
    TermsMode terms_mode = TermsMode::standard;
    ShotMode shot_mode = ShotMode::conservative;
    bool cap_at_general = false; ///< use the general period when moments give no saving
};

struct ExtensionPlan {
    PlanRequest request;                     ///< inputs echo
    PlanMethod method = PlanMethod::general; ///< may differ from request on fallback
    PeriodChoice choice;
    double period = 0.0;
    double chi = 0.0;
    double dt = 0.0;
    long n_terms = 0;
    std::int64_t total_shots = 0;
    std::int64_t shots_per_part = 0; ///< per real or imaginary part of each moment
    std::vector<std::string> warnings;

    [[nodiscard]] PeriodicKernelParams periodic() const;
};

ExtensionPlan make_plan(const PlanRequest &request);

/// Spectral norm for which the general-method real-valued N bound equals
/// `target_terms` (bisection on ||H||).
double norm_for_general_terms(double target_terms, double lambda, double sigma_leak, const ErrorBudget &budget,
                              TermsMode mode = TermsMode::standard);

const char *to_string(PlanMethod m);
const char *to_string(WindowOffset o);
const char *to_string(ChiMode m);
const char *to_string(CentralMode m);
const char *to_string(TermsMode m);
const char *to_string(ShotMode m);

} // namespace fgit
