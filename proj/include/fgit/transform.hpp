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

#include <optional>
#include <vector>

#include "fgit/kernel.hpp"
#include "fgit/moments.hpp"
#include "fgit/planner.hpp"
#include "fgit/spectrum.hpp"

namespace fgit {

enum class CurveKind { exact_gaussian, exact_periodic, reconstructed, sampled_reconstructed };

const char *to_string(CurveKind kind);

struct TransformCurve {
    std::vector<double> grid;
    std::vector<double> values;
    CurveKind kind = CurveKind::exact_gaussian;
    /// Set once values are multiplied by an energy step (dimensionless d_omega * Phi).
    std::optional<double> scale_note;
    /// Largest |Im| left after the symmetric sum (reconstructions only).
    double imag_residue = 0.0;
};

/// `count` evenly spaced points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count = 1024);
std::vector<double> uniform_grid(const FrequencyWindow &window, std::size_t count = 1024);

/// Phi(nu) = sum_k w_k G(nu - w_k), or the replica-summed kernel when `periodic` is set.
TransformCurve exact_transform(const DiscreteSpectrum &s, double lambda, const std::vector<double> &grid,
                               const std::optional<PeriodicKernelParams> &periodic = std::nullopt);

/// Phi^P(nu) - Phi(nu), summed from the replicas alone.
std::vector<double> replica_excess(const DiscreteSpectrum &s, double lambda, const std::vector<double> &grid,
                                   const PeriodicKernelParams &periodic);

/// Truncated Fourier reconstruction (1/P) sum_{|n|<=N} g_n(nu) m_n with m_{-n} = conj(m_n).
TransformCurve reconstruct(const FourierMomentSet &moments, double lambda, const PeriodicKernelParams &periodic,
                           long n_terms, const std::vector<double> &grid);

struct ErrorReport {
    double eps_p_measured = 0.0;     ///< max |Phi^P - Phi| * Omega
    double eps_n_measured = 0.0;     ///< max |Phi^P_N - Phi^P| * Omega
    double eps_total_measured = 0.0; ///< max |Phi^P_N - Phi| * Omega
    double eps_p_budget = 0.0;
    double eps_n_budget = 0.0;
    [[nodiscard]] bool within_budget() const {
        return eps_p_measured <= eps_p_budget && eps_n_measured <= eps_n_budget;
    }
};

ErrorReport error_report(const DiscreteSpectrum &s, const ExtensionPlan &plan, const std::vector<double> &grid);

/// Multiply values by d_omega (> 0) and record it.
TransformCurve rescale_to_dimensionless(const TransformCurve &curve, double d_omega);

double max_abs_difference(const std::vector<double> &a, const std::vector<double> &b);

} // namespace fgit
