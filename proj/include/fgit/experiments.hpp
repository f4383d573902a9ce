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
#include <string>
#include <vector>

#include "fgit/planner.hpp"
#include "fgit/spectrum.hpp"

namespace fgit::experiments {

/// Model-spectrum scenario: ||H|| = 1, 512 eigenvalues, delta = 0.02,
/// sigma_leak = 0.01, Omega = 2/512, window [-1, -0.8].
struct ModelScenario {
    std::size_t n_eigen = 512;
    double delta = 0.02;
    double sigma_leak = 0.01;
    double omega = 2.0 / 512.0;
    FrequencyWindow window{-1.0, -0.8};
    ModelOptions model{};

    [[nodiscard]] KernelSpec kernel() const { return KernelSpec::from_resolution(delta, sigma_leak, 1.0); }
};

/// Plan request for a spectrum's measured mean and spread.
PlanRequest model_request(const ModelScenario &sc, const DiscreteSpectrum &s, PlanMethod method, double eps_p,
                          double eps_n, double eps_s = 0.01);

/// Nuclear cost-estimate scenario (energies in MeV).
struct NuclearScenario {
    double delta = 1.0;
    double sigma_leak = 0.01;
    double eps = 0.01;
    double omega = 1.0;
    double norm = 7987.5;
};

struct SweepRow {
    char model = 'A';
    double eps_target = 0.0;
    double period_general = 0.0;
    double period_moment = 0.0;
    double ratio = 0.0;          ///< period_moment / period_general
    double measured = 0.0;       ///< max in-window |Phi^P - Phi| * Omega
    double bound = 0.0;          ///< the guaranteed error (the target eps_P)
    double analytic_bound = 0.0; ///< eps_13 + eps_2 evaluated at the chosen alpha, eta
    long n_terms = 0;
};

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// Period reduction and measured periodic-extension error for models A and B.
std::vector<SweepRow> sweep(const ModelScenario &sc, const std::vector<double> &eps_targets,
                            std::size_t grid_count = 1024);

struct CoverageRow {
    double factor = 1.0;
    std::int64_t shots_per_part = 0;
    std::int64_t total_shots = 0;
    int seeds = 0;
    double coverage = 0.0;  ///< fraction of seeds with error <= eps_S
    double max_error = 0.0; ///< over seeds, of max_nu |Phi_sampled - Phi_N| * Omega
    double mean_error = 0.0;
    double eps_s = 0.0;
};

/// Monte Carlo coverage of the statistical budget. Each factor scales the
/// planner's per-part shot count; seeds run first_seed, first_seed + 1, ...
std::vector<CoverageRow> shots_coverage(const DiscreteSpectrum &s, const ExtensionPlan &plan,
                                        const std::vector<double> &factors, int seeds, std::uint64_t first_seed,
                                        std::size_t grid_count = 1024);

struct ManifestEntry {
    std::string key;
    std::string value;
    std::string command; ///< fgit invocation reproducing the value
};

/// Every quoted reproduction number, computed fresh.
std::vector<ManifestEntry> reproduction_manifest();

} // namespace fgit::experiments
