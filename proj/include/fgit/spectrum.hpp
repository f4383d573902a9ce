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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace fgit {

/**
 A discrete response function S(w) = sum_k w_k delta(w - w_k).

 Eigenfrequencies are strictly increasing and lie inside [-norm, norm];
 weights are non-negative. Values below 1e-300 are flushed to zero on
 construction. Immutable once built.
 */
class DiscreteSpectrum {
  public:
    DiscreteSpectrum(std::vector<double> frequencies, std::vector<double> weights, double norm_scale = 1.0);

    /// Sorts (frequency, weight) pairs first. Duplicate frequencies are rejected.
    static DiscreteSpectrum from_unsorted(std::vector<double> frequencies, std::vector<double> weights,
                                          double norm_scale = 1.0);

    [[nodiscard]] std::span<const double> frequencies() const { return frequencies_; }
    [[nodiscard]] std::span<const double> weights() const { return weights_; }
    [[nodiscard]] double norm_scale() const { return norm_scale_; }
    [[nodiscard]] std::size_t size() const { return frequencies_.size(); }
    [[nodiscard]] double total_weight() const;

    /// Copy with every weight multiplied by `factor` (> 0).
    [[nodiscard]] DiscreteSpectrum scaled(double factor) const;
    /// Copy with weights divided by their sum.
    [[nodiscard]] DiscreteSpectrum normalized() const;

  private:
    std::vector<double> frequencies_;
    std::vector<double> weights_;
    double norm_scale_;
};

struct PeakParams {
    double xi = -0.95;  ///< location
    double beta = 0.05; ///< scale, > 0
    double alpha = 5.0; ///< skewness
};

struct TailParams {
    double omega_thr = -0.95;
    double lambda = 1.0; ///< normalization
    double rho = 0.002;  ///< scale, > 0
    double gamma = 1.0;  ///< power-law exponent, > 0
};

/// Skewed Gaussian peak.
double eval_peak(double omega, const PeakParams &p);

/// Power-law tail, zero below the threshold.
double eval_tail(double omega, const TailParams &p);

enum class ModelKind { A, B };

enum class Placement {
    midpoint,  ///< w_k = -1 + (k + 1/2) * 2/n
    endpoints, ///< w_k = -1 + k * 2/(n-1), includes +-1
};

struct ModelOptions {
    PeakParams peak{};
    TailParams tail{};
    Placement placement = Placement::midpoint;
};

/// Eigenfrequency grid on [-1, 1].
std::vector<double> placement_grid(std::size_t n_eigen, Placement placement);

/// Model A (peak only) or B (peak + tail), normalized to unit total weight.
DiscreteSpectrum make_model(ModelKind kind, std::size_t n_eigen = 512, const ModelOptions &options = {});

/// mu_n = sum_k w_k w_k^n
double energy_moment(const DiscreteSpectrum &s, int order);

/// Absolute central moment sum_k w_k |w_k - mu1|^n with mu1 = mu_1 / mu_0.
double central_moment(const DiscreteSpectrum &s, int order);

struct MomentSummary {
    double mu0 = 1.0;
    double mu1 = 0.0;
    double sigma = 0.0;
    std::map<int, double> central;
};

MomentSummary summarize(const DiscreteSpectrum &s, const std::set<int> &orders = {2});

/// Weight with |w_k - center| >= radius.
double mass_outside(const DiscreteSpectrum &s, double center, double radius);

} // namespace fgit
