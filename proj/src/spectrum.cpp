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

#include "fgit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fgit/errors.hpp"

namespace fgit {

namespace {
constexpr double weight_floor = 1e-300;
}

DiscreteSpectrum::DiscreteSpectrum(std::vector<double> frequencies, std::vector<double> weights, double norm_scale)
    : frequencies_(std::move(frequencies)), weights_(std::move(weights)), norm_scale_(norm_scale) {
    using detail::require;
    require(std::isfinite(norm_scale_) && norm_scale_ > 0, "spectrum: norm_scale must be positive");
    require(frequencies_.size() == weights_.size(), "spectrum: frequency and weight counts differ");
    for (std::size_t k = 0; k < frequencies_.size(); ++k) {
        const double w = frequencies_[k];
        require(std::isfinite(w) && std::abs(w) <= norm_scale_,
                "spectrum: eigenfrequency " + std::to_string(w) + " outside [-norm, norm]");
        require(k == 0 || frequencies_[k - 1] < w, "spectrum: eigenfrequencies must be strictly increasing");
        require(std::isfinite(weights_[k]) && weights_[k] >= 0.0, "spectrum: weights must be non-negative");
        if (weights_[k] < weight_floor) {
            weights_[k] = 0.0;
        }
    }
}

DiscreteSpectrum DiscreteSpectrum::from_unsorted(std::vector<double> frequencies, std::vector<double> weights,
                                                 double norm_scale) {
    detail::require(frequencies.size() == weights.size(), "spectrum: frequency and weight counts differ");
    std::vector<std::size_t> order(frequencies.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return frequencies[a] < frequencies[b]; });
    std::vector<double> f, w;
    f.reserve(order.size());
    w.reserve(order.size());
    for (auto i : order) {
        f.push_back(frequencies[i]);
        w.push_back(weights[i]);
    }
    return {std::move(f), std::move(w), norm_scale};
}

double DiscreteSpectrum::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

DiscreteSpectrum DiscreteSpectrum::scaled(double factor) const {
    detail::require(std::isfinite(factor) && factor > 0, "spectrum: scale factor must be positive");
    auto w = weights_;
    for (auto &x : w) {
        x *= factor;
    }
    return {frequencies_, std::move(w), norm_scale_};
}

DiscreteSpectrum DiscreteSpectrum::normalized() const {
    const double total = total_weight();
    detail::require(total > 0, "spectrum: cannot normalize zero total weight");
    auto w = weights_;
    for (auto &x : w) {
        x /= total;
    }
    return {frequencies_, std::move(w), norm_scale_};
}

double eval_peak(double omega, const PeakParams &p) {
    detail::require(p.beta > 0 && std::isfinite(p.beta), "peak: beta must be positive");
    const double z = (omega - p.xi) / p.beta;
    return std::exp(-0.5 * z * z) / (p.beta * std::sqrt(2.0 * std::numbers::pi)) *
           (1.0 + std::erf(p.alpha * z / std::numbers::sqrt2));
}

double eval_tail(double omega, const TailParams &p) {
    detail::require(p.rho > 0 && p.gamma > 0 && p.lambda >= 0, "tail: need rho > 0, gamma > 0, lambda >= 0");
    if (omega < p.omega_thr) {
        return 0.0;
    }
    return p.lambda * p.rho / (std::pow(std::abs(omega - p.omega_thr), p.gamma) + p.rho);
}

std::vector<double> placement_grid(std::size_t n_eigen, Placement placement) {
    detail::require(n_eigen >= 2, "model: need at least two eigenvalues");
    std::vector<double> grid(n_eigen);
    const auto n = static_cast<double>(n_eigen);
    for (std::size_t k = 0; k < n_eigen; ++k) {
        const auto kk = static_cast<double>(k);
        grid[k] = placement == Placement::midpoint ? -1.0 + (kk + 0.5) * (2.0 / n) : -1.0 + kk * (2.0 / (n - 1.0));
    }
    if (placement == Placement::endpoints) {
        grid.back() = 1.0;
    }
    return grid;
}

DiscreteSpectrum make_model(ModelKind kind, std::size_t n_eigen, const ModelOptions &options) {
    using detail::require;
    require(options.peak.beta > 0, "model: peak beta must be positive");
    require(options.tail.rho > 0, "model: tail rho must be positive");
    require(options.tail.gamma > 0, "model: tail gamma must be positive");

    auto grid = placement_grid(n_eigen, options.placement);
    std::vector<double> weights(n_eigen);
    double total = 0.0;
    for (std::size_t k = 0; k < n_eigen; ++k) {
        double v = eval_peak(grid[k], options.peak);
        if (kind == ModelKind::B) {
            v += eval_tail(grid[k], options.tail);
        }
        weights[k] = v;
        total += v;
    }
    if (!(total > 0) || !std::isfinite(total)) {
        throw InvalidInput("model: total weight is not positive (degenerate parameters)");
    }
    for (auto &w : weights) {
        w /= total;
    }
    return {std::move(grid), std::move(weights), 1.0};
}

double energy_moment(const DiscreteSpectrum &s, int order) {
    detail::require(order >= 0, "energy_moment: order must be non-negative");
    const auto f = s.frequencies();
    const auto w = s.weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += w[k] * std::pow(f[k], order);
    }
    return acc;
}

double central_moment(const DiscreteSpectrum &s, int order) {
    detail::require(order >= 1, "central_moment: order must be at least 1");
    const double mu0 = s.total_weight();
    detail::require(mu0 > 0, "central_moment: spectrum has zero weight");
    const double mu1 = energy_moment(s, 1) / mu0;
    const auto f = s.frequencies();
    const auto w = s.weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += w[k] * std::pow(std::abs(f[k] - mu1), order);
    }
    return acc;
}

MomentSummary summarize(const DiscreteSpectrum &s, const std::set<int> &orders) {
    MomentSummary out;
    out.mu0 = s.total_weight();
    detail::require(out.mu0 > 0, "summarize: spectrum has zero weight");
    out.mu1 = energy_moment(s, 1) / out.mu0;
    out.sigma = std::sqrt(central_moment(s, 2) / out.mu0);
    for (int n : orders) {
        out.central[n] = central_moment(s, n);
    }
    return out;
}

double mass_outside(const DiscreteSpectrum &s, double center, double radius) {
    const auto f = s.frequencies();
    const auto w = s.weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (std::abs(f[k] - center) >= radius) {
            acc += w[k];
        }
    }
    return acc;
}

} // namespace fgit
