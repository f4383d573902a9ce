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

#include "fgit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fgit/errors.hpp"

namespace fgit {

using std::numbers::pi;

double lambda_from_resolution(double delta, double sigma_leak) {
    detail::require(std::isfinite(delta) && delta > 0, "lambda_from_resolution: delta must be positive");
    detail::require(sigma_leak > 0 && sigma_leak < 1, "lambda_from_resolution: sigma_leak must lie in (0, 1)");
    return delta / std::sqrt(2.0 * std::log(1.0 / sigma_leak));
}

KernelSpec KernelSpec::from_resolution(double delta, double sigma_leak, double norm_scale) {
    KernelSpec k{delta, sigma_leak, lambda_from_resolution(delta, sigma_leak), norm_scale};
    k.validate();
    return k;
}

KernelSpec KernelSpec::from_width(double lambda, double sigma_leak, double norm_scale) {
    detail::require(sigma_leak > 0 && sigma_leak < 1, "kernel: sigma_leak must lie in (0, 1)");
    KernelSpec k{lambda * std::sqrt(2.0 * std::log(1.0 / sigma_leak)), sigma_leak, lambda, norm_scale};
    k.validate();
    return k;
}

void KernelSpec::validate() const {
    using detail::require;
    require(delta > 0 && std::isfinite(delta), "kernel: delta must be positive");
    require(sigma_leak > 0 && sigma_leak < 1, "kernel: sigma_leak must lie in (0, 1)");
    require(lambda > 0 && std::isfinite(lambda), "kernel: lambda must be positive");
    require(norm_scale > 0 && std::isfinite(norm_scale), "kernel: norm_scale must be positive");
    const double limit = delta / std::sqrt(2.0 * std::log(1.0 / sigma_leak));
    require(lambda <= limit * (1.0 + 1e-12), "kernel: lambda exceeds delta / sqrt(2 log(1/sigma))");
}

int replica_wrap_count(double period, double lambda) {
    // Nearest dropped replica sits at least (wrap + 1/2) P away while the
    // nearest kept one is within P/2, so the relative loss is bounded by
    // 2 (1 + sqrt(pi/2) lambda/P) exp(-wrap (wrap + 1) P^2 / (2 lambda^2)).
    const double ratio = period / lambda;
    const double target = std::log(2.0 * (1.0 + std::sqrt(pi / 2.0) / ratio) * 1e15) * 2.0 / (ratio * ratio);
    int wrap = 1;
    while (static_cast<double>(wrap) * (wrap + 1) < target) {
        ++wrap;
    }
    return wrap;
}

PeriodicKernelParams PeriodicKernelParams::from_period(double period, double lambda, double norm_scale) {
    detail::require(period > 0 && std::isfinite(period), "periodic kernel: period must be positive");
    detail::require(lambda > 0, "periodic kernel: lambda must be positive");
    detail::require(norm_scale > 0, "periodic kernel: norm_scale must be positive");
    return {period, period / norm_scale, 2.0 * pi / period, replica_wrap_count(period, lambda)};
}

double gaussian_kernel(double nu, double omega, double lambda) {
    const double z = (nu - omega) / lambda;
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * pi) * lambda);
}

namespace {

template <class F> void for_each_replica(double nu, double omega, const PeriodicKernelParams &p, F &&f) {
    const double x = omega - nu;
    const auto nearest = static_cast<long>(-std::nearbyint(x / p.period));
    for (long k = nearest - p.wrap_count; k <= nearest + p.wrap_count; ++k) {
        if (k != 0) {
            f(x + static_cast<double>(k) * p.period);
        }
    }
}

} // namespace

double replica_sum(double nu, double omega, double lambda, const PeriodicKernelParams &p) {
    double acc = 0.0;
    const double norm = 1.0 / (std::sqrt(2.0 * pi) * lambda);
    for_each_replica(nu, omega, p, [&](double d) {
        const double z = d / lambda;
        acc += std::exp(-0.5 * z * z);
    });
    return acc * norm;
}

double periodic_kernel(double nu, double omega, double lambda, const PeriodicKernelParams &p) {
    return gaussian_kernel(nu, omega, lambda) + replica_sum(nu, omega, lambda, p);
}

double fourier_coefficient_modulus(long n, double lambda, double dt) {
    const double a = dt * lambda * static_cast<double>(n);
    return std::exp(-0.5 * a * a);
}

std::complex<double> fourier_coefficient(long n, double nu, double lambda, const PeriodicKernelParams &p) {
    // Phase as a fraction of a full turn keeps nu -> nu + P invariance tight.
    const double turns = std::remainder(static_cast<double>(n) * (nu / p.period), 1.0);
    return std::polar(fourier_coefficient_modulus(n, lambda, p.dt), 2.0 * pi * turns);
}

} // namespace fgit
