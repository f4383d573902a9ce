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

#include <complex>

namespace fgit {

/// Largest Gaussian width with erf(delta / (sqrt(2) width)) >= 1 - sigma_leak,
/// using the erfc(x) <= exp(-x^2) sufficient condition.
double lambda_from_resolution(double delta, double sigma_leak);

/**
 Gaussian kernel parameters.

 `lambda` never exceeds delta / sqrt(2 log(1/sigma_leak)); the factories set
 it to that limit (or back out `delta` from a given width).
 */
struct KernelSpec {
    double delta = 0.0;      ///< resolution, energy
    double sigma_leak = 0.0; ///< tail budget in (0, 1)
    double lambda = 0.0;     ///< Gaussian width, energy
    double norm_scale = 1.0; ///< spectral norm ||H||, energy

    static KernelSpec from_resolution(double delta, double sigma_leak, double norm_scale = 1.0);
    static KernelSpec from_width(double lambda, double sigma_leak, double norm_scale = 1.0);

    /// Throws InvalidInput if any invariant is broken.
    void validate() const;
};

/// Period of the replica sum together with the matching time step.
struct PeriodicKernelParams {
    double period = 0.0;
    double chi = 0.0;   ///< period / norm_scale
    double dt = 0.0;    ///< 2 pi / period
    int wrap_count = 1; ///< replicas kept on each side of the nearest one

    static PeriodicKernelParams from_period(double period, double lambda, double norm_scale = 1.0);
};

/// Replicas per side so the dropped mass is below 1e-15 of the retained sum.
int replica_wrap_count(double period, double lambda);

double gaussian_kernel(double nu, double omega, double lambda);

/// sum_k G_nu(omega + kP) over the replica window; always >= gaussian_kernel.
double periodic_kernel(double nu, double omega, double lambda, const PeriodicKernelParams &p);

/// periodic_kernel minus the k = 0 term, summed directly (no cancellation).
double replica_sum(double nu, double omega, double lambda, const PeriodicKernelParams &p);

/// g_n(nu) = exp(i dt n nu) exp(-dt^2 lambda^2 n^2 / 2), paired with
/// moments m_n = sum_k w_k exp(-i n dt w_k).
std::complex<double> fourier_coefficient(long n, double nu, double lambda, const PeriodicKernelParams &p);

/// |g_n| = exp(-dt^2 lambda^2 n^2 / 2)
double fourier_coefficient_modulus(long n, double lambda, double dt);

} // namespace fgit
