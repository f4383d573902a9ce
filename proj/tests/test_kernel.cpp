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

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "fgit/errors.hpp"
#include "fgit/kernel.hpp"
#include "fgit/planner.hpp"

using namespace fgit;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("kernel width from resolution") {
    CHECK(lambda_from_resolution(0.02, 0.01) == doctest::Approx(0.006590102289822608).epsilon(1e-14));
    CHECK(lambda_from_resolution(1.0, 0.01) == doctest::Approx(0.3295051144911304).epsilon(1e-14));
    CHECK(lambda_from_resolution(0.7, std::exp(-0.5)) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(lambda_from_resolution(0.0, 0.01), InvalidInput);
    CHECK_THROWS_AS(lambda_from_resolution(0.02, 1.0), InvalidInput);
    CHECK_THROWS_AS(lambda_from_resolution(0.02, 0.0), InvalidInput);
}

TEST_CASE("leakage outside the resolution window stays below sigma") {
    for (double sigma : {0.2, 0.05, 0.01, 1e-4}) {
        const double delta = 0.02;
        const double lambda = lambda_from_resolution(delta, sigma);
        // Simpson rule over [-delta, delta].
        const int n = 20000;
        const double h = 2 * delta / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double c = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += c * gaussian_kernel(-delta + i * h, 0.0, lambda);
        }
        CHECK(acc * h / 3 >= 1 - sigma);
    }
}

TEST_CASE("kernel spec factories and validation") {
    const auto k = KernelSpec::from_resolution(0.02, 0.01);
    CHECK(k.lambda == doctest::Approx(0.006590102289822608));
    CHECK_NOTHROW(k.validate());
    const auto w = KernelSpec::from_width(0.0065, 0.01);
    CHECK(w.delta == doctest::Approx(0.0065 * std::sqrt(2 * std::log(100.0))));
    KernelSpec bad = k;
    bad.lambda *= 1.01;
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    bad = k;
    bad.norm_scale = -1;
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("gaussian kernel values") {
    const double lambda = 0.0066;
    const double peak = 1.0 / (std::sqrt(2 * pi) * lambda);
    CHECK(gaussian_kernel(0.3, 0.3, lambda) == doctest::Approx(peak).epsilon(1e-15));
    CHECK(gaussian_kernel(0.0, 5 * lambda, lambda) == doctest::Approx(peak * std::exp(-12.5)).epsilon(1e-14));
    double acc = 0.0;
    const double h = lambda / 50;
    for (double x = -12 * lambda; x <= 12 * lambda; x += h) {
        acc += gaussian_kernel(x, 0.0, lambda) * h;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("periodic kernel") {
    const double lambda = 0.0066;
    const auto wide = PeriodicKernelParams::from_period(10.0, lambda);
    CHECK(periodic_kernel(0.2, -0.7, lambda, wide) ==
          doctest::Approx(gaussian_kernel(0.2, -0.7, lambda)).epsilon(1e-15));
    CHECK(replica_sum(0.2, -0.7, lambda, wide) == 0.0);

    const auto p = PeriodicKernelParams::from_period(0.05, lambda);
    CHECK(p.dt == doctest::Approx(2 * pi / 0.05));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double nu = u(rng);
        const double om = u(rng);
        const double v = periodic_kernel(nu, om, lambda, p);
        CHECK(v >= gaussian_kernel(nu, om, lambda));
        CHECK(periodic_kernel(nu, om + p.period, lambda, p) == doctest::Approx(v).epsilon(1e-12));
        CHECK(periodic_kernel(nu + p.period, om, lambda, p) == doctest::Approx(v).epsilon(1e-12));
    }
    CHECK(replica_wrap_count(0.05, lambda) >= 1);
    CHECK(replica_wrap_count(0.01, lambda) > replica_wrap_count(0.05, lambda));
}

TEST_CASE("fourier coefficients") {
    const double lambda = 0.0066;
    const auto p = PeriodicKernelParams::from_period(0.2246, lambda);
    CHECK(fourier_coefficient(0, 0.37, lambda, p) == std::complex<double>(1.0, 0.0));
    for (long n : {1L, 7L, 40L, -13L}) {
        for (double nu : {-0.9, 0.0, 0.55}) {
            const auto g = fourier_coefficient(n, nu, lambda, p);
            CHECK(std::abs(g) == doctest::Approx(std::exp(-p.dt * p.dt * lambda * lambda * n * n / 2)).epsilon(1e-14));
            const auto gm = fourier_coefficient(-n, nu, lambda, p);
            CHECK(gm.real() == g.real());
            CHECK(gm.imag() == -g.imag());
            const auto shifted = fourier_coefficient(n, nu + p.period, lambda, p);
            CHECK(std::abs(shifted - g) < 1e-12);
        }
    }
    CHECK(fourier_coefficient_modulus(3, lambda, p.dt) ==
          doctest::Approx(std::abs(fourier_coefficient(3, 0.1, lambda, p))));
}

TEST_CASE("fourier series reproduces the periodic kernel") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> lam(0.002, 0.05);
    for (int trial = 0; trial < 20; ++trial) {
        const double lambda = lam(rng);
        const double period = 4 * lambda + std::abs(u(rng)) * 2.0 + 0.01;
        const auto p = PeriodicKernelParams::from_period(period, lambda);
        long n_big = 1;
        while (truncation_error_bound(n_big, lambda, period) > 1e-10) {
            n_big *= 2;
        }
        const double nu = u(rng);
        const double om = u(rng);
        std::complex<double> acc = 1.0;
        for (long n = 1; n <= n_big; ++n) {
            const auto m = std::polar(1.0, -static_cast<double>(n) * p.dt * om);
            acc += fourier_coefficient(n, nu, lambda, p) * m + fourier_coefficient(-n, nu, lambda, p) * std::conj(m);
        }
        acc /= period;
        CHECK(std::abs(acc.real() - periodic_kernel(nu, om, lambda, p)) < 1e-10);
        CHECK(std::abs(acc.imag()) < 1e-10);
    }
}
