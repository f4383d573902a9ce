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

#include "fgit/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fgit/errors.hpp"
#include "fgit/kernel.hpp"
#include "fgit/rng.hpp"

namespace fgit {

std::complex<double> FourierMomentSet::at(long n) const {
    const long k = n < 0 ? -n : n;
    if (k > n_max()) {
        throw InvalidInput("moment order exceeds the available set");
    }
    const auto v = values[static_cast<std::size_t>(k)];
    return n < 0 ? std::conj(v) : v;
}

FourierMomentSet exact_moments(const DiscreteSpectrum &s, double dt, long n_max) {
    detail::require(n_max >= 0, "exact_moments: n_max must be non-negative");
    detail::require(dt > 0 && std::isfinite(dt), "exact_moments: dt must be positive");
    FourierMomentSet out;
    out.dt = dt;
    out.mu0 = s.total_weight();
    out.values.resize(static_cast<std::size_t>(n_max) + 1);
    const auto f = s.frequencies();
    const auto w = s.weights();
    out.values[0] = out.mu0;
    for (long n = 1; n <= n_max; ++n) {
        const double step = static_cast<double>(n) * dt;
        std::complex<double> acc{};
        for (std::size_t k = 0; k < s.size(); ++k) {
            acc += std::polar(w[k], -step * f[k]);
        }
        out.values[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

namespace {

double estimate_part(double truth, long n, int part, const SamplingOptions &opt) {
    if (std::abs(truth) > 1.0 + 1e-12) {
        throw InvalidInput("sampled_moments: moment part exceeds 1 in magnitude (spectrum not normalized?)");
    }
    const double p = std::clamp(0.5 * (1.0 + truth), 0.0, 1.0);
    Pcg32 rng(opt.seed, moment_stream(n, part));
    std::binomial_distribution<std::int64_t> draw(opt.shots_per_part, p);
    const auto plus = draw(rng);
    const auto shots = static_cast<double>(opt.shots_per_part);
    return (2.0 * static_cast<double>(plus) - shots) / shots;
}

} // namespace

FourierMomentSet sample_from_exact(const FourierMomentSet &exact, const SamplingOptions &options) {
    detail::require(options.shots_per_part >= 1, "sampled_moments: shots_per_part must be at least 1");
    detail::require(std::abs(exact.mu0 - 1.0) <= 1e-9, "sampled_moments: spectrum must be normalized (mu0 = 1)");
    FourierMomentSet out = exact;
    out.provenance = Provenance::sampled;
    out.shots_per_part = options.shots_per_part;
    out.seed = options.seed;
    out.clamped = options.clamp;
    for (long n = 1; n <= exact.n_max(); ++n) {
        const auto truth = exact.values[static_cast<std::size_t>(n)];
        std::complex<double> est{estimate_part(truth.real(), n, 0, options),
                                 estimate_part(truth.imag(), n, 1, options)};
        // Each part lies in [-1, 1] but the modulus can reach sqrt(2).
        if (options.clamp && std::abs(est) > 1.0) {
            est /= std::abs(est);
        }
        out.values[static_cast<std::size_t>(n)] = est;
    }
    return out;
}

FourierMomentSet sampled_moments(const DiscreteSpectrum &s, double dt, long n_max, const SamplingOptions &options) {
    return sample_from_exact(exact_moments(s, dt, n_max), options);
}

MomentErrorSummary moment_error_summary(const FourierMomentSet &exact, const FourierMomentSet &sampled, double lambda) {
    detail::require(exact.values.size() == sampled.values.size(), "moment_error_summary: moment counts differ");
    detail::require(std::abs(exact.dt - sampled.dt) <= 1e-12 * std::abs(exact.dt),
                    "moment_error_summary: time steps differ");
    MomentErrorSummary out;
    out.abs_error.resize(exact.values.size());
    double sq = 0.0;
    double weighted_sq = 0.0;
    double weighted_abs = 0.0;
    for (std::size_t n = 0; n < exact.values.size(); ++n) {
        const auto d = sampled.values[n] - exact.values[n];
        out.abs_error[n] = std::abs(d);
        out.max_abs = std::max(out.max_abs, out.abs_error[n]);
        if (n == 0) {
            continue;
        }
        sq += std::norm(d);
        if (lambda > 0) {
            const double g = fourier_coefficient_modulus(static_cast<long>(n), lambda, exact.dt);
            weighted_sq += g * g * std::norm(d);
            weighted_abs += g * out.abs_error[n];
        }
    }
    const auto parts = 2.0 * static_cast<double>(exact.values.size() - 1);
    out.rms = parts > 0 ? std::sqrt(sq / parts) : 0.0;
    const double period = 2.0 * std::numbers::pi / exact.dt;
    out.quadrature = std::sqrt(2.0 * weighted_sq) / period;
    out.absolute_sum = 2.0 * weighted_abs / period;
    return out;
}

} // namespace fgit
