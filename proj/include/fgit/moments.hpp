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
#include <cstdint>
#include <vector>

#include "fgit/spectrum.hpp"

namespace fgit {

enum class Provenance { exact, sampled };

/**
 Fourier moments m_n = sum_k w_k exp(-i n dt w_k) for n = 0..n_max.
 Negative orders follow from m_{-n} = conj(m_n).
 */
struct FourierMomentSet {
    double dt = 0.0;
    double mu0 = 1.0;
    std::vector<std::complex<double>> values;
    Provenance provenance = Provenance::exact;
    std::int64_t shots_per_part = 0;
    std::uint64_t seed = 0;
    bool clamped = false;

    [[nodiscard]] long n_max() const { return static_cast<long>(values.size()) - 1; }
    /// m_n for any sign of n.
    [[nodiscard]] std::complex<double> at(long n) const;
};

FourierMomentSet exact_moments(const DiscreteSpectrum &s, double dt, long n_max);

struct SamplingOptions {
    std::int64_t shots_per_part = 1000;
    std::uint64_t seed = 0;
    bool clamp = false; ///< project estimates with |m| > 1 back onto the unit circle
};

/**
 Shot-noise estimate of the moments of a unit-normalized spectrum.

 Each of Re m_n and Im m_n (n >= 1) is the mean of `shots_per_part` +-1
 outcomes with P(+1) = (1 + x)/2, x the true part, drawn as a binomial count
 from a PCG32 stream keyed by (n, part). m_0 is kept exact.
 */
FourierMomentSet sampled_moments(const DiscreteSpectrum &s, double dt, long n_max, const SamplingOptions &options);

/// Same estimator applied to already-known moments (skips recomputing them).
FourierMomentSet sample_from_exact(const FourierMomentSet &exact, const SamplingOptions &options);

struct MomentErrorSummary {
    std::vector<double> abs_error; ///< |m_n(sampled) - m_n(exact)|, n = 0..n_max
    double max_abs = 0.0;
    double rms = 0.0; ///< over the real and imaginary parts of n >= 1
    /// (1/P) sqrt(2 sum_{n>=1} |g_n|^2 |dm_n|^2); needs lambda > 0
    double quadrature = 0.0;
    /// (2/P) sum_{n>=1} |g_n| |dm_n|, a pointwise bound on the transform error
    double absolute_sum = 0.0;
};

MomentErrorSummary moment_error_summary(const FourierMomentSet &exact, const FourierMomentSet &sampled,
                                        double lambda = 0.0);

} // namespace fgit
