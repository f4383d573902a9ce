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

namespace fgit {

/**
 PCG32 (XSH-RR 64/32, O'Neill 2014). Each (seed, stream) pair gives an
 independent sequence, so per-moment draws do not depend on how many other
 moments are sampled or in which order.
 */
class Pcg32 {
  public:
    using result_type = std::uint32_t;

    Pcg32(std::uint64_t seed, std::uint64_t stream) : inc_((stream << 1U) | 1U) {
        (*this)();
        state_ += seed;
        (*this)();
    }

    result_type operator()() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
        const auto rot = static_cast<std::uint32_t>(old >> 59U);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31U));
    }

    static constexpr result_type min() { return 0U; }
    static constexpr result_type max() { return 0xFFFFFFFFU; }

  private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_;
};

/// Stream id for the real (part 0) or imaginary (part 1) component of moment n.
constexpr std::uint64_t moment_stream(long n, int part) {
    return 2U * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(part);
}

} // namespace fgit
