// SPDX-License-Identifier: Apache-2.0
//
// efa-relay: energy-flow-assisted amplify-and-forward relay optimization
// Copyright (C) 2026 The efa-relay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace efa {

/// Seeded random generator with named sub-streams.
///
/// A stream is identified by a 64-bit key. substream() derives a child key by
/// hashing the parent key with up to three caller-chosen words, so Monte Carlo
/// code can address streams as (family, sweep point, trial) and regenerate the
/// exact same draws from any worker thread. Gaussian variates use an explicit
/// Box-Muller transform so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed)
        : key_(seed), engine_(finalize(seed ^ 0x1BD11BDAA9FC1A22ull)) {}

    /// Derives an independent named sub-stream; does not consume draws.
    Rng substream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
        std::uint64_t k = key_;
        k = mix(k, a);
        k = mix(k, b);
        k = mix(k, c);
        return Rng(k);
    }

    std::uint64_t key() const { return key_; }

    /// Uniform draw on (0, 1].
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Circularly-symmetric complex Gaussian with unit total variance
    /// (real and imaginary parts each have variance 1/2).
    std::complex<double> circular_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

  private:
    static constexpr std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    static constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
        return finalize(h + 0x9E3779B97F4A7C15ull + v * 0xD6E8FEB86659FD93ull);
    }

    std::uint64_t key_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace efa
