// SPDX-License-Identifier: Apache-2.0
//
// ris-d2d: sum-rate optimization for RIS-assisted D2D underlay uplinks
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

#ifndef RISD2D_RNG_HPP
#define RISD2D_RNG_HPP

/// Reproducibility contract: every random draw in the library comes from
/// SplitMix64 (Steele, Lea & Flood, OOPSLA 2014) with the draw orders
/// documented at each call site. The generator, the uniform mapping
/// (x >> 11) * 2^-53 and the Box-Muller transform below are normative, so a
/// (seed, draw order) pair identifies one realization exactly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace risd2d {

/// SplitMix64 output function: one mixing pass over a 64-bit word.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal pair via Box-Muller; draws exactly two uniforms.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = 1.0 - next_unit(); // (0, 1], keeps the log finite
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    /// Circularly-symmetric complex Gaussian with total variance `var`
    /// (each real component carries var/2). One Box-Muller pair per draw.
    std::complex<double> next_cgaussian(double var) {
        const auto [g0, g1] = next_gaussian_pair();
        const double s = std::sqrt(0.5 * var);
        return {s * g0, s * g1};
    }

    /// Uniform angle in [0, 2*pi).
    double next_angle() { return 2.0 * std::numbers::pi * next_unit(); }

  private:
    std::uint64_t state_;
};

/// Deterministic seed derivation for independent streams: fold `parts` into
/// `base` one mixing pass at a time. Used for per-trial / per-stage seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t part) {
    return splitmix64_mix(base ^ (part + 0x9E3779B97F4A7C15ULL));
}

} // namespace risd2d

#endif // RISD2D_RNG_HPP
