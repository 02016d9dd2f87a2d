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

#ifndef RISD2D_POWER_ALLOC_HPP
#define RISD2D_POWER_ALLOC_HPP

/// Closed-form uplink power allocation.
///
/// With the receive beamformer absorbed into the achievable CU SINR, the
/// two QoS constraints become, in the (p_D, p_C) plane,
///   p_C <= p_D / (alpha k0) - sigma_D^2 / k0          (D2D line, increasing)
///   p_C >= beta (p_D + k2) / (k1_bar p_D + k2)        (CU curve, concave increasing)
/// and the sum-rate objective factors as log R(p_D, p_C) with
///   R = (1 + nu1 p_C (k2 + k1_bar p_D)/(k2 + p_D)) (1 + nu2 p_D/(k0 p_C + sigma_D^2)).
///
/// Any interior feasible point can be scaled up while staying feasible, so
/// the optimum lies at an endpoint of the vertical (p_D = p_D_max) or
/// horizontal (p_C = p_C_max) border segments. Along the horizontal border
/// R is strictly increasing in p_D; along the vertical border R is
/// increasing or convex in p_C, so for each segment only its endpoints can
/// win. The solver therefore evaluates the (at most four) feasible segment
/// endpoints and keeps the best.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "risd2d/channel_model.hpp"
#include "risd2d/errors.hpp"
#include "risd2d/receive_beamforming.hpp"

namespace risd2d {

struct PowerCoefficients {
    double alpha = 0.0; ///< gamma_D_min / |h_D|^2
    double beta = 0.0;  ///< sigma_B^2 gamma_C_min / ||h_C_vec||^2
    double k0 = 0.0;    ///< |h_C|^2
    double k1 = 0.0;    ///< rho^2, <= 1
    double k2 = 0.0;    ///< sigma_B^2 / ||h_D_vec||^2
    double nu1 = 0.0;   ///< ||h_C_vec||^2 / sigma_B^2
    double nu2 = 0.0;   ///< |h_D|^2

    double k1_bar() const { return 1.0 - k1; }
};

inline PowerCoefficients power_coefficients(const EffectiveChannels& eff, double rho,
                                            double gamma_D_min, double gamma_C_min,
                                            double sigma2_B) {
    PowerCoefficients co;
    const double hd_sq = std::norm(eff.h_D);
    const double hc_sq = std::norm(eff.h_C);
    const double hcv_sq = norm2_sq(eff.h_C_vec);
    const double hdv_sq = norm2_sq(eff.h_D_vec);
    co.alpha = gamma_D_min / hd_sq; // +inf when the D2D link is dead
    co.beta = sigma2_B * gamma_C_min / hcv_sq;
    co.k0 = hc_sq;
    co.k1 = std::min(rho * rho, 1.0);
    co.k2 = sigma2_B / hdv_sq;
    co.nu1 = hcv_sq / sigma2_B;
    co.nu2 = hd_sq;
    return co;
}

struct PowerLimits {
    double p_D_max = 0.0;
    double p_C_max = 0.0;
};

enum class PowerCase { Case1, Case2, Case3, Infeasible };

inline const char* to_string(PowerCase c) {
    switch (c) {
        case PowerCase::Case1: return "case1";
        case PowerCase::Case2: return "case2";
        case PowerCase::Case3: return "case3";
        default: return "infeasible";
    }
}

struct PowerPair {
    double p_D = 0.0;
    double p_C = 0.0;
    PowerCase case_id = PowerCase::Infeasible;
    double sum_rate = -std::numeric_limits<double>::infinity(); ///< nats

    bool feasible() const { return case_id != PowerCase::Infeasible; }
};

/// log R(p_D, p_C) in nats. Zero powers are legal.
inline double rate_objective(double p_D, double p_C, const PowerCoefficients& co,
                             double sigma2_D) {
    const double denom = co.k2 + p_D;
    const double cu_factor = denom > 0.0 ? (co.k2 + co.k1_bar() * p_D) / denom : 1.0;
    const double gamma_c = co.nu1 * p_C * cu_factor;
    const double gamma_d = co.nu2 * p_D / (co.k0 * p_C + sigma2_D);
    return std::log1p(gamma_c) + std::log1p(gamma_d);
}

struct BoundaryIntersections {
    double I_Ly = 0.0; ///< D2D line at p_D = p_D_max
    double I_Cy = 0.0; ///< CU curve at p_D = p_D_max
};

inline BoundaryIntersections boundary_intersections(const PowerCoefficients& co,
                                                    PowerLimits limits, double sigma2_D) {
    if (!(limits.p_D_max > 0.0))
        throw InvalidInputError("boundary_intersections: p_D_max must be > 0");
    if (co.alpha == 0.0 || co.k0 == 0.0)
        throw DegenerateCoefficientError("boundary_intersections: alpha or k0 is zero");
    BoundaryIntersections bi;
    bi.I_Ly = (limits.p_D_max - co.alpha * sigma2_D) / (co.alpha * co.k0);
    const double denom = co.k1_bar() * limits.p_D_max + co.k2;
    bi.I_Cy = denom > 0.0 ? co.beta * (limits.p_D_max + co.k2) / denom
                          : std::numeric_limits<double>::infinity();
    return bi;
}

namespace detail {

/// CU curve (lower bound on p_C) at a given p_D.
inline double cu_curve(const PowerCoefficients& co, double p_D) {
    const double denom = co.k1_bar() * p_D + co.k2;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return co.beta * (p_D + co.k2) / denom;
}

/// D2D line (upper bound on p_C) at a given p_D.
inline double d2d_line(const PowerCoefficients& co, double p_D, double sigma2_D) {
    return (p_D / co.alpha - sigma2_D) / co.k0;
}

inline bool point_feasible(const PowerCoefficients& co, PowerLimits limits, double sigma2_D,
                           double p_D, double p_C, double slack = 1e-9) {
    if (!std::isfinite(p_D) || !std::isfinite(p_C)) return false;
    const double p_d_floor = 1e-12 * limits.p_D_max;
    const double p_c_floor = 1e-12 * limits.p_C_max;
    if (p_D < p_d_floor || p_C < p_c_floor) return false;
    if (p_D > limits.p_D_max * (1.0 + 1e-12) || p_C > limits.p_C_max * (1.0 + 1e-12)) return false;
    if (p_C - d2d_line(co, p_D, sigma2_D) > slack) return false;
    if (cu_curve(co, p_D) - p_C > slack) return false;
    return true;
}

} // namespace detail

/// Optimal (p_D, p_C) on the feasible-region boundary. Candidates are the
/// endpoints of the vertical border segment {p_D_max} x [I_Cy, min(I_Ly, p_C_max)]
/// and of the horizontal border segment [red crossing, blue crossing] x {p_C_max};
/// infeasible candidates are dropped, ties go to the smaller p_D.
inline PowerPair optimal_power(const PowerCoefficients& co, PowerLimits limits,
                               double sigma2_D) {
    PowerPair out;
    if (!(limits.p_D_max > 0.0) || !(limits.p_C_max > 0.0))
        throw InvalidInputError("optimal_power: power limits must be > 0");
    // A dead desired link or dead CU link cannot meet its SINR floor.
    if (!std::isfinite(co.alpha) || !std::isfinite(co.beta) || co.alpha < 0.0 || co.beta < 0.0)
        return out;
    if (co.alpha == 0.0 || co.k0 == 0.0)
        throw DegenerateCoefficientError("optimal_power: alpha or k0 is zero");

    const BoundaryIntersections bi = boundary_intersections(co, limits, sigma2_D);
    const double p_c_floor = 1e-12 * limits.p_C_max;

    PowerCase case_id = PowerCase::Infeasible;
    if (bi.I_Cy <= bi.I_Ly && bi.I_Ly > 0.0) {
        if (bi.I_Ly <= limits.p_C_max)
            case_id = PowerCase::Case1;
        else if (bi.I_Cy <= limits.p_C_max)
            case_id = PowerCase::Case2;
        else
            case_id = PowerCase::Case3;
    }

    std::vector<std::pair<double, double>> candidates;
    // Vertical border endpoints (p_D = p_D_max).
    candidates.emplace_back(limits.p_D_max, std::min(bi.I_Ly, limits.p_C_max));
    candidates.emplace_back(limits.p_D_max, std::max(bi.I_Cy, p_c_floor));
    // Horizontal border endpoints (p_C = p_C_max): crossings of the D2D line
    // and of the CU curve with the top of the box.
    candidates.emplace_back(co.alpha * (co.k0 * limits.p_C_max + sigma2_D), limits.p_C_max);
    const double blue_den = co.k1_bar() * limits.p_C_max - co.beta;
    if (blue_den != 0.0) {
        const double p_d_blue = co.k2 * (co.beta - limits.p_C_max) / blue_den;
        if (p_d_blue > 0.0) candidates.emplace_back(std::min(p_d_blue, limits.p_D_max), limits.p_C_max);
        // no finite crossing otherwise: the curve stays on one side of p_C_max
    }
    if (detail::cu_curve(co, limits.p_D_max) <= limits.p_C_max)
        candidates.emplace_back(limits.p_D_max, limits.p_C_max);

    for (const auto& [p_d, p_c] : candidates) {
        if (!detail::point_feasible(co, limits, sigma2_D, p_d, p_c)) continue;
        const double rate = rate_objective(p_d, p_c, co, sigma2_D);
        const bool better = rate > out.sum_rate ||
                            (rate == out.sum_rate && out.feasible() && p_d < out.p_D);
        if (!out.feasible() || better) {
            out.p_D = p_d;
            out.p_C = p_c;
            out.sum_rate = rate;
            out.case_id = case_id;
        }
    }
    if (!out.feasible()) out.case_id = PowerCase::Infeasible;
    return out;
}

} // namespace risd2d

#endif // RISD2D_POWER_ALLOC_HPP
