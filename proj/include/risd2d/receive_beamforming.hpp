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

#ifndef RISD2D_RECEIVE_BEAMFORMING_HPP
#define RISD2D_RECEIVE_BEAMFORMING_HPP

/// Closed-form optimal uplink receive beamformer. Maximizing the cellular
/// SINR over unit-norm w is a Rayleigh quotient problem whose solution is
/// w = A^{-1} h_C / ||A^{-1} h_C|| with A = p_D h_D h_D^H + sigma_B^2 I;
/// the rank-one inverse collapses the achieved SINR to
///   gamma_C = (p_C ||h_C||^2 / sigma_B^2) * (1 - rho^2 / (1 + sigma_B^2 / (p_D ||h_D||^2)))
/// with rho = |h_C^H h_D| / (||h_C|| ||h_D||).

#include <cmath>

#include "risd2d/channel_model.hpp"
#include "risd2d/errors.hpp"
#include "risd2d/linalg.hpp"

namespace risd2d {

struct BeamformerResult {
    CVector w;                    ///< unit norm
    double gamma_C_achieved = 0.0;
    double rho = 0.0;             ///< |normalized correlation| of h_C_vec, h_D_vec, in [0, 1]
};

inline BeamformerResult optimal_receiver(const EffectiveChannels& eff, double p_D, double p_C,
                                         double sigma2_B) {
    if (!(sigma2_B > 0.0)) throw InvalidInputError("optimal_receiver: sigma2_B must be > 0");
    if (!(p_D >= 0.0) || !(p_C >= 0.0)) throw InvalidInputError("optimal_receiver: powers must be >= 0");
    if (!eff.h_C_vec.all_finite() || !eff.h_D_vec.all_finite())
        throw InvalidInputError("optimal_receiver: non-finite channels");

    const double hc2 = norm2_sq(eff.h_C_vec);
    if (hc2 == 0.0)
        throw DegenerateChannelError("optimal_receiver: h_C is zero; the CU SINR vanishes for every w");
    const double hd2 = norm2_sq(eff.h_D_vec);
    const cxd cross = vdot(eff.h_C_vec, eff.h_D_vec); // h_C^H h_D

    BeamformerResult res;
    res.rho = (hd2 > 0.0) ? std::abs(cross) / std::sqrt(hc2 * hd2) : 0.0;
    if (res.rho > 1.0) res.rho = 1.0; // rounding guard

    // w = A^{-1} h_C, normalized.
    const CMatrix a_inv = sherman_morrison_inv(p_D, eff.h_D_vec, sigma2_B);
    CVector w = matvec(a_inv, eff.h_C_vec);
    const double nw = norm2(w);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] /= nw;
    res.w = std::move(w);

    // Division-free form of the closed-form SINR, exact at p_D * ||h_D||^2 = 0.
    const double denom = sigma2_B + p_D * hd2;
    res.gamma_C_achieved = (p_C / sigma2_B) * (hc2 - p_D * std::norm(cross) / denom);

#ifndef NDEBUG
    // The closed form must agree with the SINR definition evaluated at w.
    const double direct = sinr_cellular(eff, res.w, p_D, p_C, sigma2_B);
    const double scale = std::max({1.0, direct, res.gamma_C_achieved});
    if (std::abs(direct - res.gamma_C_achieved) > 1e-9 * scale)
        throw Error("optimal_receiver: closed form and direct SINR evaluation disagree");
#endif
    return res;
}

} // namespace risd2d

#endif // RISD2D_RECEIVE_BEAMFORMING_HPP
