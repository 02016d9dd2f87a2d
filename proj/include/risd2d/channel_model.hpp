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

#ifndef RISD2D_CHANNEL_MODEL_HPP
#define RISD2D_CHANNEL_MODEL_HPP

/// Scenario geometry and Rayleigh channel generation.
///
/// One uplink cell: an M-antenna BS, a single-antenna cellular user (CU),
/// and one D2D pair (DT -> DR) reusing the CU's uplink spectrum, assisted by
/// an N-element reflecting surface. Nine statistical channels connect them;
/// every coefficient is an independent circularly-symmetric complex Gaussian
/// whose total variance follows the (d/d0)^-exponent distance law.
///
/// Generation is reproducible: given (config, seed) the draws come from
/// SplitMix64 in the fixed order g_C, g_D, f_C, f_D, s_C, S_B (row-major),
/// s_T, s_R, one Box-Muller pair per coefficient.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "risd2d/errors.hpp"
#include "risd2d/linalg.hpp"
#include "risd2d/rng.hpp"

namespace risd2d {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// ---------------------------------------------------------------------------
// SystemConfig

struct SystemConfig {
    int M = 4; ///< BS antennas
    int N = 8; ///< reflecting elements

    double cell_radius_d0 = 1.0; ///< m
    double d_D = 0.2;            ///< D2D pair separation, m

    Vec2 pos_bs{0.0, 0.0};
    Vec2 pos_cu{0.0, 0.5};
    Vec2 pos_dt{0.0, -0.85};
    Vec2 pos_dr{0.0, -0.65};
    Vec2 pos_ris{-0.5, 0.35};

    double p_D_max = 10.0; ///< W
    double p_C_max = 10.0; ///< W

    double gamma_D_min = 1.9952623149688795; ///< linear (3 dB)
    double gamma_C_min = 1.9952623149688795; ///< linear (3 dB)

    double sigma2_B = 1.0; ///< W
    double sigma2_D = 1.0; ///< W

    double pathloss_exponent = 4.0;

    void validate() const {
        if (M < 1) throw InvalidInputError("SystemConfig: M must be >= 1");
        if (N < 0) throw InvalidInputError("SystemConfig: N must be >= 0");
        if (!(p_D_max > 0.0) || !(p_C_max > 0.0))
            throw InvalidInputError("SystemConfig: power budgets must be > 0");
        if (!(gamma_D_min > 0.0) || !(gamma_C_min > 0.0))
            throw InvalidInputError("SystemConfig: SINR thresholds must be > 0");
        if (!(sigma2_B > 0.0) || !(sigma2_D > 0.0))
            throw InvalidInputError("SystemConfig: noise powers must be > 0");
        if (!(cell_radius_d0 > 0.0)) throw InvalidInputError("SystemConfig: d0 must be > 0");
        const Vec2 nodes[] = {pos_bs, pos_cu, pos_dt, pos_dr, pos_ris};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (distance(nodes[i], nodes[j]) == 0.0)
                    throw InvalidInputError("SystemConfig: node positions must be distinct");
    }
};

/// Deployment used throughout the reference experiments: BS at the origin,
/// CU at (0, 0.5 d0), the D2D pair straddling (0, -0.75 d0) at separation
/// d_D = 0.2 d0, unit noise powers, 3 dB SINR thresholds, M = 4.
inline SystemConfig default_geometry(double d0, Vec2 ris_position) {
    if (!(d0 > 0.0)) throw InvalidInputError("default_geometry: d0 must be > 0");
    SystemConfig cfg;
    cfg.cell_radius_d0 = d0;
    cfg.d_D = 0.2 * d0;
    cfg.pos_bs = {0.0, 0.0};
    cfg.pos_cu = {0.0, 0.5 * d0};
    cfg.pos_dt = {0.0, -0.75 * d0 - 0.5 * cfg.d_D};
    cfg.pos_dr = {0.0, -0.75 * d0 + 0.5 * cfg.d_D};
    cfg.pos_ris = ris_position;
    return cfg;
}

// ---------------------------------------------------------------------------
// PhaseVector

/// N reflection coefficients e^{j theta_n}; angles normalized into [0, 2*pi).
struct PhaseVector {
    std::vector<double> theta;
    std::vector<cxd> coefficients;

    PhaseVector() = default;

    static PhaseVector zeros(std::size_t n) {
        return from_angles(std::vector<double>(n, 0.0));
    }

    static PhaseVector from_angles(std::vector<double> angles) {
        PhaseVector pv;
        pv.theta.resize(angles.size());
        pv.coefficients.resize(angles.size());
        constexpr double two_pi = 2.0 * std::numbers::pi;
        for (std::size_t i = 0; i < angles.size(); ++i) {
            double a = std::fmod(angles[i], two_pi);
            if (a < 0.0) a += two_pi;
            pv.theta[i] = a;
            pv.coefficients[i] = std::polar(1.0, a);
        }
        return pv;
    }

    std::size_t size() const { return theta.size(); }
};

// ---------------------------------------------------------------------------
// ChannelSet

/// One realization of the nine channels, dimensioned by (M, N).
struct ChannelSet {
    CVector g_C;  ///< CU -> BS, M
    cxd g_D{};    ///< DT -> DR
    cxd f_C{};    ///< CU -> DR
    CVector f_D;  ///< DT -> BS, M
    CVector s_C;  ///< CU -> RIS, N
    CMatrix S_B;  ///< RIS -> BS, M x N
    CVector s_T;  ///< DT -> RIS, N
    CVector s_R;  ///< RIS -> DR, N
    std::uint64_t seed = 0;

    std::size_t antennas() const { return g_C.size(); }
    std::size_t elements() const { return s_C.size(); }

    bool all_finite() const {
        return g_C.all_finite() && finite(g_D) && finite(f_C) && f_D.all_finite() &&
               s_C.all_finite() && S_B.all_finite() && s_T.all_finite() && s_R.all_finite();
    }
};

/// Effective (composite) channels for a fixed phase vector.
struct EffectiveChannels {
    cxd h_D{};      ///< DT -> DR
    cxd h_C{};      ///< CU -> DR
    CVector h_C_vec; ///< CU -> BS, M
    CVector h_D_vec; ///< DT -> BS, M
};

// ---------------------------------------------------------------------------
// Operations

inline ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    SplitMix64 rng(seed);

    const double d0 = cfg.cell_radius_d0;
    const double exp_ = cfg.pathloss_exponent;
    const auto link_var = [&](Vec2 a, Vec2 b) {
        const double d = distance(a, b);
        if (d == 0.0) throw GeometryError("generate_channels: coincident link endpoints");
        return std::pow(d / d0, -exp_);
    };

    const std::size_t m = static_cast<std::size_t>(cfg.M);
    const std::size_t n = static_cast<std::size_t>(cfg.N);

    ChannelSet ch;
    ch.seed = seed;
    ch.g_C = CVector(m);
    ch.f_D = CVector(m);
    ch.s_C = CVector(n);
    ch.S_B = CMatrix(m, n);
    ch.s_T = CVector(n);
    ch.s_R = CVector(n);

    // Normative draw order: g_C, g_D, f_C, f_D, s_C, S_B row-major, s_T, s_R.
    const double var_cb = link_var(cfg.pos_cu, cfg.pos_bs);
    for (std::size_t i = 0; i < m; ++i) ch.g_C[i] = rng.next_cgaussian(var_cb);
    ch.g_D = rng.next_cgaussian(link_var(cfg.pos_dt, cfg.pos_dr));
    ch.f_C = rng.next_cgaussian(link_var(cfg.pos_cu, cfg.pos_dr));
    const double var_db = link_var(cfg.pos_dt, cfg.pos_bs);
    for (std::size_t i = 0; i < m; ++i) ch.f_D[i] = rng.next_cgaussian(var_db);
    const double var_cs = link_var(cfg.pos_cu, cfg.pos_ris);
    for (std::size_t i = 0; i < n; ++i) ch.s_C[i] = rng.next_cgaussian(var_cs);
    const double var_sb = link_var(cfg.pos_ris, cfg.pos_bs);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) ch.S_B(i, j) = rng.next_cgaussian(var_sb);
    const double var_ts = link_var(cfg.pos_dt, cfg.pos_ris);
    for (std::size_t i = 0; i < n; ++i) ch.s_T[i] = rng.next_cgaussian(var_ts);
    const double var_sr = link_var(cfg.pos_ris, cfg.pos_dr);
    for (std::size_t i = 0; i < n; ++i) ch.s_R[i] = rng.next_cgaussian(var_sr);

    return ch;
}

/// Composites for phase vector phi:
///   h_D = g_D + s_R^H diag(e^{j theta}) s_T      h_C = f_C + s_R^H diag(e^{j theta}) s_C
///   h_C_vec = g_C + S_B diag(e^{j theta}) s_C    h_D_vec = f_D + S_B diag(e^{j theta}) s_T
inline EffectiveChannels effective_channels(const ChannelSet& ch, const PhaseVector& phi) {
    const std::size_t m = ch.antennas();
    const std::size_t n = ch.elements();
    if (phi.size() != n || ch.s_T.size() != n || ch.s_R.size() != n ||
        ch.S_B.rows() != m || ch.S_B.cols() != n || ch.f_D.size() != m)
        throw DimensionError("effective_channels: dimension mismatch");

    EffectiveChannels eff;
    eff.h_D = ch.g_D;
    eff.h_C = ch.f_C;
    eff.h_C_vec = ch.g_C;
    eff.h_D_vec = ch.f_D;
    for (std::size_t k = 0; k < n; ++k) {
        const cxd t = phi.coefficients[k];
        eff.h_D += std::conj(ch.s_R[k]) * t * ch.s_T[k];
        eff.h_C += std::conj(ch.s_R[k]) * t * ch.s_C[k];
        for (std::size_t i = 0; i < m; ++i) {
            eff.h_C_vec[i] += ch.S_B(i, k) * t * ch.s_C[k];
            eff.h_D_vec[i] += ch.S_B(i, k) * t * ch.s_T[k];
        }
    }
    return eff;
}

/// Uplink SINRs at the DR and (for a given receive beamformer) at the BS.
inline double sinr_d2d(const EffectiveChannels& eff, double p_D, double p_C, double sigma2_D) {
    return p_D * std::norm(eff.h_D) / (p_C * std::norm(eff.h_C) + sigma2_D);
}

inline double sinr_cellular(const EffectiveChannels& eff, const CVector& w, double p_D,
                            double p_C, double sigma2_B) {
    const cxd wc = vdot(w, eff.h_C_vec);
    const cxd wd = vdot(w, eff.h_D_vec);
    return p_C * std::norm(wc) / (p_D * std::norm(wd) + sigma2_B);
}

inline double sum_rate_nats(double gamma_D, double gamma_C) {
    return std::log1p(gamma_D) + std::log1p(gamma_C);
}

} // namespace risd2d

#endif // RISD2D_CHANNEL_MODEL_HPP
