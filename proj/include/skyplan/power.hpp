// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "skyplan/config.hpp"
#include "skyplan/footprint.hpp"

namespace skyplan {

struct propulsion_power_terms {
    double induced;   // thrust generation
    double profile;   // rotor drag
    double parasite;  // body drag
};

/// General-flight propulsion terms for a caller-supplied thrust; the thrust
/// balance itself is not solved here (it cancels in the hover case, the only
/// regime this planner evaluates).
inline propulsion_power_terms propulsion_power(const propulsion_params& p,
                                               double thrust, double v_vert,
                                               double v_air) {
    propulsion_power_terms out{};
    const double half_v = 0.5 * v_vert;
    out.induced =
        p.k1 * thrust * (half_v + std::sqrt(half_v * half_v + thrust / (p.k2 * p.k2)));
    const double cos_a = std::cos(p.angle_of_attack);
    out.profile = p.c2 * std::pow(thrust, 1.5) +
                  p.c3 * (v_air * cos_a) * (v_air * cos_a) * std::sqrt(thrust);
    out.parasite = p.c4 * v_air * v_air * v_air;
    return out;
}

/// Hover power (c1+c2) * (m g)^(3/2).
inline double hover_power(const scenario_params& s) {
    return s.hover_constant * std::pow(s.uav_mass * s.gravity, 1.5);
}

/// DAC power for a binary-weighted current-steering converter.
inline double dac_power(int bits, double f_s) {
    return 1.5e-5 * std::pow(2.0, bits) + 9e-12 * bits * f_s;
}

/// Per-chain RF front-end power: mixer, LO, low-pass filter, hybrid
/// coupler, base-band amplifier.
inline double rf_chain_power(const radio_config& r) {
    return r.p_m + r.p_lo + r.p_lpf + r.p_h + r.p_bbamp;
}

struct comm_power_parts {
    double pa = 0.0;
    double dac = 0.0;
    double rf_chain = 0.0;
    double splitters = 0.0;
    double phase_shifters = 0.0;
    double combiners = 0.0;
    double total() const {
        return pa + dac + rf_chain + splitters + phase_shifters + combiners;
    }
};

/// Static communication power of one transmitter.
///   single RF chain:  P_PA + 2 P_DAC + P_RF + P_SP + N_T P_PS
///   N_RF chains:      P_PA + N_RF (2 P_DAC + P_RF + P_SP)
///                          + N_T (N_RF P_PS + P_C)
/// The PA budget is P_t / efficiency regardless of how many beams split the
/// transmit power.
inline comm_power_parts comm_power_breakdown(scheme_kind scheme,
                                             const radio_config& r,
                                             const antenna_config& a) {
    comm_power_parts parts{};
    const double n_t = boresight_gain(a);
    const double p_dac = dac_power(r.dac_bits, r.dac_sampling);
    const double p_rf = rf_chain_power(r);
    parts.pa = r.tx_power / r.pa_efficiency;
    if (scheme == scheme_kind::abf) {
        parts.dac = 2.0 * p_dac;
        parts.rf_chain = p_rf;
        parts.splitters = r.p_sp;
        parts.phase_shifters = n_t * r.p_ps;
    } else {
        parts.dac = r.n_rf * 2.0 * p_dac;
        parts.rf_chain = r.n_rf * p_rf;
        parts.splitters = r.n_rf * r.p_sp;
        parts.phase_shifters = n_t * r.n_rf * r.p_ps;
        parts.combiners = n_t * r.p_c;
    }
    return parts;
}

inline double comm_power(scheme_kind scheme, const radio_config& r,
                         const antenna_config& a) {
    return comm_power_breakdown(scheme, r, a).total();
}

struct power_breakdown {
    double hover = 0.0;
    double pa = 0.0;
    double dac = 0.0;
    double rf_chain = 0.0;
    double phase_shifters = 0.0;
    double splitters = 0.0;
    double combiners = 0.0;
    double comm_total = 0.0;
    double per_uav_total = 0.0;
    double swarm_total = 0.0;
    long n_uav = 0;
};

/// Swarm power: the number of platforms tiling the area of interest, times
/// the per-platform hover + communication budget.
inline power_breakdown swarm_power(scheme_kind scheme, const radio_config& r,
                                   const antenna_config& a,
                                   const scenario_params& s,
                                   const beam_footprint& vb,
                                   const beam_footprint* tb) {
    power_breakdown out{};
    const comm_power_parts parts = comm_power_breakdown(scheme, r, a);
    out.hover = hover_power(s);
    out.pa = parts.pa;
    out.dac = parts.dac;
    out.rf_chain = parts.rf_chain;
    out.phase_shifters = parts.phase_shifters;
    out.splitters = parts.splitters;
    out.combiners = parts.combiners;
    out.comm_total = parts.total();
    out.per_uav_total = out.hover + out.comm_total;
    const double s_cov = coverage_area(scheme, r.n_beams, vb, tb);
    out.n_uav = swarm_size(s.area_of_interest, s_cov);
    out.swarm_total = out.n_uav * out.per_uav_total;
    return out;
}

/// Delivered capacity per watt.
inline double power_efficiency(double tau_bps, double power_w) {
    if (power_w <= 0.0) throw infeasible_geometry("power_efficiency requires power > 0");
    return tau_bps / power_w;
}

}  // namespace skyplan
