// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "skyplan/config.hpp"
#include "skyplan/errors.hpp"

namespace skyplan {

/// Half-power beamwidths of the vertical beam, the adjacent tilted beam,
/// and the per-axis linear-array width they derive from. All radians.
struct beam_widths {
    double theta_vb;   // vertical beam HPBW
    double theta_tb;   // tilted beam HPBW (>= theta_vb)
    double theta_ula;  // per-axis HPBW
};

namespace detail {
// Squared Dirichlet-kernel factor sin^2(pi N psi) / (N sin^2(pi psi)),
// with the removable singularity at integer psi evaluating to N.
inline double dirichlet_factor(int n, double psi) {
    const double frac = psi - std::round(psi);
    if (std::fabs(frac) < 1e-12) return static_cast<double>(n);
    const double num = std::sin(std::numbers::pi * n * psi);
    const double den = std::sin(std::numbers::pi * psi);
    return num * num / (n * den * den);
}
}  // namespace detail

/// Array gain of the planar array at offsets (dtheta, dphi) from boresight:
/// the product of the two per-axis Dirichlet factors with
/// psi_x = rho sin(dtheta) cos(dphi), psi_y = rho sin(dtheta) sin(dphi).
inline double array_gain(const antenna_config& cfg, double dtheta, double dphi) {
    const double s = std::sin(dtheta);
    const double psi_x = cfg.spacing_ratio * s * std::cos(dphi);
    const double psi_y = cfg.spacing_ratio * s * std::sin(dphi);
    return detail::dirichlet_factor(cfg.n_x, psi_x) *
           detail::dirichlet_factor(cfg.n_y, psi_y);
}

/// Main-lobe directivity gain: N_x * N_y.
inline double boresight_gain(const antenna_config& cfg) {
    return static_cast<double>(cfg.n_x) * cfg.n_y;
}

/// Per-axis HPBW of a uniform linear array of n_axis elements at spacing
/// ratio rho: pi - 2 arccos(1.391 / (pi rho n_axis)).
inline double ula_hpbw(int n_axis, double rho) {
    const double arg = 1.391 / (std::numbers::pi * rho * n_axis);
    if (arg > 1.0) {
        const int n_min =
            static_cast<int>(std::ceil(1.391 / (std::numbers::pi * rho)));
        throw infeasible_geometry(
            "beamwidth undefined for n_axis=" + std::to_string(n_axis) +
            " at spacing_ratio=" + std::to_string(rho) +
            "; need n_axis >= " + std::to_string(n_min));
    }
    return std::numbers::pi - 2.0 * std::acos(arg);
}

/// Planar-array HPBW at elevation theta and azimuth phi, from the per-axis
/// widths. For square arrays this reduces to theta_ula / cos(theta),
/// independent of phi.
inline double upa_hpbw(double theta_lx, double theta_ly, double theta, double phi) {
    const double c = std::cos(theta);
    if (c <= 1e-9)
        throw infeasible_geometry("grazing elevation: cos(theta) not positive");
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double inv = c * c * (cphi * cphi / (theta_lx * theta_lx) +
                                sphi * sphi / (theta_ly * theta_ly));
    return 1.0 / std::sqrt(inv);
}

/// Width of the tilted beam adjacent to the vertical one. Solves the
/// implicit relation x = theta_ula / cos((theta_vb + x)/2) by fixed-point
/// iteration from x0 = theta_vb; the iteration picks the smallest root.
inline double tilted_hpbw(const antenna_config& cfg) {
    const double theta_l = ula_hpbw(cfg.n_x, cfg.spacing_ratio);
    const double theta_vb = theta_l;  // square array, boresight
    double x = theta_vb;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (theta_vb + x);
        if (mid >= std::numbers::pi / 2.0)
            throw infeasible_geometry("tilted beamwidth crosses grazing angle");
        const double next = theta_l / std::cos(mid);
        const double mid_next = 0.5 * (theta_vb + next);
        if (mid_next >= std::numbers::pi / 2.0)
            throw infeasible_geometry("tilted beamwidth crosses grazing angle");
        const double residual = std::fabs(next - theta_l / std::cos(mid_next));
        if (std::fabs(next - x) < 1e-9 && residual < 1e-9) return next;
        x = next;
    }
    throw infeasible_geometry("tilted beamwidth fixed point did not converge");
}

inline beam_widths make_beam_widths(const antenna_config& cfg) {
    beam_widths w{};
    w.theta_ula = ula_hpbw(cfg.n_x, cfg.spacing_ratio);
    w.theta_vb = w.theta_ula;
    w.theta_tb = tilted_hpbw(cfg);
    return w;
}

}  // namespace skyplan
