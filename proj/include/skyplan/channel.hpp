// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "skyplan/config.hpp"
#include "skyplan/rng.hpp"

namespace skyplan {

enum class link_state { los, nlos };

/// Small-scale power fading: Gamma with integer shape m and mean `spread`.
///
/// Convention note: the Nakagami CDF is usually written for the signal
/// AMPLITUDE (argument x^2). The capacity theorems consume the LINEAR power
/// gain, i.e. gamma ~ Gamma(shape m, scale spread/m), and that is the
/// convention implemented throughout this library: mean of the power gain
/// equals `spread`, and the CCDF below takes a linear power threshold.
struct fading_dist {
    int shape;      // m >= 1, integer
    double spread;  // Omega > 0
    link_state state;
};

inline fading_dist los_fading(const channel_params& ch) {
    return {ch.shape_los, ch.spread_los, link_state::los};
}
inline fading_dist nlos_fading(const channel_params& ch) {
    return {ch.shape_nlos, ch.spread_nlos, link_state::nlos};
}

/// LOS probability of the air-to-ground link at ground distance r and
/// altitude h, via the S-curve in the angle argument
/// arctan(h / sqrt(r^2 + h^2)) (in degrees). `elevation_mode::standard`
/// switches to the conventional elevation angle arctan(h / r).
inline double los_probability(double r, double h, const channel_params& ch) {
    double angle_deg;
    if (ch.elevation == elevation_mode::paper)
        angle_deg = std::atan(h / std::sqrt(r * r + h * h)) * 180.0 / std::numbers::pi;
    else
        angle_deg = std::atan2(h, r) * 180.0 / std::numbers::pi;
    return 1.0 /
           (1.0 + ch.s_curve_p *
                      std::exp(-ch.s_curve_q * (angle_deg - ch.s_curve_p)));
}

/// Power-law path gain eta_i * R^(-kappa_i), R = sqrt(r^2 + h^2).
inline double path_gain(double r, double h, link_state state,
                        const channel_params& ch) {
    const double r3d_sq = r * r + h * h;
    const double eta = state == link_state::los ? ch.unit_gain_los : ch.unit_gain_nlos;
    const double kappa = state == link_state::los ? ch.ple_los : ch.ple_nlos;
    return eta * std::pow(r3d_sq, -0.5 * kappa);
}

/// P[gamma > x] for the integer-shape Gamma power gain:
/// exp(-t) * sum_{k<m} t^k / k!  with  t = (m/Omega) x.
/// Thresholds at or below zero are below the support, so the survival
/// probability is 1.
inline double fading_ccdf(const fading_dist& dist, double x) {
    if (x <= 0.0) return 1.0;
    const double t = dist.shape / dist.spread * x;
    if (t > 745.0) return 0.0;  // exp underflows; every term vanishes
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < dist.shape; ++k) {
        term *= t / k;
        sum += term;
    }
    return std::exp(-t) * sum;
}

/// Gamma(m, Omega/m) density; integrates to 1 and has mean Omega.
inline double fading_pdf(const fading_dist& dist, double x) {
    if (x < 0.0) return 0.0;
    const double rate = dist.shape / dist.spread;
    if (x == 0.0) return dist.shape == 1 ? rate : 0.0;
    const double logp = dist.shape * std::log(rate) +
                        (dist.shape - 1) * std::log(x) - rate * x -
                        std::lgamma(dist.shape);
    return std::exp(logp);
}

/// Draw one power-gain sample; with integer shape the Gamma is an exact sum
/// of exponentials, so no rejection step is needed.
inline double fading_sample(const fading_dist& dist, rng_stream& rng) {
    return rng.gamma_integer(dist.shape, dist.spread / dist.shape);
}

/// Quantile of the power gain (bisection on the closed-form CCDF).
inline double fading_quantile(const fading_dist& dist, double prob) {
    const double tail = 1.0 - prob;
    double hi = dist.spread;
    while (fading_ccdf(dist, hi) > tail) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (fading_ccdf(dist, mid) > tail)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace skyplan
