// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "skyplan/antenna.hpp"
#include "skyplan/channel.hpp"
#include "skyplan/config.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/ppp.hpp"
#include "skyplan/quadrature.hpp"

namespace skyplan {

enum class estimate_method { analytic, monte_carlo };

struct capacity_estimate {
    double value = 0.0;  // [bit/s]
    estimate_method method = estimate_method::analytic;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double quad_rel_tol = 0.0;  // analytic runs
    long realizations = 0;      // Monte Carlo runs
};

/// Everything the SNR expression needs besides the channel.
struct link_budget {
    double tx_power;      // P_t [W]
    double gain;          // boresight array gain G
    int n_beams;          // N_D: the transmit power divides across beams
    double noise_figure;  // linear
    double noise_power;   // sigma^2 [W]
    double bandwidth;     // B [Hz]
};

inline link_budget make_link_budget(const radio_config& r, const antenna_config& a) {
    return {r.tx_power, boresight_gain(a), r.n_beams,
            r.noise_figure, r.noise_power, r.bandwidth};
}

namespace detail {

/// SNR(r) = c_los * gamma_L + c_nlos * gamma_N with the LOS and NLOS path
/// contributions weighted by their probabilities.
struct link_coeffs {
    double c_los;
    double c_nlos;
};

inline link_coeffs snr_coeffs(double r, double h, const link_budget& lb,
                              const channel_params& ch) {
    const double denom = lb.n_beams * lb.noise_figure * lb.noise_power;
    const double p_los = los_probability(r, h, ch);
    const double scale = lb.tx_power * lb.gain / denom;
    return {scale * p_los * path_gain(r, h, link_state::los, ch),
            scale * (1.0 - p_los) * path_gain(r, h, link_state::nlos, ch)};
}

}  // namespace detail

/// Probability-weighted LOS/NLOS superposition SNR at ground distance r.
inline double snr(double r, double h, double gamma_l, double gamma_n,
                  const link_budget& lb, const channel_params& ch) {
    const auto c = detail::snr_coeffs(r, h, lb, ch);
    return c.c_los * gamma_l + c.c_nlos * gamma_n;
}

/// LOS-fading threshold for spectral efficiency t (bit/s/Hz) given the NLOS
/// draw: the gamma_L value at which log2(1 + SNR) = t. May be negative when
/// the NLOS term alone already exceeds the target.
inline double beta_threshold(double t, double gamma_n, double r, double h,
                             const link_budget& lb, const channel_params& ch) {
    const auto c = detail::snr_coeffs(r, h, lb, ch);
    return (std::expm1(t * std::numbers::ln2) - c.c_nlos * gamma_n) / c.c_los;
}

struct tau_options {
    double rel_tol = 1e-4;        // per integration level
    long max_evals = 10'000'000;  // shared across all levels of one estimate
};

namespace detail {

/// Ergodic capacity of one beam serving the `order`-th closest user within
/// ground range r_limit:
///
///   B * int_0^r_limit f_order(r) int_0^inf int_0^inf
///         Q_L(beta(t, g)) pdf_N(g) dg dt dr
///
/// where Q_L is the LOS power-fading survival function, so the innermost
/// two integrals equal E[log2(1 + SNR(r))]. The improper integrals are
/// truncated where the integrand is provably below 1e-12: the NLOS variable
/// at its 1 - 1e-8 quantile and the spectral efficiency at the rate
/// achieved by the 1 - 1e-10 fading quantiles.
inline capacity_estimate tau_order(const scenario_params& scn,
                                   const channel_params& ch,
                                   const link_budget& lb, int order,
                                   double r_limit, const tau_options& opt) {
    capacity_estimate est;
    est.method = estimate_method::analytic;
    est.quad_rel_tol = opt.rel_tol;
    if (lb.bandwidth == 0.0 || r_limit <= 0.0) return est;

    const fading_dist los = los_fading(ch);
    const fading_dist nlos = nlos_fading(ch);
    const double g_nlos_hi = fading_quantile(nlos, 1.0 - 1e-8);
    const double g_star =
        std::max(fading_quantile(los, 1.0 - 1e-10), fading_quantile(nlos, 1.0 - 1e-10));
    const double lambda_u = scn.user_density;
    const double h = scn.uav_altitude;

    eval_budget budget{opt.max_evals};
    quad_options level;
    level.rel_tol = opt.rel_tol;

    auto rate_at = [&](double r) {
        const auto c = detail::snr_coeffs(r, h, lb, ch);
        const double t_max = std::log2(1.0 + c.c_los * g_star + c.c_nlos * g_star);
        if (t_max <= 0.0) return 0.0;
        auto survival_at = [&](double t) {
            const double target = std::expm1(t * std::numbers::ln2);
            auto inner = [&](double g) {
                const double beta = (target - c.c_nlos * g) / c.c_los;
                return fading_ccdf(los, beta) * fading_pdf(nlos, g);
            };
            quad_options inner_opt = level;
            inner_opt.abs_tol = 1e-9;  // survival probabilities live in [0,1]
            return integrate_adaptive(inner, 0.0, g_nlos_hi, inner_opt, budget,
                                      "gamma_n");
        };
        quad_options t_opt = level;
        t_opt.abs_tol = 1e-9 * t_max;
        return integrate_adaptive(survival_at, 0.0, t_max, t_opt, budget, "t");
    };

    auto outer = [&](double r) {
        return nth_distance_pdf(order, lambda_u, r) * rate_at(r);
    };
    // The order-distance density is a narrow bump around its mode for high
    // orders; integrate the bump first so the coarse opening panels of a
    // wide interval cannot step over the mass, then sweep the tails against
    // an absolute floor tied to the bump's value.
    const double lp = lambda_u * std::numbers::pi;
    const double mode = std::sqrt((2.0 * order - 1.0) / (2.0 * lp));
    const double sigma = 0.5 / std::sqrt(lp);
    const double lo_cut = std::clamp(mode - 6.0 * sigma, 0.0, r_limit);
    const double hi_cut = std::clamp(mode + 6.0 * sigma, lo_cut, r_limit);
    quad_options r_opt = level;
    double total;
    if (hi_cut <= lo_cut) {
        total = integrate_adaptive(outer, 0.0, r_limit, r_opt, budget, "r");
    } else {
        total = integrate_adaptive(outer, lo_cut, hi_cut, r_opt, budget, "r");
        quad_options tail_opt = level;
        tail_opt.abs_tol = level.rel_tol * std::fabs(total);
        if (lo_cut > 0.0)
            total += integrate_adaptive(outer, 0.0, lo_cut, tail_opt, budget, "r");
        if (hi_cut < r_limit)
            total += integrate_adaptive(outer, hi_cut, r_limit, tail_opt, budget, "r");
    }
    est.value = lb.bandwidth * total;
    est.ci_low = est.ci_high = est.value;
    return est;
}

}  // namespace detail

/// Ergodic capacity of the vertical beam: closest user, disk truncation.
inline capacity_estimate tau_vb(const scenario_params& scn, const channel_params& ch,
                                const antenna_config& ant, const link_budget& lb,
                                const tau_options& opt = {}) {
    const beam_widths w = make_beam_widths(ant);
    const beam_footprint vb = vb_footprint(scn.uav_altitude, w);
    return detail::tau_order(scn, ch, lb, 1, vb.r_vb, opt);
}

/// Ergodic capacity of one tilted beam: the n-tilde-th closest user,
/// truncated at the ellipse's far ground range.
inline capacity_estimate tau_tb(const scenario_params& scn, const channel_params& ch,
                                const antenna_config& ant, const link_budget& lb,
                                const tau_options& opt = {}) {
    const beam_widths w = make_beam_widths(ant);
    const beam_footprint vb = vb_footprint(scn.uav_altitude, w);
    const beam_footprint tb = tb_footprint(scn.uav_altitude, w);
    const int order = tb_target_index(scn.user_density, vb.r_vb);
    return detail::tau_order(scn, ch, lb, order, tb.r_tb, opt);
}

/// Combine per-beam capacities: a single vertical beam for the analog
/// scheme, the N_D-beam average for the hybrid one (the SNR inside each
/// constituent already carries the 1/N_D power split).
inline double tau_scheme(scheme_kind scheme, int n_beams, double tau_vb_val,
                         double tau_tb_val) {
    if (scheme == scheme_kind::abf) return tau_vb_val;
    return (tau_vb_val + (n_beams - 1) * tau_tb_val) / n_beams;
}

}  // namespace skyplan
