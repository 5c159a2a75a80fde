// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skyplan/capacity.hpp"
#include "skyplan/config.hpp"
#include "skyplan/errors.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/montecarlo.hpp"
#include "skyplan/power.hpp"

namespace skyplan {

/// One point of the design space. Values come from the base config with
/// sweep/flag overrides applied.
struct eval_point {
    scheme_kind scheme = scheme_kind::abf;
    double h = 10.0;
    int n_axis = 9;
    int n_rf = 1;
    int n_d = 1;
    int b_dac = 6;
    double lambda_u = 0.05;
};

inline eval_point point_from_config(const config& c, scheme_kind scheme) {
    eval_point p;
    p.scheme = scheme;
    p.h = c.scenario.uav_altitude;
    p.n_axis = c.antenna.n_x;
    p.n_rf = c.radio.n_rf;
    p.n_d = c.radio.n_beams;
    p.b_dac = c.radio.dac_bits;
    p.lambda_u = c.scenario.user_density;
    return p;
}

inline config apply_point(const config& base, const eval_point& p) {
    config c = base;
    c.scenario.uav_altitude = p.h;
    c.scenario.user_density = p.lambda_u;
    c.antenna.n_x = c.antenna.n_y = p.n_axis;
    c.radio.n_rf = p.n_rf;
    c.radio.n_beams = p.n_d;
    c.radio.dac_bits = p.b_dac;
    if (p.scheme == scheme_kind::abf && p.n_d != 1)
        throw config_error("scheme abf requires n_d = 1");
    validate(c);
    return c;
}

/// Full single-point evaluation: geometry, power, capacity, efficiency.
struct eval_result {
    eval_point point;
    beam_widths widths{};
    beam_footprint vb{};
    std::optional<beam_footprint> tb;
    double s_cov = 0.0;
    power_breakdown power{};
    capacity_estimate tau{};
    double tau_vb_value = 0.0;
    double tau_tb_value = 0.0;
    double efficiency = 0.0;  // scheme capacity per swarm watt
    std::uint64_t seed = 0;
};

inline eval_result evaluate_point(const config& base, const eval_point& p,
                                  estimate_method method, long realizations,
                                  std::uint64_t seed, const tau_options& topt = {},
                                  int threads = 0) {
    const config c = apply_point(base, p);
    eval_result out;
    out.point = p;
    out.seed = seed;
    out.widths = make_beam_widths(c.antenna);
    out.vb = vb_footprint(c.scenario.uav_altitude, out.widths);
    try {
        out.tb = tb_footprint(c.scenario.uav_altitude, out.widths);
    } catch (const infeasible_geometry&) {
        // Only fatal when tilted beams are actually in use.
        if (p.scheme == scheme_kind::hbf && c.radio.n_beams > 1) throw;
    }
    out.s_cov = coverage_area(p.scheme, c.radio.n_beams, out.vb,
                              out.tb ? &*out.tb : nullptr);
    out.power = swarm_power(p.scheme, c.radio, c.antenna, c.scenario, out.vb,
                            out.tb ? &*out.tb : nullptr);

    const link_budget lb = make_link_budget(c.radio, c.antenna);
    if (method == estimate_method::analytic) {
        const capacity_estimate vb_est = tau_vb(c.scenario, c.channel, c.antenna, lb, topt);
        out.tau_vb_value = vb_est.value;
        if (p.scheme == scheme_kind::hbf && c.radio.n_beams > 1) {
            const capacity_estimate tb_est =
                tau_tb(c.scenario, c.channel, c.antenna, lb, topt);
            out.tau_tb_value = tb_est.value;
        }
        out.tau = vb_est;
        out.tau.value = tau_scheme(p.scheme, c.radio.n_beams, out.tau_vb_value,
                                   out.tau_tb_value);
        out.tau.ci_low = out.tau.ci_high = out.tau.value;
    } else {
        mc_options mopt;
        mopt.los = c.mc_los;
        mopt.tb_orders = c.mc_tb_orders;
        mopt.threads = threads;
        out.tau = mc_capacity(c.scenario, c.channel, c.antenna, lb, p.scheme,
                              realizations, seed, mopt);
    }
    out.efficiency = power_efficiency(out.tau.value, out.power.swarm_total);
    return out;
}

// ---------------------------------------------------------------------------
// CSV emission. Byte-stable: fixed column order, %.17g numerics, LF endings.
// ---------------------------------------------------------------------------

inline const char* csv_header() {
    return "scheme,h_m,n_x,n_y,n_rf,n_d,b_dac,lambda_u,theta_vb_deg,theta_tb_deg,"
           "r_vb_m,r_tb_m,s_cov_m2,n_uav,p_comm_w,p_hover_w,p_swarm_w,tau_bps,"
           "method,ci_low_bps,ci_high_bps,seed";
}

inline std::string csv_row(const eval_result& r) {
    auto g17 = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    const double rad2deg = 180.0 / std::numbers::pi;
    std::ostringstream out;
    out << (r.point.scheme == scheme_kind::abf ? "abf" : "hbf") << ','
        << g17(r.point.h) << ',' << r.point.n_axis << ',' << r.point.n_axis << ','
        << r.point.n_rf << ',' << r.point.n_d << ',' << r.point.b_dac << ','
        << g17(r.point.lambda_u) << ',' << g17(r.widths.theta_vb * rad2deg) << ','
        << g17(r.widths.theta_tb * rad2deg) << ',' << g17(r.vb.r_vb) << ','
        << g17(r.tb ? r.tb->r_tb : 0.0) << ',' << g17(r.s_cov) << ','
        << r.power.n_uav << ',' << g17(r.power.comm_total) << ','
        << g17(r.power.hover) << ',' << g17(r.power.swarm_total) << ','
        << g17(r.tau.value) << ','
        << (r.tau.method == estimate_method::analytic ? "analytic" : "mc") << ','
        << g17(r.tau.ci_low) << ',' << g17(r.tau.ci_high) << ',' << r.seed;
    return out.str();
}

// ---------------------------------------------------------------------------
// Sweep grids: Cartesian product of per-key ranges, expanded in the order
// the keys were given, each key's values in range order.
// ---------------------------------------------------------------------------

struct sweep_axis {
    std::string key;
    std::vector<double> numeric;       // for numeric keys
    std::vector<scheme_kind> schemes;  // for the scheme key
};

inline bool sweep_key_valid(const std::string& key) {
    return key == "h" || key == "n_axis" || key == "n_rf" || key == "n_d" ||
           key == "b_dac" || key == "lambda_u" || key == "scheme";
}

/// Parse "key=start:step:stop" (numeric) or "scheme=abf:hbf".
inline sweep_axis parse_sweep_axis(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw config_error("sweep spec must look like key=start:step:stop");
    sweep_axis axis;
    axis.key = text.substr(0, eq);
    if (!sweep_key_valid(axis.key))
        throw config_error("unknown sweep key '" + axis.key + "'");
    const std::string rest = text.substr(eq + 1);
    if (axis.key == "scheme") {
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const auto colon = rest.find(':', pos);
            const std::string item =
                rest.substr(pos, colon == std::string::npos ? std::string::npos
                                                            : colon - pos);
            pos = colon == std::string::npos ? rest.size() + 1 : colon + 1;
            if (item == "abf")
                axis.schemes.push_back(scheme_kind::abf);
            else if (item == "hbf")
                axis.schemes.push_back(scheme_kind::hbf);
            else
                throw config_error("scheme sweep values must be abf or hbf");
        }
        if (axis.schemes.empty()) throw config_error("empty sweep range for scheme");
        return axis;
    }
    double start = 0, step = 0, stop = 0;
    if (std::sscanf(rest.c_str(), "%lf:%lf:%lf", &start, &step, &stop) != 3)
        throw config_error("sweep range for '" + axis.key +
                           "' must be start:step:stop");
    if (step <= 0) throw config_error("sweep step must be positive");
    for (double v = start; v <= stop + 1e-9 * step; v += step)
        axis.numeric.push_back(v);
    if (axis.numeric.empty())
        throw config_error("empty sweep range for '" + axis.key + "'");
    return axis;
}

inline void apply_axis_value(eval_point& p, const sweep_axis& axis, std::size_t idx) {
    if (axis.key == "scheme") {
        p.scheme = axis.schemes[idx];
        return;
    }
    const double v = axis.numeric[idx];
    if (axis.key == "h")
        p.h = v;
    else if (axis.key == "n_axis")
        p.n_axis = static_cast<int>(std::llround(v));
    else if (axis.key == "n_rf")
        p.n_rf = static_cast<int>(std::llround(v));
    else if (axis.key == "n_d")
        p.n_d = static_cast<int>(std::llround(v));
    else if (axis.key == "b_dac")
        p.b_dac = static_cast<int>(std::llround(v));
    else if (axis.key == "lambda_u")
        p.lambda_u = v;
}

inline std::vector<eval_point> expand_sweep(const eval_point& base,
                                            const std::vector<sweep_axis>& axes) {
    std::vector<eval_point> points{base};
    for (const auto& axis : axes) {
        const std::size_t n =
            axis.key == "scheme" ? axis.schemes.size() : axis.numeric.size();
        std::vector<eval_point> next;
        next.reserve(points.size() * n);
        for (const auto& p : points)
            for (std::size_t i = 0; i < n; ++i) {
                eval_point q = p;
                apply_axis_value(q, axis, i);
                next.push_back(q);
            }
        points = std::move(next);
    }
    return points;
}

/// Evaluate a sweep with a worker pool; rows come back in sweep order no
/// matter which worker finished first.
inline std::vector<std::string> run_sweep(const config& base,
                                          const std::vector<eval_point>& points,
                                          estimate_method method, long realizations,
                                          std::uint64_t seed,
                                          const tau_options& topt = {},
                                          int threads = 0) {
    std::vector<std::string> rows(points.size());
    std::vector<std::string> errors(points.size());
    detail::parallel_for(static_cast<long>(points.size()), resolve_threads(threads),
                         [&](long i) {
                             try {
                                 // Inner evaluation stays single-threaded; the
                                 // pool parallelizes across points.
                                 const eval_result r = evaluate_point(
                                     base, points[i], method, realizations, seed,
                                     topt, 1);
                                 rows[i] = csv_row(r);
                             } catch (const std::exception& e) {
                                 errors[i] = e.what();
                             }
                         });
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!errors[i].empty())
            throw config_error("sweep point " + std::to_string(i) +
                               " failed: " + errors[i]);
    return rows;
}

}  // namespace skyplan
