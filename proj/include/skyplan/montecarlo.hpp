// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

#include "skyplan/capacity.hpp"
#include "skyplan/channel.hpp"
#include "skyplan/config.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/ppp.hpp"
#include "skyplan/rng.hpp"

namespace skyplan {

/// Worker-pool width: explicit option, else SKYPLAN_THREADS, else hardware.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SKYPLAN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

/// Fixed-shape pairwise reduction; the result depends only on the vector
/// contents, never on how many workers filled it.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <class Fn>
inline void parallel_for(long n, int threads, Fn&& body) {
    threads = std::min<long>(threads, n);
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const long chunk = 256;
                const long begin = next.fetch_add(chunk);
                if (begin >= n) return;
                const long end = std::min(begin + chunk, n);
                for (long i = begin; i < end; ++i) body(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

struct mc_options {
    los_mode los = los_mode::weighted;
    tb_order_mode tb_orders = tb_order_mode::paper;
    int threads = 0;  // 0 = resolve from environment
};

/// Monte Carlo estimate of the scheme capacity. Per realization: draw a
/// user point process, associate beams to order-ranked user distances with
/// footprint truncation, draw per-beam fading, average the per-beam Shannon
/// rates. Realization i always uses substream(seed, i), so the estimate is
/// bitwise reproducible for a given seed regardless of worker count.
///
/// The point process is sampled out to the largest footprint truncation
/// radius (not just the area of interest): the order-statistic distances the
/// capacity theorems integrate are those of the unbounded process, and any
/// user beyond the footprint is unserved anyway, so this reproduces exactly
/// the expectation the analytic path computes. With the default density and
/// area the two supports coincide for all but the highest altitudes.
inline capacity_estimate mc_capacity(const scenario_params& scn,
                                     const channel_params& ch,
                                     const antenna_config& ant,
                                     const link_budget& lb, scheme_kind scheme,
                                     long realizations, std::uint64_t seed,
                                     const mc_options& opt = {}) {
    const beam_widths w = make_beam_widths(ant);
    const beam_footprint vb = vb_footprint(scn.uav_altitude, w);
    const bool has_tb = scheme == scheme_kind::hbf && lb.n_beams > 1;
    beam_footprint tb{};
    if (has_tb) tb = tb_footprint(scn.uav_altitude, w);

    const double r_sim = std::max(scn.aoi_radius(), has_tb ? tb.r_tb : vb.r_vb);
    const int n_tilde = tb_target_index(scn.user_density, vb.r_vb);
    const fading_dist los = los_fading(ch);
    const fading_dist nlos = nlos_fading(ch);
    const double h = scn.uav_altitude;
    const double b = lb.bandwidth;

    std::vector<double> values(realizations);
    detail::parallel_for(realizations, resolve_threads(opt.threads), [&](long i) {
        rng_stream rng = rng_stream::substream(seed, static_cast<std::uint64_t>(i));
        const long n = rng.poisson(scn.user_density * std::numbers::pi * r_sim * r_sim);
        std::vector<double> dist(n);
        for (long k = 0; k < n; ++k) dist[k] = rng.disk_distance(r_sim);

        // Orders needed: 1 for the vertical beam, n_tilde(+j) for tilted ones.
        long max_order = 1;
        if (has_tb)
            max_order = opt.tb_orders == tb_order_mode::paper
                            ? n_tilde
                            : n_tilde + lb.n_beams - 2;
        const long keep = std::min<long>(n, max_order);
        std::partial_sort(dist.begin(), dist.begin() + keep, dist.end());

        auto beam_rate = [&](double r) {
            double inst_snr;
            if (opt.los == los_mode::weighted) {
                const double gl = fading_sample(los, rng);
                const double gn = fading_sample(nlos, rng);
                inst_snr = snr(r, h, gl, gn, lb, ch);
            } else {
                // Off-model alternative: one Bernoulli blockage state per draw.
                const double p_los = los_probability(r, h, ch);
                const bool is_los = rng.uniform() < p_los;
                const fading_dist& fd = is_los ? los : nlos;
                const double g = fading_sample(fd, rng);
                const double pg =
                    path_gain(r, h, is_los ? link_state::los : link_state::nlos, ch);
                inst_snr = lb.tx_power * lb.gain * g * pg /
                           (lb.n_beams * lb.noise_figure * lb.noise_power);
            }
            return b * std::log2(1.0 + inst_snr);
        };

        double vb_rate = 0.0;
        if (n >= 1 && dist[0] <= vb.r_vb) vb_rate = beam_rate(dist[0]);

        if (!has_tb) {
            values[i] = vb_rate;
            return;
        }
        double tb_sum = 0.0;
        for (int j = 0; j < lb.n_beams - 1; ++j) {
            const int order =
                opt.tb_orders == tb_order_mode::paper ? n_tilde : n_tilde + j;
            if (order <= n && dist[order - 1] <= tb.r_tb)
                tb_sum += beam_rate(dist[order - 1]);
        }
        values[i] = (vb_rate + tb_sum) / lb.n_beams;
    });

    capacity_estimate est;
    est.method = estimate_method::monte_carlo;
    est.realizations = realizations;
    const double mean = detail::pairwise_sum(values) / realizations;
    std::vector<double> sq(realizations);
    for (long i = 0; i < realizations; ++i) {
        const double d = values[i] - mean;
        sq[i] = d * d;
    }
    const double var =
        realizations > 1 ? detail::pairwise_sum(sq) / (realizations - 1) : 0.0;
    const double half = 1.959963984540054 * std::sqrt(var / realizations);
    est.value = mean;
    est.ci_low = mean - half;
    est.ci_high = mean + half;
    return est;
}

struct ks_result {
    int order = 0;
    double statistic = 1.0;
    long samples = 0;
};

/// Kolmogorov-Smirnov distance between sorted samples and a CDF.
inline double ks_statistic(const std::vector<double>& sorted,
                           const std::function<double(double)>& cdf) {
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    double prev_cdf = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = i == 0 || sorted[i] != sorted[i - 1] ? cdf(sorted[i]) : prev_cdf;
        prev_cdf = f;
        d = std::max(d, std::fabs(f - (i + 1) / n));
        d = std::max(d, std::fabs(f - i / n));
    }
    return d;
}

/// Regression check of the deployment sampler: the empirical distribution
/// of the order-ranked distances across many realizations against the
/// order-distance density, integrated numerically and conditioned on the
/// order existing inside the sampling disk.
inline std::vector<ks_result> mc_distance_validation(const scenario_params& scn,
                                                     long realizations,
                                                     std::uint64_t seed,
                                                     const std::vector<int>& orders = {1},
                                                     int threads = 0) {
    const double radius = scn.aoi_radius();
    const int max_order = *std::max_element(orders.begin(), orders.end());
    std::vector<std::vector<double>> collected(orders.size());
    for (auto& v : collected) v.reserve(realizations);

    std::vector<std::vector<double>> per_real(realizations);
    detail::parallel_for(realizations, resolve_threads(threads), [&](long i) {
        rng_stream rng = rng_stream::substream(seed, static_cast<std::uint64_t>(i));
        const long n =
            rng.poisson(scn.user_density * std::numbers::pi * radius * radius);
        std::vector<double> dist(n);
        for (long k = 0; k < n; ++k) dist[k] = rng.disk_distance(radius);
        const long keep = std::min<long>(n, max_order);
        std::partial_sort(dist.begin(), dist.begin() + keep, dist.end());
        dist.resize(keep);
        per_real[i] = std::move(dist);
    });
    for (long i = 0; i < realizations; ++i)
        for (std::size_t oi = 0; oi < orders.size(); ++oi)
            if (per_real[i].size() >= static_cast<std::size_t>(orders[oi]))
                collected[oi].push_back(per_real[i][orders[oi] - 1]);

    std::vector<ks_result> out;
    for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        auto& samples = collected[oi];
        std::sort(samples.begin(), samples.end());
        const int order = orders[oi];
        // Cumulative integral of the density along the sorted samples, then
        // conditioned on the order statistic falling inside the disk.
        std::vector<double> cdf(samples.size());
        double acc = 0.0, prev = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            acc += integrate(
                [order, &scn](double x) {
                    return nth_distance_pdf(order, scn.user_density, x);
                },
                prev, samples[i], 1e-9, 1e-13, "order_distance_cdf");
            prev = samples[i];
            cdf[i] = acc;
        }
        const double norm =
            acc + integrate(
                      [order, &scn](double x) {
                          return nth_distance_pdf(order, scn.user_density, x);
                      },
                      prev, radius, 1e-9, 1e-13, "order_distance_cdf");
        ks_result res;
        res.order = order;
        res.samples = static_cast<long>(samples.size());
        if (!samples.empty() && norm > 0.0) {
            const double n = static_cast<double>(samples.size());
            double d = 0.0;
            for (std::size_t i = 0; i < samples.size(); ++i) {
                const double f = cdf[i] / norm;
                d = std::max(d, std::fabs(f - (i + 1) / n));
                d = std::max(d, std::fabs(f - i / n));
            }
            res.statistic = d;
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace skyplan
