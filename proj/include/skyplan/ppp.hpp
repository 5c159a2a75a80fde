// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "skyplan/config.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/quadrature.hpp"
#include "skyplan/rng.hpp"

namespace skyplan {

/// One realization of the homogeneous user point process, restricted to a
/// disk around the platform nadir.
struct deployment {
    std::vector<std::array<double, 2>> points;
    double density = 0.0;
    double disk_radius = 0.0;
    std::uint64_t seed = 0;
};

/// Poisson(density * pi * radius^2) points, uniform in the disk.
inline deployment sample_ppp_disk(double density, double radius, rng_stream& rng) {
    deployment dep;
    dep.density = density;
    dep.disk_radius = radius;
    const long n = rng.poisson(density * std::numbers::pi * radius * radius);
    dep.points.reserve(n);
    for (long i = 0; i < n; ++i) {
        const double r = rng.disk_distance(radius);
        const double ang = 2.0 * std::numbers::pi * rng.uniform();
        dep.points.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return dep;
}

/// Users across the area of interest; deterministic per seed.
inline deployment sample_ppp(const scenario_params& s, std::uint64_t seed) {
    rng_stream rng(seed);
    deployment dep = sample_ppp_disk(s.user_density, s.aoi_radius(), rng);
    dep.seed = seed;
    return dep;
}

/// Density of the distance to the n-th closest point of a planar Poisson
/// process: f(r) = r^(2n-1) (lambda pi)^n 2/(n-1)! exp(-lambda pi r^2).
/// Evaluated in log space so large orders stay finite.
inline double nth_distance_pdf(int n, double lambda_u, double r) {
    if (r <= 0.0) return 0.0;
    const double lp = lambda_u * std::numbers::pi;
    const double logf = (2.0 * n - 1.0) * std::log(r) + n * std::log(lp) -
                        lp * r * r - std::lgamma(n) + std::log(2.0);
    return std::exp(logf);
}

/// CDF of the n-th order distance, by numerical integration of the density.
inline double nth_distance_cdf(int n, double lambda_u, double r) {
    if (r <= 0.0) return 0.0;
    return integrate([n, lambda_u](double x) { return nth_distance_pdf(n, lambda_u, x); },
                     0.0, r, 1e-10, 1e-14, "order_distance_cdf");
}

/// Order of the first user expected outside the vertical-beam disk:
/// floor(lambda_u pi r_vb^2) + 1.
inline int tb_target_index(double lambda_u, double r_vb) {
    return static_cast<int>(std::floor(lambda_u * std::numbers::pi * r_vb * r_vb)) + 1;
}

struct beam_assignment {
    footprint_kind beam;
    bool served = false;
    double distance = 0.0;  // 2D distance; meaningful only when served
};

/// Associate users to beams for one realization: the vertical beam serves
/// the closest user if it falls inside the disk; each tilted beam serves the
/// n-tilde-th closest (all beams use the same order in `paper` mode,
/// consecutive orders in `distinct` mode), truncated at the ellipse's far
/// ground range. Unserved beams are reported as such and contribute zero
/// capacity downstream.
inline std::vector<beam_assignment> associate(const deployment& dep,
                                              const beam_footprint& vb,
                                              const beam_footprint* tb,
                                              scheme_kind scheme, int n_beams,
                                              tb_order_mode order_mode) {
    std::vector<double> dist;
    dist.reserve(dep.points.size());
    for (const auto& p : dep.points)
        dist.push_back(std::hypot(p[0], p[1]));
    std::sort(dist.begin(), dist.end());

    std::vector<beam_assignment> out;
    beam_assignment vb_asgn{footprint_kind::disk};
    if (!dist.empty() && dist[0] <= vb.r_vb) {
        vb_asgn.served = true;
        vb_asgn.distance = dist[0];
    }
    out.push_back(vb_asgn);

    if (scheme == scheme_kind::hbf && n_beams > 1) {
        if (tb == nullptr)
            throw infeasible_geometry("tilted footprint required when n_beams > 1");
        const int n_tilde = tb_target_index(dep.density, vb.r_vb);
        for (int j = 0; j < n_beams - 1; ++j) {
            const int order =
                order_mode == tb_order_mode::paper ? n_tilde : n_tilde + j;
            beam_assignment tb_asgn{footprint_kind::ellipse};
            if (static_cast<std::size_t>(order) <= dist.size() &&
                dist[order - 1] <= tb->r_tb) {
                tb_asgn.served = true;
                tb_asgn.distance = dist[order - 1];
            }
            out.push_back(tb_asgn);
        }
    }
    return out;
}

}  // namespace skyplan
