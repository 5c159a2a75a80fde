// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "skyplan/errors.hpp"

namespace skyplan {

/// Shared evaluation budget for one nested integral. Every integrand call at
/// any nesting level draws from the same pool; exhausting it raises
/// quadrature_error naming the level that was active, never returning a
/// silent partial result.
struct eval_budget {
    long remaining = 10'000'000;
    void charge(const char* level, long n = 1) {
        remaining -= n;
        if (remaining < 0)
            throw quadrature_error(level, "integration budget exhausted at level '" +
                                              std::string(level) + "'");
    }
};

struct quad_options {
    double rel_tol = 1e-4;
    double abs_tol = 0.0;  // absolute floor; 0 means purely relative
    int max_segments = 2000;
};

namespace detail {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15(F&& f, double a, double b, double& value, double& error) {
    const double center = 0.5 * (a + b);
    const double halflen = 0.5 * (b - a);
    const double fc = f(center);
    double kron = fc * kKronrodW[7];
    double gauss = fc * kGaussW[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = halflen * kGkNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kron += pair * kKronrodW[i];
        if (i % 2 == 1) gauss += pair * kGaussW[i / 2];
    }
    value = kron * halflen;
    const double diff = std::fabs(kron - gauss) * halflen;
    // QUADPACK error heuristic: (200*diff)^1.5 capped by diff itself.
    error = diff;
    if (diff > 0.0) {
        const double scaled = std::pow(200.0 * diff, 1.5);
        if (scaled < error) error = scaled;
    }
}

struct segment {
    double a, b, value, error;
    bool operator<(const segment& o) const { return error < o.error; }
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]: the segment
/// with the largest error estimate is split until the accumulated error is
/// below max(abs_tol, rel_tol * |integral|). `level` names the integration
/// variable in budget/subdivision failures.
template <class F>
inline double integrate_adaptive(F&& f, double a, double b, const quad_options& opt,
                                 eval_budget& budget, const char* level) {
    if (a == b) return 0.0;
    budget.charge(level, 15);
    detail::segment first{};
    first.a = a;
    first.b = b;
    detail::gk15(f, a, b, first.value, first.error);

    std::priority_queue<detail::segment> heap;
    heap.push(first);
    double total = first.value;
    double total_err = first.error;
    int segments = 1;

    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        if (segments >= opt.max_segments)
            throw quadrature_error(level, "no convergence at level '" + std::string(level) +
                                              "' after " + std::to_string(segments) +
                                              " segments");
        detail::segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            break;  // interval at rounding resolution; accept what we have
        budget.charge(level, 30);
        detail::segment left{}, right{};
        left.a = worst.a;
        left.b = mid;
        right.a = mid;
        right.b = worst.b;
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    return total;
}

/// Convenience wrapper with a private budget, for standalone 1D integrals.
template <class F>
inline double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                        double abs_tol = 0.0, const char* level = "integral") {
    eval_budget budget;
    quad_options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = abs_tol;
    return integrate_adaptive(f, a, b, opt, budget, level);
}

}  // namespace skyplan
