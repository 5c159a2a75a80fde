// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace skyplan {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ stream. Self-contained so that sequences are identical
/// across platforms and standard libraries; every stochastic operation
/// takes one of these explicitly.
class rng_stream {
  public:
    explicit rng_stream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Counter-based substream: realization `index` under `master` gets its
    /// own stream, so scheduling order and worker count cannot change draws.
    static rng_stream substream(std::uint64_t master, std::uint64_t index) {
        std::uint64_t sm = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return rng_stream(splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Exponential(1): -log(1 - U) keeps the argument in (0, 1].
    double exponential() { return -std::log1p(-uniform()); }

    /// Gamma with integer shape as a sum of exponentials, scaled so the
    /// mean is shape * scale.
    double gamma_integer(int shape, double scale) {
        double sum = 0.0;
        for (int i = 0; i < shape; ++i) sum += exponential();
        return scale * sum;
    }

    /// Poisson by product-of-uniforms, chunked so the intermediate
    /// exp(-mean) never underflows for large means.
    long poisson(double mean) {
        long total = 0;
        while (mean > 0.0) {
            const double lam = mean < 30.0 ? mean : 30.0;
            mean -= lam;
            const double limit = std::exp(-lam);
            double prod = uniform();
            long k = 0;
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
            total += k;
        }
        return total;
    }

    /// Distance from the center of a uniform draw in a disk of `radius`.
    double disk_distance(double radius) { return radius * std::sqrt(uniform()); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace skyplan
