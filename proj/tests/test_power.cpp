// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "skyplan/antenna.hpp"
#include "skyplan/footprint.hpp"
#include "skyplan/power.hpp"

using namespace skyplan;

namespace {
antenna_config square(int n) {
    antenna_config a;
    a.n_x = a.n_y = n;
    return a;
}
radio_config radio_for(scheme_kind scheme, int n_rf, int n_d, int bits = 6) {
    radio_config r;
    r.n_rf = scheme == scheme_kind::abf ? 1 : n_rf;
    r.n_beams = scheme == scheme_kind::abf ? 1 : n_d;
    r.dac_bits = bits;
    return r;
}
}  // namespace

TEST(PropulsionPower, HoverSpecialization) {
    propulsion_params p;
    p.k1 = 2.0;
    p.k2 = 1.0;
    p.c2 = 0.7;
    const double thrust = 14.715;
    const auto terms = propulsion_power(p, thrust, 0.0, 0.0);
    EXPECT_NEAR(terms.induced, p.k1 * std::pow(thrust, 1.5) / p.k2, 1e-10);
    EXPECT_NEAR(terms.profile, p.c2 * std::pow(thrust, 1.5), 1e-10);
    EXPECT_DOUBLE_EQ(terms.parasite, 0.0);
}

TEST(PropulsionPower, CubicParasiteAndClimb) {
    propulsion_params p;
    p.c4 = 0.5;
    const auto terms = propulsion_power(p, 1.0, 0.0, 2.0);
    EXPECT_DOUBLE_EQ(terms.parasite, 4.0);

    propulsion_params q;
    q.k1 = 2.0;
    q.k2 = 1.0;
    const auto climb = propulsion_power(q, 14.715, 1.0, 0.0);
    EXPECT_NEAR(climb.induced, 128.56384333404534, 1e-10);
}

TEST(HoverPower, ReferenceMassAndScaling) {
    scenario_params s;  // 1.5 kg, 2.84, g = 9.81
    EXPECT_NEAR(hover_power(s), 160.30930810348287, 1e-10);

    scenario_params s8 = s;
    s8.uav_mass = 4.0 * s.uav_mass;
    EXPECT_NEAR(hover_power(s8), 8.0 * hover_power(s), 8.0 * hover_power(s) * 1e-14);

    scenario_params s0 = s;
    s0.hover_constant = 0.0;
    EXPECT_DOUBLE_EQ(hover_power(s0), 0.0);
}

TEST(DacPower, ResolutionAndSamplingTerms) {
    EXPECT_NEAR(dac_power(6, 1e9), 0.05496, 1e-12);
    EXPECT_NEAR(dac_power(1, 0.0), 3e-5, 1e-18);
    // Doubling the sampling rate doubles only the second term.
    const double base = dac_power(4, 1e9);
    const double twice = dac_power(4, 2e9);
    EXPECT_NEAR(twice - base, base - dac_power(4, 0.0), 1e-15);
}

TEST(RfChainPower, ComponentSum) {
    radio_config r;
    EXPECT_NEAR(rf_chain_power(r), 0.0613, 1e-15);
    radio_config zero;
    zero.p_m = zero.p_lo = zero.p_lpf = zero.p_h = zero.p_bbamp = 0.0;
    EXPECT_DOUBLE_EQ(rf_chain_power(zero), 0.0);
    radio_config bumped = r;
    bumped.p_lo += 0.004;
    EXPECT_NEAR(rf_chain_power(bumped) - rf_chain_power(r), 0.004, 1e-15);
}

TEST(CommPower, ReferenceCurveAnchors) {
    EXPECT_NEAR(comm_power(scheme_kind::abf, radio_for(scheme_kind::abf, 1, 1),
                           square(9)),
                2.3106903703703704, 1e-12);
    EXPECT_NEAR(comm_power(scheme_kind::abf, radio_for(scheme_kind::abf, 1, 1),
                           square(17)),
                6.8034903703703704, 1e-12);
    EXPECT_NEAR(comm_power(scheme_kind::hbf, radio_for(scheme_kind::hbf, 3, 1),
                           square(9)),
                7.7708303703703704, 1e-12);
    EXPECT_NEAR(comm_power(scheme_kind::hbf, radio_for(scheme_kind::hbf, 9, 1),
                           square(17)),
                63.903950370370370, 1e-11);
}

TEST(CommPower, SingleChainHybridDiffersOnlyByCombiners) {
    for (int n : {9, 13, 17}) {
        const antenna_config ant = square(n);
        const radio_config r1 = radio_for(scheme_kind::hbf, 1, 1);
        const double abf = comm_power(scheme_kind::abf, r1, ant);
        const double hbf = comm_power(scheme_kind::hbf, r1, ant);
        EXPECT_NEAR(hbf, abf + boresight_gain(ant) * r1.p_c, 1e-12);
    }
}

TEST(CommPower, BreakdownSumsToTotal) {
    const radio_config r = radio_for(scheme_kind::hbf, 5, 3);
    const antenna_config ant = square(13);
    const comm_power_parts parts = comm_power_breakdown(scheme_kind::hbf, r, ant);
    EXPECT_NEAR(parts.total(), parts.pa + parts.dac + parts.rf_chain +
                                   parts.splitters + parts.phase_shifters +
                                   parts.combiners,
                1e-15);
    EXPECT_DOUBLE_EQ(parts.total(), comm_power(scheme_kind::hbf, r, ant));
}

TEST(SwarmPower, BreakdownInvariants) {
    const scenario_params s;
    const antenna_config ant = square(9);
    const beam_widths w = make_beam_widths(ant);
    const beam_footprint vb = vb_footprint(s.uav_altitude, w);
    const beam_footprint tb = tb_footprint(s.uav_altitude, w);

    const radio_config r = radio_for(scheme_kind::abf, 1, 1);
    const power_breakdown pb = swarm_power(scheme_kind::abf, r, ant, s, vb, nullptr);
    EXPECT_NEAR(pb.comm_total, pb.pa + pb.dac + pb.rf_chain + pb.phase_shifters +
                                   pb.splitters + pb.combiners,
                1e-12);
    EXPECT_DOUBLE_EQ(pb.per_uav_total, pb.hover + pb.comm_total);
    EXPECT_DOUBLE_EQ(pb.swarm_total, pb.n_uav * pb.per_uav_total);
    EXPECT_EQ(pb.n_uav, swarm_size(s.area_of_interest, vb.area));

    const radio_config rh = radio_for(scheme_kind::hbf, 1, 1);
    const power_breakdown hb = swarm_power(scheme_kind::hbf, rh, ant, s, vb, &tb);
    EXPECT_EQ(hb.n_uav, pb.n_uav);
    EXPECT_GT(hb.swarm_total, pb.swarm_total);
}

TEST(SwarmPower, NonIncreasingInBeamCount) {
    const scenario_params s;
    const antenna_config ant = square(9);
    const beam_widths w = make_beam_widths(ant);
    const beam_footprint vb = vb_footprint(s.uav_altitude, w);
    const beam_footprint tb = tb_footprint(s.uav_altitude, w);
    double prev = 1e300;
    for (int nd = 1; nd <= 5; ++nd) {
        const radio_config r = radio_for(scheme_kind::hbf, 5, nd);
        const double total =
            swarm_power(scheme_kind::hbf, r, ant, s, vb, &tb).swarm_total;
        EXPECT_LE(total, prev) << "n_d=" << nd;
        prev = total;
    }
}

TEST(SwarmPower, ConverterShareStaysMarginal) {
    const scenario_params s;
    for (int n : {9, 17}) {
        const antenna_config ant = square(n);
        for (int n_rf : {1, 3, 9}) {
            for (int bits = 1; bits <= 10; ++bits) {
                const scheme_kind scheme =
                    n_rf == 1 ? scheme_kind::abf : scheme_kind::hbf;
                const radio_config r = radio_for(scheme, n_rf, 1, bits);
                const comm_power_parts parts = comm_power_breakdown(scheme, r, ant);
                const double per_uav = hover_power(s) + parts.total();
                EXPECT_LT(parts.dac / per_uav, 0.05)
                    << "n=" << n << " n_rf=" << n_rf << " bits=" << bits;
            }
        }
    }
}

TEST(PowerEfficiency, RatioAndGuards) {
    EXPECT_DOUBLE_EQ(power_efficiency(0.0, 5.0), 0.0);
    EXPECT_DOUBLE_EQ(power_efficiency(1e9, 1e3), 1e6);
    EXPECT_THROW(power_efficiency(1.0, 0.0), infeasible_geometry);
}
