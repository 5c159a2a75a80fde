// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle_helpers.hpp"
#include "skyplan/antenna.hpp"

using namespace skyplan;

namespace {
constexpr double kDeg = 180.0 / std::numbers::pi;
antenna_config square(int n) {
    antenna_config a;
    a.n_x = a.n_y = n;
    return a;
}
}  // namespace

TEST(BoresightGain, ElementCountProduct) {
    EXPECT_DOUBLE_EQ(boresight_gain(square(9)), 81.0);
    EXPECT_DOUBLE_EQ(boresight_gain(square(13)), 169.0);
    EXPECT_DOUBLE_EQ(boresight_gain(square(17)), 289.0);
    EXPECT_DOUBLE_EQ(boresight_gain(square(9)), array_gain(square(9), 0.0, 0.0));
    EXPECT_DOUBLE_EQ(boresight_gain(square(17)), array_gain(square(17), 0.0, 0.0));
}

TEST(ArrayGain, FirstNullOfAxisFactor) {
    // psi_x = 1/N_x: the axis sum vanishes.
    const double dtheta = 0.46055399168132240;  // asin(1 / (rho * 9))
    EXPECT_NEAR(array_gain(square(9), dtheta, 0.0), 0.0, 1e-9);
}

TEST(ArrayGain, MatchesBruteForceSum) {
    const antenna_config a = square(9);
    for (double dtheta : {0.0, 0.05, 0.21, 0.6, 1.2})
        for (double dphi : {0.0, 0.4, 1.0, 2.2}) {
            const double direct = array_gain(a, dtheta, dphi);
            const double brute =
                oracle::array_gain_bruteforce(9, 9, a.spacing_ratio, dtheta, dphi);
            EXPECT_NEAR(direct, brute, 1e-9 * std::max(1.0, brute))
                << "dtheta=" << dtheta << " dphi=" << dphi;
        }
}

TEST(ArrayGain, SquareArraySymmetries) {
    const antenna_config a = square(11);
    for (double dtheta : {0.1, 0.35, 0.8})
        for (double dphi : {0.2, 0.9, 1.7}) {
            const double g = array_gain(a, dtheta, dphi);
            EXPECT_DOUBLE_EQ(g, array_gain(a, dtheta, -dphi));
            EXPECT_DOUBLE_EQ(g, array_gain(a, -dtheta, dphi));
        }
}

TEST(UlaHpbw, ReferenceCurveValues) {
    EXPECT_NEAR(ula_hpbw(9, 0.25) * kDeg, 22.698179983180503, 1e-11);
    EXPECT_NEAR(ula_hpbw(8, 0.25) * kDeg, 25.580731748569043, 1e-11);
    EXPECT_NEAR(ula_hpbw(16, 0.25) * kDeg, 12.710446039785133, 1e-11);
    // Reference-curve anchors, 0.05 degree tolerance.
    EXPECT_NEAR(ula_hpbw(9, 0.25) * kDeg, 22.710, 0.05);
    EXPECT_NEAR(ula_hpbw(8, 0.25) * kDeg, 25.594, 0.05);
    EXPECT_NEAR(ula_hpbw(16, 0.25) * kDeg, 12.717, 0.05);
}

TEST(UlaHpbw, MonotoneInCountAndSpacing) {
    for (int n = 3; n < 24; ++n)
        EXPECT_LT(ula_hpbw(n + 1, 0.25), ula_hpbw(n, 0.25));
    for (double rho : {0.15, 0.2, 0.3, 0.4})
        EXPECT_LT(ula_hpbw(9, rho + 0.05), ula_hpbw(9, rho));
}

TEST(UlaHpbw, DomainErrorNamesMinimumCount) {
    try {
        ula_hpbw(2, 0.05);
        FAIL() << "expected infeasible_geometry";
    } catch (const infeasible_geometry& e) {
        // ceil(1.391 / (pi * 0.05)) = 9
        EXPECT_NE(std::string(e.what()).find("n_axis >= 9"), std::string::npos);
    }
}

TEST(UpaHpbw, BoresightAndScaling) {
    const double theta_l = ula_hpbw(9, 0.25);
    EXPECT_DOUBLE_EQ(upa_hpbw(theta_l, theta_l, 0.0, 0.3), theta_l);
    EXPECT_NEAR(upa_hpbw(theta_l, theta_l, std::numbers::pi / 3.0, 0.0) * kDeg,
                45.396359966361005, 1e-10);
    EXPECT_NEAR(upa_hpbw(theta_l, theta_l, std::numbers::pi / 3.0, 0.0) * kDeg,
                22.698179983180503 / 0.5, 1e-9);
}

TEST(UpaHpbw, AzimuthIndependentForSquareArrays) {
    const double theta_l = ula_hpbw(13, 0.25);
    for (double theta : {0.0, 0.4, 1.0}) {
        const double w0 = upa_hpbw(theta_l, theta_l, theta, 0.0);
        const double w1 = upa_hpbw(theta_l, theta_l, theta, std::numbers::pi / 3.0);
        EXPECT_NEAR(w0, w1, 1e-12);
    }
}

TEST(UpaHpbw, GrazingRejected) {
    const double theta_l = ula_hpbw(9, 0.25);
    EXPECT_THROW(upa_hpbw(theta_l, theta_l, std::numbers::pi / 2.0, 0.0),
                 infeasible_geometry);
}

TEST(TiltedHpbw, ReferenceCurveValues) {
    EXPECT_NEAR(tilted_hpbw(square(9)) * kDeg, 24.797943249003592, 1e-6);
    EXPECT_NEAR(tilted_hpbw(square(8)) * kDeg, 28.752672938780896, 1e-6);
    EXPECT_NEAR(tilted_hpbw(square(16)) * kDeg, 13.038212063408675, 1e-6);
    EXPECT_NEAR(tilted_hpbw(square(9)) * kDeg, 24.811, 0.05);
    EXPECT_NEAR(tilted_hpbw(square(8)) * kDeg, 28.767, 0.05);
    EXPECT_NEAR(tilted_hpbw(square(16)) * kDeg, 13.045, 0.05);
}

TEST(TiltedHpbw, FixedPointResidualBelowTolerance) {
    for (int n : {8, 9, 12, 17}) {
        const antenna_config a = square(n);
        const double theta_l = ula_hpbw(n, a.spacing_ratio);
        const double x = tilted_hpbw(a);
        const double residual =
            std::fabs(x - theta_l / std::cos(0.5 * (theta_l + x)));
        EXPECT_LT(residual, 1e-9);
    }
}

TEST(TiltedHpbw, AlwaysAtLeastAxisWidth) {
    for (int n = 8; n <= 17; ++n)
        for (double rho : {0.25, 0.2, 1.0 / 6.0, 1.0 / 7.0, 0.125}) {
            antenna_config a = square(n);
            a.spacing_ratio = rho;
            if (1.391 / (std::numbers::pi * rho * n) > 1.0) continue;
            EXPECT_GE(tilted_hpbw(a), ula_hpbw(n, rho)) << "n=" << n << " rho=" << rho;
        }
}

TEST(BeamWidthsBundle, ConsistentFields) {
    const beam_widths w = make_beam_widths(square(9));
    EXPECT_DOUBLE_EQ(w.theta_ula, w.theta_vb);
    EXPECT_GT(w.theta_tb, w.theta_vb);
    EXPECT_LT(w.theta_tb, std::numbers::pi / 2.0 - 0.5 * w.theta_vb);
}
