// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "skyplan/antenna.hpp"
#include "skyplan/footprint.hpp"

using namespace skyplan;

namespace {
beam_widths widths(int n) {
    antenna_config a;
    a.n_x = a.n_y = n;
    return make_beam_widths(a);
}
}  // namespace

TEST(VbFootprint, RadiusAnchors) {
    EXPECT_NEAR(vb_footprint(10.0, widths(17)).r_vb, 1.0475097053899937, 1e-12);
    EXPECT_NEAR(vb_footprint(10.0, widths(9)).r_vb, 2.0071086198806147, 1e-12);
    EXPECT_NEAR(vb_footprint(30.0, widths(9)).r_vb, 6.0213258596418440, 1e-11);
    // Coarse anchors quoted for these geometries.
    EXPECT_NEAR(vb_footprint(10.0, widths(17)).r_vb, 1.047, 2.5e-3);
    EXPECT_NEAR(vb_footprint(10.0, widths(9)).r_vb, 2.008, 2.5e-3);
    EXPECT_NEAR(vb_footprint(10.0, widths(9)).area, 12.655858918792855, 1e-10);
}

TEST(VbFootprint, SimilarTriangleScaling) {
    const beam_widths w = widths(11);
    const beam_footprint f1 = vb_footprint(7.0, w);
    const beam_footprint f2 = vb_footprint(14.0, w);
    EXPECT_DOUBLE_EQ(f2.r_vb, 2.0 * f1.r_vb);
    EXPECT_DOUBLE_EQ(std::sqrt(f2.area / f1.area), 2.0);
}

TEST(TbFootprint, SemiAxesAnchors) {
    const beam_footprint tb = tb_footprint(10.0, widths(9));
    EXPECT_NEAR(tb.semi_major, 2.6487991244703640, 1e-12);
    EXPECT_NEAR(tb.semi_minor, 2.4131440441193401, 1e-12);
    EXPECT_NEAR(tb.semi_major, 2.651, 4e-3);
    EXPECT_GE(tb.semi_major, tb.semi_minor);
    EXPECT_GT(tb.semi_minor, 0.0);
    // Near edge + far edge bracket the center.
    const double near = 10.0 * std::tan(0.5 * widths(9).theta_vb);
    EXPECT_NEAR(tb.center_offset, 0.5 * (near + tb.r_tb), 1e-12);
    EXPECT_NEAR(tb.area, std::numbers::pi * tb.semi_major * tb.semi_minor, 1e-12);
}

TEST(TbFootprint, LinearInAltitude) {
    const beam_widths w = widths(13);
    const beam_footprint t1 = tb_footprint(9.0, w);
    const beam_footprint t2 = tb_footprint(18.0, w);
    EXPECT_NEAR(t2.semi_major, 2.0 * t1.semi_major, 1e-12);
    EXPECT_NEAR(t2.semi_minor, 2.0 * t1.semi_minor, 1e-12);
    EXPECT_NEAR(t2.area, 4.0 * t1.area, 4.0 * t1.area * 1e-14);
}

TEST(TbFootprint, GrazingGeometryRejected) {
    // Inflate the widths until the far edge would pass the horizon.
    beam_widths w = widths(9);
    w.theta_vb = 1.2;
    w.theta_tb = 1.5;
    EXPECT_THROW(tb_footprint(10.0, w), infeasible_geometry);
}

TEST(FootprintOracle, AgreesWithClosedFormSemiAxes) {
    for (int n : {8, 9, 12, 16}) {
        const beam_widths w = widths(n);
        const beam_footprint tb = tb_footprint(10.0, w);
        const oracle_extents ext = footprint_oracle(10.0, w, 100000);
        EXPECT_NEAR(tb.semi_major, ext.semi_major, 1e-6 * ext.semi_major)
            << "n=" << n;
        EXPECT_NEAR(tb.semi_minor, ext.semi_minor, 1e-6 * ext.semi_minor)
            << "n=" << n;
    }
}

TEST(FootprintOracle, FarEdgeMatchesGroundRange) {
    const beam_widths w = widths(9);
    const beam_footprint tb = tb_footprint(10.0, w);
    const oracle_extents ext = footprint_oracle(10.0, w, 4096);
    EXPECT_NEAR(ext.far_edge, tb.r_tb, 1e-9);
    EXPECT_NEAR(ext.near_edge, 10.0 * std::tan(0.5 * w.theta_vb), 1e-9);
}

TEST(FootprintOracle, VerticalConeDegeneratesToDisk) {
    const beam_widths w = widths(9);
    const double r_vb = vb_footprint(10.0, w).r_vb;
    const oracle_extents ext =
        cone_ground_semiaxes_sampled(10.0, 0.0, 0.5 * w.theta_vb, 100000);
    EXPECT_NEAR(ext.semi_major, r_vb, 1e-9);
    EXPECT_NEAR(ext.semi_minor, r_vb, 1e-9);
}

TEST(FootprintOracle, SampleCountGuard) {
    EXPECT_THROW(footprint_oracle(10.0, widths(9), 10), infeasible_geometry);
}

// The semi-minor expression as printed in the source theorem, versus the
// geometry the oracle measures. The deviation is reported here so it is
// never silently absorbed; production uses the cone-plane form, which the
// oracle confirms to 1e-6 above.
TEST(TbSemiMinorPrintedForm, DeviationReported) {
    for (int n : {8, 9, 16}) {
        const beam_widths w = widths(n);
        const oracle_extents ext = footprint_oracle(10.0, w, 20000);
        const double printed = tb_semi_minor_printed(10.0, w);
        const double rel = std::isfinite(printed)
                               ? std::fabs(printed - ext.semi_minor) / ext.semi_minor
                               : std::nan("");
        RecordProperty("printed_form_rel_deviation", rel);
        std::printf(
            "[ INFO     ] printed-form semi-minor n=%d: printed=%.6g oracle=%.6g "
            "rel_dev=%.3g\n",
            n, printed, ext.semi_minor, rel);
        if (std::isfinite(rel) && rel <= 1e-3) {
            SUCCEED();
        } else {
            std::printf(
                "[ INFO     ] printed form disagrees beyond 1e-3; cone-plane form "
                "is used downstream\n");
        }
    }
}

TEST(CoverageArea, SchemeComposition) {
    const beam_widths w = widths(9);
    const beam_footprint vb = vb_footprint(10.0, w);
    const beam_footprint tb = tb_footprint(10.0, w);
    EXPECT_DOUBLE_EQ(coverage_area(scheme_kind::abf, 1, vb, nullptr), vb.area);
    EXPECT_DOUBLE_EQ(coverage_area(scheme_kind::hbf, 1, vb, &tb), vb.area);
    EXPECT_DOUBLE_EQ(coverage_area(scheme_kind::hbf, 3, vb, &tb),
                     vb.area + 2.0 * tb.area);
    EXPECT_THROW(coverage_area(scheme_kind::abf, 2, vb, nullptr),
                 infeasible_geometry);
    EXPECT_THROW(coverage_area(scheme_kind::hbf, 3, vb, nullptr),
                 infeasible_geometry);
}

TEST(CoverageArea, HybridNeverSmaller) {
    for (int n : {9, 13, 17}) {
        const beam_widths w = widths(n);
        const beam_footprint vb = vb_footprint(10.0, w);
        const beam_footprint tb = tb_footprint(10.0, w);
        double prev = 0.0;
        for (int nd = 1; nd <= 6; ++nd) {
            const double s = coverage_area(scheme_kind::hbf, nd, vb, &tb);
            EXPECT_GE(s, vb.area);
            EXPECT_GE(s, prev);
            EXPECT_LE(swarm_size(1000.0, s), swarm_size(1000.0, vb.area));
            prev = s;
        }
    }
}

TEST(SwarmSize, CeilingBehaviour) {
    EXPECT_EQ(swarm_size(1000.0, 12.67), 79);
    EXPECT_EQ(swarm_size(10.0, 50.0), 1);
    EXPECT_EQ(swarm_size(125.0, 12.5), 10);
    EXPECT_EQ(swarm_size(12.5, 12.5), 1);
    EXPECT_THROW(swarm_size(0.0, 1.0), infeasible_geometry);
}
