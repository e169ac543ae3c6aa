#include <gtest/gtest.h>

#include <cmath>

#include "vfroe/oracle.hpp"

using namespace vfroe;
using oracle::StokerProfile;

namespace {

constexpr double g = 9.81;

}  // namespace

TEST(Stoker, ConstantStateEverywhere) {
    const StokerProfile p(2.0, 0.5, 2.0, 0.5, g);
    for (double xi : {-10.0, -1.0, 0.0, 0.5, 3.0, 10.0}) {
        EXPECT_NEAR(p(xi).h, 2.0, 1e-12);
        EXPECT_NEAR(p(xi).u, 0.5, 1e-12);
    }
}

TEST(Stoker, TestOneStarDepth) {
    const StokerProfile p(3.0, 0.0, 4.0, 0.0, g);
    EXPECT_GT(p.h_star(), 3.0);
    EXPECT_LT(p.h_star(), 4.0);
    EXPECT_LE(std::abs(p.residual()), 1e-12);
    EXPECT_LT(p.u_star(), 0.0);
    EXPECT_TRUE(p.left_is_shock());
    EXPECT_FALSE(p.right_is_shock());
    EXPECT_LE(p.iterations(), 200);
}

TEST(Stoker, StarVelocityAgreesFromBothSides) {
    const StokerProfile p(3.0, 0.3, 1.0, -0.2, g);
    ASSERT_FALSE(p.left_is_shock());
    ASSERT_TRUE(p.right_is_shock());
    // Left rarefaction: u* + 2c* = u_L + 2c_L.
    EXPECT_NEAR(p.u_star(), 0.3 + 2.0 * std::sqrt(g * 3.0) - 2.0 * p.c_star(), 1e-10);
    // Right shock: mass balance across the jump.
    const double s = p.right_shock_speed();
    EXPECT_NEAR(s * (1.0 - p.h_star()), 1.0 * -0.2 - p.h_star() * p.u_star(), 1e-10);
}

TEST(Stoker, RankineHugoniotAcrossShocks) {
    const double cases[][4] = {{3.0, 0.0, 4.0, 0.0}, {1.0, 2.0, 1.0, -2.0}, {5.0, 0.0, 0.5, 0.0}, {0.7, 1.0, 2.0, 0.3}};
    for (const auto& c : cases) {
        const StokerProfile p(c[0], c[1], c[2], c[3], g);
        const double hs = p.h_star();
        const double us = p.u_star();
        if (p.left_is_shock()) {
            const double s = p.left_shock_speed();
            EXPECT_NEAR(s * (hs - c[0]), hs * us - c[0] * c[1], 1e-10);
            const double momentum_l = c[0] * c[1] * c[1] + 0.5 * g * c[0] * c[0];
            const double momentum_s = hs * us * us + 0.5 * g * hs * hs;
            EXPECT_NEAR(s * (hs * us - c[0] * c[1]), momentum_s - momentum_l, 1e-10);
        }
        if (p.right_is_shock()) {
            const double s = p.right_shock_speed();
            EXPECT_NEAR(s * (c[2] - hs), c[2] * c[3] - hs * us, 1e-10);
            const double momentum_r = c[2] * c[3] * c[3] + 0.5 * g * c[2] * c[2];
            const double momentum_s = hs * us * us + 0.5 * g * hs * hs;
            EXPECT_NEAR(s * (c[2] * c[3] - hs * us), momentum_r - momentum_s, 1e-10);
        }
    }
}

TEST(Stoker, RiemannInvariantAlongLeftRarefaction) {
    const StokerProfile p(4.0, 0.0, 1.0, 0.0, g);
    ASSERT_FALSE(p.left_is_shock());
    const double c_l = std::sqrt(g * 4.0);
    const double head = -c_l;
    const double tail = p.u_star() - p.c_star();
    for (int k = 0; k <= 20; ++k) {
        const double xi = head + (tail - head) * k / 20.0;
        const auto s = p(xi);
        EXPECT_NEAR(s.u + 2.0 * std::sqrt(g * s.h), 2.0 * c_l, 1e-10);
    }
}

TEST(Stoker, MirrorSymmetry) {
    const StokerProfile p(3.0, 0.4, 4.0, -0.1, g);
    const StokerProfile m(4.0, 0.1, 3.0, -0.4, g);
    for (double xi = -8.0; xi <= 8.0; xi += 0.173) {
        EXPECT_NEAR(m(-xi).h, p(xi).h, 1e-10);
        EXPECT_NEAR(m(-xi).u, -p(xi).u, 1e-10);
    }
}

TEST(Stoker, FarFieldIsInitialData) {
    EXPECT_EQ(oracle::stoker_exact(3.0, 0.0, 4.0, 0.0, g, -100.0).h, 3.0);
    EXPECT_EQ(oracle::stoker_exact(3.0, 0.0, 4.0, 0.0, g, 100.0).h, 4.0);
}

TEST(Stoker, VacuumFormationIsRejected) {
    EXPECT_THROW(StokerProfile(1.0, -10.0, 1.0, 10.0, g), oracle::VacuumFormation);
    EXPECT_THROW(StokerProfile(0.0, 0.0, 1.0, 0.0, g), oracle::VacuumFormation);
}

TEST(Ritter, Examples) {
    const double c_l = std::sqrt(g * 1.5);
    EXPECT_NEAR(c_l, 3.8360, 1e-4);
    const auto foot = oracle::ritter_exact(1.5, g, -c_l);
    EXPECT_DOUBLE_EQ(foot.h, 1.5);
    EXPECT_EQ(foot.u, 0.0);
    const auto centre = oracle::ritter_exact(1.5, g, 0.0);
    EXPECT_NEAR(centre.h, 4.0 * 1.5 / 9.0, 1e-14);
    EXPECT_NEAR(centre.h, 0.6667, 1e-4);
    EXPECT_NEAR(centre.u, 2.0 / 3.0 * c_l, 1e-14);
    EXPECT_NEAR(centre.u, 2.5573, 1e-4);
    EXPECT_EQ(oracle::ritter_exact(1.5, g, 2.0 * c_l).h, 0.0);
    EXPECT_NEAR(2.0 * c_l, 7.672, 1e-3);
}

TEST(Ritter, ContinuousAndVanishesAtTheFront) {
    const double c_l = std::sqrt(g * 1.5);
    double previous = oracle::ritter_exact(1.5, g, -2.0 * c_l).h;
    for (double xi = -2.0 * c_l; xi <= 3.0 * c_l; xi += 1e-4) {
        const double h = oracle::ritter_exact(1.5, g, xi).h;
        EXPECT_LT(std::abs(h - previous), 1e-3);
        EXPECT_GE(h, 0.0);
        previous = h;
    }
    EXPECT_EQ(oracle::ritter_exact(1.5, g, 2.0 * c_l + 1e-12).h, 0.0);
}

TEST(Ritter, StokerConvergesToRitterOnNearlyDryBed) {
    const double c_l = std::sqrt(g * 1.5);
    const StokerProfile p(1.5, 0.0, 1e-8, 0.0, g);
    for (double xi = -c_l; xi <= 1.9 * c_l; xi += 0.01) EXPECT_NEAR(p(xi).h, oracle::ritter_exact(1.5, g, xi).h, 1e-3);
}
