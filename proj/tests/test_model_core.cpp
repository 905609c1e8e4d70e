#include <gtest/gtest.h>

#include "slosh/types.hpp"
#include "support.hpp"

using namespace slosh;
using slosh::testing::canonical_params;

namespace {

TEST(PhysicalParams, AcceptsCanonicalTank) {
    const PhysicalParams p = validate_params(canonical_params());
    EXPECT_DOUBLE_EQ(p.h_star(), 0.5);
}

TEST(PhysicalParams, RejectsOverfullTank) {
    PhysicalParams p = canonical_params();
    p.m = 1.2;  // h* = 1.2 > H_max
    try {
        validate_params(p);
        FAIL() << "expected rejection";
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::invalid_params);
        EXPECT_NE(std::string(err.what()).find("H_max"), std::string::npos);
    }
}

TEST(PhysicalParams, RejectsZeroSurfaceTension) {
    PhysicalParams p = canonical_params();
    p.sigma = 0.0;
    try {
        validate_params(p);
        FAIL() << "expected rejection";
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::invalid_params);
        EXPECT_NE(std::string(err.what()).find("sigma"), std::string::npos);
    }
}

TEST(Grid, BasicGeometry) {
    const Grid grid(16, 2.0);
    EXPECT_EQ(grid.n(), 16);
    EXPECT_DOUBLE_EQ(grid.dx(), 0.125);
    EXPECT_DOUBLE_EQ(grid.center(0), 0.0625);
    EXPECT_DOUBLE_EQ(grid.face(16), 2.0);
}

TEST(Grid, RejectsTooFewCells) {
    EXPECT_THROW(Grid(4, 1.0), Error);
}

TEST(Equilibrium, IsExactAndValid) {
    const PhysicalParams p = canonical_params();
    const Grid grid(16, p.L);
    const TankState s = equilibrium_state(p, grid);
    EXPECT_EQ(s.h.size(), 16u);
    EXPECT_EQ(s.v.size(), 17u);
    for (double hi : s.h) EXPECT_DOUBLE_EQ(hi, 0.5);
    EXPECT_DOUBLE_EQ(liquid_mass(s, grid), 0.5);
    EXPECT_NO_THROW(validate_state(s, p, grid));
}

TEST(ValidateState, FlagsEachInvariantSeparately) {
    const PhysicalParams p = canonical_params();
    const Grid grid(16, p.L);

    TankState bad_bc = equilibrium_state(p, grid);
    bad_bc.v[0] = 0.1;
    try {
        validate_state(bad_bc, p, grid);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::boundary_velocity);
    }

    TankState bad_level = equilibrium_state(p, grid);
    bad_level.h[3] = -0.1;
    bad_level.h[4] = 1.1;  // keep the mass unchanged
    try {
        validate_state(bad_level, p, grid);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::nonpositive_level);
    }

    TankState bad_mass = equilibrium_state(p, grid);
    for (double& hi : bad_mass.h) hi *= 1.1;
    try {
        validate_state(bad_mass, p, grid);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::mass_mismatch);
    }
}

TEST(LabFrame, ShiftsAreAdditive) {
    const PhysicalParams p = canonical_params();
    const Grid grid(16, p.L);
    TankState s = equilibrium_state(p, grid);
    s.xi = 0.3;
    s.w = 1.0;

    const LabFrameView view = reconstruct_lab_frame(s, 2.0);
    EXPECT_DOUBLE_EQ(view.a, 2.3);
    EXPECT_DOUBLE_EQ(view.tank_velocity, 1.0);
    for (double uj : view.u) EXPECT_DOUBLE_EQ(uj, 1.0);
    for (double Hi : view.H) EXPECT_DOUBLE_EQ(Hi, 0.5);
}

TEST(LabFrame, RoundTripIsExact) {
    const PhysicalParams p = canonical_params();
    const Grid grid(16, p.L);
    TankState s = equilibrium_state(p, grid);
    s.xi = 0.25;
    s.w = 1.5;
    // dyadic velocities survive the +w / -w round trip bit-for-bit
    for (std::size_t j = 1; j + 1 < s.v.size(); ++j)
        s.v[j] = static_cast<double>(static_cast<int>(j) - 8) / 32.0;

    const TankState back = to_moving_frame(reconstruct_lab_frame(s, 2.0), 2.0);
    EXPECT_EQ(back.xi, s.xi);
    EXPECT_EQ(back.w, s.w);
    EXPECT_EQ(back.h, s.h);
    EXPECT_EQ(back.v, s.v);
}

TEST(LabFrame, EquilibriumAtTarget) {
    const PhysicalParams p = canonical_params();
    const Grid grid(16, p.L);
    const LabFrameView view = reconstruct_lab_frame(equilibrium_state(p, grid), 2.0);
    EXPECT_DOUBLE_EQ(view.a, 2.0);
    for (double uj : view.u) EXPECT_DOUBLE_EQ(uj, 0.0);
}

}  // namespace
