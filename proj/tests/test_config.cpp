#include <gtest/gtest.h>

#include "slosh/config.hpp"
#include "support.hpp"

using namespace slosh;

namespace {

const char* kMinimal = R"(
[physical]
L = 1
m = 0.5
H_max = 1
)";

TEST(ParseConfig, MinimalGeometryGetsDefaults) {
    const ScenarioConfig cfg = parse_config(kMinimal);
    EXPECT_DOUBLE_EQ(cfg.physical.g, 9.81);
    EXPECT_DOUBLE_EQ(cfg.physical.mu, 0.1);
    EXPECT_DOUBLE_EQ(cfg.physical.sigma, 0.073);
    EXPECT_DOUBLE_EQ(cfg.gains.omega, 1.0);
    EXPECT_DOUBLE_EQ(cfg.gains.q, 1.0);
    EXPECT_DOUBLE_EQ(cfg.gains.delta, 1.0);
    EXPECT_TRUE(cfg.k_auto);
    EXPECT_EQ(cfg.n_cells, 256);
    EXPECT_DOUBLE_EQ(cfg.stepping.cfl_safety, 0.4);
    EXPECT_EQ(cfg.initial.mode, IcMode::cosine_levels);
}

TEST(ParseConfig, MissingGeometryIsAnError) {
    try {
        parse_config("[physical]\nL = 1\nm = 0.5\n");
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::config_error);
        EXPECT_NE(std::string(err.what()).find("H_max"), std::string::npos);
    }
}

TEST(ParseConfig, DuplicateKeyNamesTheLine) {
    const char* text = "[physical]\nL = 1\nm = 0.5\nH_max = 1\nm = 0.7\n";
    try {
        parse_config(text);
        FAIL();
    } catch (const Error& err) {
        EXPECT_NE(std::string(err.what()).find("line 5"), std::string::npos);
        EXPECT_NE(std::string(err.what()).find("duplicate"), std::string::npos);
    }
}

TEST(ParseConfig, UnknownKeyIsAHardError) {
    const char* text = "[physical]\nL = 1\nm = 0.5\nH_max = 1\nrho = 1000\n";
    EXPECT_THROW(parse_config(text), Error);
}

TEST(ParseConfig, UnknownSectionIsAHardError) {
    EXPECT_THROW(parse_config("[plotting]\ncolor = red\n"), Error);
}

TEST(ParseConfig, UnterminatedSectionHeaderIsAHardError) {
    try {
        parse_config("[physical\nL = 1\n");
        FAIL();
    } catch (const Error& err) {
        EXPECT_NE(std::string(err.what()).find("line 1"), std::string::npos);
    }
}

TEST(ParseConfig, CommentsAndBlankLinesAreIgnored) {
    const char* text =
        "# a scenario\n\n[physical]\nL = 1   # meters\nm = 0.5\nH_max = 1\n\n[grid]\nn_cells = "
        "64\n";
    const ScenarioConfig cfg = parse_config(text);
    EXPECT_EQ(cfg.n_cells, 64);
}

TEST(ParseConfig, ExplicitKDisablesAuto) {
    const std::string text = std::string(kMinimal) + "[gains]\nk = 0.02\n";
    const ScenarioConfig cfg = parse_config(text);
    EXPECT_FALSE(cfg.k_auto);
    EXPECT_DOUBLE_EQ(cfg.gains.k, 0.02);
}

TEST(ParseConfig, AmplitudeListsAndModes) {
    const std::string text = std::string(kMinimal) +
                             "[initial]\nmode = combined\namplitudes = 1, -0.5, 0.25\nxi0 = "
                             "0.1\nw0 = -0.2\ntarget_r_fraction = 0.3\n";
    const ScenarioConfig cfg = parse_config(text);
    EXPECT_EQ(cfg.initial.mode, IcMode::combined);
    ASSERT_EQ(cfg.initial.amplitudes.size(), 3u);
    EXPECT_DOUBLE_EQ(cfg.initial.amplitudes[1], -0.5);
    EXPECT_DOUBLE_EQ(cfg.initial.xi0, 0.1);
    EXPECT_DOUBLE_EQ(cfg.initial.target_r_fraction, 0.3);
}

TEST(ParseConfig, MalformedNumberNamesTheLine) {
    const char* text = "[physical]\nL = one\n";
    try {
        parse_config(text);
        FAIL();
    } catch (const Error& err) {
        EXPECT_NE(std::string(err.what()).find("line 2"), std::string::npos);
    }
}

TEST(ResolveScenario, AutoKMatchesTheFixedPoint) {
    ScenarioConfig cfg = parse_config(kMinimal);
    const ResolvedScenario sc = resolve_scenario(cfg);
    const double expected = 0.5 * sc.gains.q * theta(sc.ic.V, sc.p, sc.gains);
    EXPECT_NEAR(sc.gains.k, expected, 1e-12 * expected);
    EXPECT_TRUE(validate_gains(sc.p, sc.gains, sc.ic.V).pass);
}

TEST(ResolveScenario, AutoKConvergesWithTankOffset) {
    // xi0 != 0 couples V and k; the fixed point must still close
    ScenarioConfig cfg = parse_config(kMinimal);
    cfg.initial.xi0 = 0.05;
    cfg.initial.w0 = -0.02;
    const ResolvedScenario sc = resolve_scenario(cfg);
    const double expected = 0.5 * sc.gains.q * theta(sc.ic.V, sc.p, sc.gains);
    EXPECT_NEAR(sc.gains.k, expected, 1e-9 * expected);
}

TEST(ResolveScenario, RejectsInvalidPhysicalParams) {
    ScenarioConfig cfg = parse_config(kMinimal);
    cfg.physical.m = 1.5;  // h* > H_max
    EXPECT_THROW(resolve_scenario(cfg), Error);
}

}  // namespace
