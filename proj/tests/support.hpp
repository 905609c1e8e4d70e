#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "slosh/certificates.hpp"
#include "slosh/harness.hpp"
#include "slosh/types.hpp"

namespace slosh::testing {

/// Canonical tank used throughout the suites and by the reference constants.
inline PhysicalParams canonical_params() {
    PhysicalParams p;
    p.g = 9.81;
    p.mu = 0.1;
    p.sigma = 0.073;
    p.L = 1.0;
    p.m = 0.5;
    p.H_max = 1.0;
    return p;
}

/// Canonical gains with k resolved to q*theta(R/2)/2 (matches the reference
/// constants header).
inline ControlGains canonical_gains() {
    ControlGains gains;
    gains.omega = 1.0;
    gains.q = 1.0;
    gains.delta = 1.0;
    const PhysicalParams p = canonical_params();
    const double r_half = 0.5 * spill_radius(p, gains.delta).value;
    gains.k = 0.5 * gains.q * theta(r_half, p, gains);
    return gains;
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(property_seed() + salt);
}

inline std::string source_dir() { return SLOSH_SOURCE_DIR; }
inline std::string cli_binary() { return SLOSH_CLF_BIN; }

}  // namespace slosh::testing
