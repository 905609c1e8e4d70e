#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slosh/errors.hpp"
#include "slosh/types.hpp"

namespace slosh {

// Closed-form certificate functions of the tank-liquid CLF analysis. All of
// them are total in the parameters but partial in the level-set radius: they
// refuse r >= R, where the level bound Q1 can cross zero and every downstream
// guarantee (positivity, no spill, decay rate) becomes void.

/// Strictly increasing level potential; G(h*) = 0, affine for h <= 0.
inline double G(double h, double h_star) {
    const double base = (4.0 / 3.0) * h_star * std::sqrt(h_star);
    if (h <= 0.0) return -base + h;
    const double root = std::sqrt(h);
    const double value = (2.0 / 3.0) * h * root - 2.0 * h_star * root + base;
    if (h > h_star) return value;
    if (h < h_star) return -value;
    return 0.0;
}

/// Inverse of G: geometric bracket growth + bisection, then a few Newton
/// polish steps away from the nonsmooth points h = 0 and h = h*.
inline double G_inverse(double y, double h_star) {
    if (y == 0.0) return h_star;
    const double floor = -(4.0 / 3.0) * h_star * std::sqrt(h_star);
    if (y <= floor) return y - floor;  // affine branch, exact

    double lo = 0.0, hi = h_star;
    if (y > 0.0) {
        lo = h_star;
        hi = 2.0 * h_star;
        while (G(hi, h_star) < y) hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (G(mid, h_star) < y ? lo : hi) = mid;
    }
    double h = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it) {
        const double slope = std::abs(h - h_star) / std::sqrt(std::abs(h));
        if (!(h > 1e-12 && slope > 1e-12)) break;
        const double next = h - (G(h, h_star) - y) / slope;
        if (next <= lo || next >= hi) break;
        h = next;
    }
    return h;
}

struct LevelBounds {
    double Q1 = 0.0;
    double Q2 = 0.0;
};

/// Pointwise level bounds Q1(s) <= h(x) <= Q2(s) valid for every state with
/// V = s. Q1 is decreasing and Q2 increasing in s; both equal h* at s = 0.
inline LevelBounds level_bounds(double s_value, const PhysicalParams& p, double delta) {
    SLOSH_REQUIRE(s_value >= 0.0, Errc::certificate_domain, "level_bounds needs s >= 0");
    const double h_star = p.h_star();
    const double c = 1.0 / (p.mu * std::sqrt(delta * p.g));

    const double mass_spread = std::sqrt(2.0 * p.m * (1.0 + delta) * s_value / (delta * p.mu * p.mu));
    const double cap_arg = s_value / (p.sigma * (delta + 1.0)) + p.L;
    const double cap_spread = std::sqrt(cap_arg * cap_arg - p.L * p.L);

    LevelBounds out;
    out.Q1 = std::max({G_inverse(-c * s_value, h_star), h_star - mass_spread, h_star - cap_spread});
    out.Q2 = std::min({G_inverse(c * s_value, h_star), h_star + mass_spread, h_star + cap_spread});
    return out;
}

/// Largest CLF value below which Q1 stays positive (max of the three
/// alternative thresholds; any single one suffices).
inline double positivity_threshold(const PhysicalParams& p, double delta) {
    const double h_star = p.h_star();
    const double t1 = (4.0 / 3.0) * p.mu * h_star * std::sqrt(delta * p.g * h_star);
    const double t2 = p.mu * p.mu * h_star * delta / (2.0 * p.L * (1.0 + delta));
    const double t3 = p.sigma * (delta + 1.0) * (std::sqrt(h_star * h_star + p.L * p.L) - p.L);
    return std::max({t1, t2, t3});
}

/// Spill radius with branch diagnostics. zeta_branch tells whether the
/// no-spill family (1) or the positivity family (2) limits R; the index
/// fields record which alternative attained the inner max.
struct SpillRadius {
    double value = 0.0;
    int zeta_branch = 0;   // 1 = spill-limited, 2 = positivity-limited
    int gamma_branch = 0;  // argmax of (Gamma1, Gamma2, Gamma3)
    int delta_branch = 0;  // argmax of (2, Delta1, Delta2); 0 means the constant 2
};

inline SpillRadius spill_radius(const PhysicalParams& p, double delta) {
    const double h_star = p.h_star();
    SLOSH_REQUIRE(h_star < p.H_max, Errc::invalid_params,
                  "h* >= H_max: no spill-free radius exists");
    const double head = p.H_max - h_star;
    const double wave = std::sqrt(delta * p.g * h_star);

    const double gamma1 =
        std::sqrt(p.H_max / h_star) - 2.0 * std::sqrt(h_star) / (std::sqrt(p.H_max) + std::sqrt(h_star));
    const double gamma2 = 3.0 * p.mu * std::sqrt(delta) * head / (4.0 * p.m * (1.0 + delta) * std::sqrt(p.g * h_star));
    const double gamma3 = 3.0 * p.sigma * (delta + 1.0) *
                          (std::sqrt(p.L * p.L + head * head) - p.L) / (2.0 * p.mu * wave * head);

    const double delta1 = 3.0 * p.mu * std::sqrt(delta) / (4.0 * p.L * std::sqrt(p.g * h_star) * (1.0 + delta));
    const double delta2 = 3.0 * p.sigma * (delta + 1.0) * std::sqrt(h_star) /
                          (2.0 * p.mu * std::sqrt(delta * p.g) *
                           (std::sqrt(h_star * h_star + p.L * p.L) + p.L));

    SpillRadius out;
    const double zeta1 = std::max({gamma1, gamma2, gamma3});
    const double inner2 = std::max({2.0, delta1, delta2});
    const double zeta2 = h_star / head * inner2;

    out.gamma_branch = (zeta1 == gamma1) ? 1 : (zeta1 == gamma2 ? 2 : 3);
    out.delta_branch = (inner2 == 2.0) ? 0 : (inner2 == delta1 ? 1 : 2);
    out.zeta_branch = (zeta1 <= zeta2) ? 1 : 2;
    out.value = (2.0 * p.mu * wave / 3.0) * head * std::min(zeta1, zeta2);
    return out;
}

namespace detail {
inline void require_below_R(double r, const PhysicalParams& p, double delta, const char* who) {
    SLOSH_REQUIRE(r >= 0.0 && r < spill_radius(p, delta).value, Errc::certificate_domain,
                  std::string(who) + ": radius outside [0, R)");
}
}  // namespace detail

/// Gain-condition threshold theta(r); the feedback certificate requires
/// k < q * theta(r). Always below omega.
inline double theta(double r, const PhysicalParams& p, const ControlGains& gains) {
    detail::require_below_R(r, p, gains.delta, "theta");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double q1 = level_bounds(r, p, gains.delta).Q1;
    const double a = p.g * p.mu * gains.delta * pi2 * q1;
    const double b = 2.0 * gains.omega * p.L *
                     (p.m * p.g * p.L * p.H_max * (gains.delta + 1.0) * (gains.delta + 1.0) +
                      2.0 * p.mu * p.mu * gains.delta * pi2 * q1);
    return gains.omega * a / (a + b);
}

struct GainCheck {
    bool pass = false;
    double margin = 0.0;  // q * theta(r) - k
    double theta_r = 0.0;
};

inline GainCheck validate_gains(const PhysicalParams& p, const ControlGains& gains, double r) {
    GainCheck out;
    out.theta_r = theta(r, p, gains);
    out.margin = gains.q * out.theta_r - gains.k;
    out.pass = gains.k < gains.q * out.theta_r;
    return out;
}

/// Nondecreasing bound Lambda(s) of the norm-versus-dissipation inequality
/// V / Lambda(V) <= ||h_x||^2 + int h_xx^2/(1+h_x^2)^(3/2) + int h v_x^2
///                  + xi^2 + (w + k xi)^2.
inline double Lambda(double s, const PhysicalParams& p, const ControlGains& gains) {
    detail::require_below_R(s, p, gains.delta, "Lambda");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const auto q = level_bounds(s, p, gains.delta);
    const double kappa1 = (gains.delta + 1.0) * (p.g * p.L * p.L + 2.0 * p.sigma);
    const double kappa2 = p.L * p.L * (gains.delta + 2.0) / pi2;
    const double kappa3 = gains.q * std::max(1.0, gains.k * gains.k);
    return 0.5 * std::max({kappa1 + 2.0 * p.mu * p.mu / q.Q1, kappa2 * q.Q2 / q.Q1, kappa3});
}

/// Dissipation-rate floor beta(r) > 0 whenever the gain condition holds.
inline double beta(double r, const PhysicalParams& p, const ControlGains& gains) {
    detail::require_below_R(r, p, gains.delta, "beta");
    const auto check = validate_gains(p, gains, r);
    SLOSH_REQUIRE(check.pass, Errc::gain_condition,
                  "beta: gain condition k < q*theta(r) fails, margin " + std::to_string(check.margin));
    const double q2 = level_bounds(r, p, gains.delta).Q2;
    return std::min({3.0 * p.mu * p.g / 4.0,
                     p.mu * gains.delta * (2.0 * p.H_max - q2) / (2.0 * p.H_max),
                     gains.q * gains.k * gains.k * gains.k,
                     gains.q * (gains.q * check.theta_r - gains.k),
                     p.mu * p.sigma});
}

struct DecayRates {
    double lambda_V = 0.0;     // guaranteed rate for V: beta(r)/Lambda(r)
    double lambda_norm = 0.0;  // guaranteed rate for the X-norm: beta(r)/(2 Lambda(r))
};

inline DecayRates decay_rates(double r, const PhysicalParams& p, const ControlGains& gains) {
    const double b = beta(r, p, gains);
    const double lam = Lambda(r, p, gains);
    return {b / lam, b / (2.0 * lam)};
}

/// Nondecreasing bound G2(s) of the norm lower bound V / G2(V) <= ||.||_X^2.
inline double g2(double s, const PhysicalParams& p, const ControlGains& gains) {
    detail::require_below_R(s, p, gains.delta, "g2");
    const double q1 = level_bounds(s, p, gains.delta).Q1;
    return std::max({(gains.delta + 2.0) * p.H_max / 2.0, (gains.delta + 1.0) * p.g / 2.0,
                     p.mu * p.mu / q1 + p.sigma * (gains.delta + 1.0),
                     1.5 * gains.q * gains.k * gains.k, gains.q});
}

/// Sup-norm bound on the level deviation in terms of the CLF value.
inline double sup_deviation_bound(double V, const PhysicalParams& p, double delta) {
    const double arg = p.L + V / (p.sigma * (delta + 1.0));
    return std::sqrt(arg * arg - p.L * p.L);
}

/// Bundle of the scalar certificate constants for one (params, gains, r).
struct CertificateConstants {
    double c = 0.0;
    double R = 0.0;
    double r = 0.0;
    double theta_r = 0.0;
    double beta_r = 0.0;
    double Lambda_r = 0.0;
    double lambda_V = 0.0;
    double lambda_norm = 0.0;
};

inline CertificateConstants certificate_constants(const PhysicalParams& p,
                                                  const ControlGains& gains, double r) {
    CertificateConstants out;
    out.c = 1.0 / (p.mu * std::sqrt(gains.delta * p.g));
    out.R = spill_radius(p, gains.delta).value;
    out.r = r;
    out.theta_r = theta(r, p, gains);
    out.beta_r = beta(r, p, gains);
    out.Lambda_r = Lambda(r, p, gains);
    out.lambda_V = out.beta_r / out.Lambda_r;
    out.lambda_norm = 0.5 * out.lambda_V;
    return out;
}

}  // namespace slosh
