#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "slosh/stencils.hpp"
#include "slosh/types.hpp"

namespace slosh {

/// Scalar functionals of one state, assembled in a single pass.
///   E    mechanical energy: kinetic + gravity potential + capillary potential
///   W    modified energy: the h^-1 (h v + mu h_x)^2 term + the same potentials
///   V    CLF value: delta E + W + (q k^2 / 2) xi^2 + (q / 2)(w + k xi)^2
struct FunctionalValues {
    double E = 0.0;
    double W = 0.0;
    double V = 0.0;
    double mass = 0.0;
    double sup_dev = 0.0;  // max |h - h*|
};

/// Level slope at every face; faces 0 and N are exactly zero by the wall
/// condition (reflection ghosts).
inline std::vector<double> gradient_h(const TankState& s, const Grid& grid) {
    std::vector<double> slopes;
    detail::face_slopes(s.h, grid, slopes);
    return slopes;
}

namespace detail {

struct EnergyPieces {
    double kinetic = 0.0;
    double gravity = 0.0;
    double capillary = 0.0;
    double phi_sq = 0.0;
    double mass = 0.0;
    double sup_dev = 0.0;
};

inline EnergyPieces energy_pieces(const TankState& s, const PhysicalParams& p, const Grid& grid) {
    const int n = grid.n();
    const double dx = grid.dx();
    const double inv_dx = 1.0 / dx;
    const double h_star = p.h_star();

    EnergyPieces out;
    double kinetic = 0.0, gravity = 0.0, mass = 0.0, sup_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        const double hi = s.h[i];
        const double vc = 0.5 * (s.v[i] + s.v[i + 1]);
        const double dev = hi - h_star;
        kinetic += hi * vc * vc;
        gravity += dev * dev;
        mass += hi;
        sup_dev = std::max(sup_dev, std::abs(dev));
    }

    // Interior faces only: the wall integrands vanish exactly (slope = 0,
    // v = 0), so the trapezoid end weights never matter.
    double capillary = 0.0, phi_sq = 0.0;
    for (int j = 1; j < n; ++j) {
        const double slope = (s.h[j] - s.h[j - 1]) * inv_dx;
        const double hf = 0.5 * (s.h[j - 1] + s.h[j]);
        const double phi = hf * s.v[j] + p.mu * slope;
        capillary += std::sqrt(1.0 + slope * slope) - 1.0;
        phi_sq += phi * phi / hf;
    }

    out.kinetic = 0.5 * kinetic * dx;
    out.gravity = 0.5 * p.g * gravity * dx;
    out.capillary = p.sigma * capillary * dx;
    out.phi_sq = 0.5 * phi_sq * dx;
    out.mass = mass * dx;
    out.sup_dev = sup_dev;
    return out;
}

}  // namespace detail

inline double energy_E(const TankState& s, const PhysicalParams& p, const Grid& grid) {
    const auto pieces = detail::energy_pieces(s, p, grid);
    return pieces.kinetic + pieces.gravity + pieces.capillary;
}

inline double energy_W(const TankState& s, const PhysicalParams& p, const Grid& grid) {
    const auto pieces = detail::energy_pieces(s, p, grid);
    return pieces.phi_sq + pieces.gravity + pieces.capillary;
}

inline FunctionalValues clf_V(const TankState& s, const PhysicalParams& p,
                              const ControlGains& gains, const Grid& grid) {
    const auto pieces = detail::energy_pieces(s, p, grid);
    FunctionalValues out;
    out.E = pieces.kinetic + pieces.gravity + pieces.capillary;
    out.W = pieces.phi_sq + pieces.gravity + pieces.capillary;
    const double wk = s.w + gains.k * s.xi;
    out.V = gains.delta * out.E + out.W + 0.5 * gains.q * gains.k * gains.k * s.xi * s.xi +
            0.5 * gains.q * wk * wk;
    out.mass = pieces.mass;
    out.sup_dev = pieces.sup_dev;
    return out;
}

/// Deviation norm (xi^2 + w^2 + ||h - h*||^2 + ||h_x||^2 + ||v||^2)^(1/2) with
/// dx-weighted discrete L2 norms.
inline double x_norm(const TankState& s, const PhysicalParams& p, const Grid& grid) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    const double h_star = p.h_star();

    double level_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dev = s.h[i] - h_star;
        level_sq += dev * dev;
    }
    double slope_sq = 0.0, vel_sq = 0.0;
    for (int j = 1; j < n; ++j) {
        const double slope = (s.h[j] - s.h[j - 1]) * inv_dx;
        slope_sq += slope * slope;
        vel_sq += s.v[j] * s.v[j];
    }
    return std::sqrt(s.xi * s.xi + s.w * s.w +
                     (level_sq + slope_sq + vel_sq) * grid.dx());
}

/// Total liquid momentum relative to the tank (midpoint quadrature of h v).
inline double liquid_momentum(const TankState& s, const Grid& grid) {
    const int n = grid.n();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += s.h[i] * 0.5 * (s.v[i] + s.v[i + 1]);
    return sum * grid.dx();
}

/// h(L) - h(0) read off the wall-adjacent cells (second order under the
/// zero-slope condition).
inline double level_difference(const TankState& s) { return s.h.back() - s.h.front(); }

/// Integral of h v_x^2 over the tank (the viscous dissipation density).
inline double dissipation_integral(const TankState& s, const Grid& grid) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double vx = (s.v[i + 1] - s.v[i]) * inv_dx;
        sum += s.h[i] * vx * vx;
    }
    return sum * grid.dx();
}

/// ||h_x||_2^2 with slopes at faces.
inline double slope_l2_sq(const TankState& s, const Grid& grid) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    double sum = 0.0;
    for (int j = 1; j < n; ++j) {
        const double slope = (s.h[j] - s.h[j - 1]) * inv_dx;
        sum += slope * slope;
    }
    return sum * grid.dx();
}

/// Integral of h_xx^2 / (1 + h_x^2)^(3/2), the capillary dissipation density,
/// with the same reflection-ghost stencils the solver uses.
inline double curvature_dissipation_integral(const TankState& s, const Grid& grid) {
    std::vector<double> hx, hxx;
    detail::center_slopes(s.h, grid, hx);
    detail::center_second_diff(s.h, grid, hxx);
    double sum = 0.0;
    for (std::size_t i = 0; i < hx.size(); ++i) {
        const double t = 1.0 + hx[i] * hx[i];
        sum += hxx[i] * hxx[i] / (t * std::sqrt(t));
    }
    return sum * grid.dx();
}

struct IdentityResiduals {
    double res_E = 0.0;
    double res_W = 0.0;
};

/// Residuals of the two exact energy identities on three consecutive
/// snapshots a uniform dt apart, evaluated at the middle snapshot:
///   dE/dt = -mu * int h v_x^2 + f * int h v
///   dW/dt = -mu g ||h_x||^2 - mu sigma * int h_xx^2/(1+h_x^2)^(3/2)
///           + f * int (h v + mu h_x)
/// Time derivatives use the centered 3-point stencil, so both residuals are
/// O(dt^2) + O(dx^2) on smooth solutions.
inline IdentityResiduals energy_identity_residuals(const TankState& prev, const TankState& mid,
                                                   const TankState& next, double f_mid, double dt,
                                                   const PhysicalParams& p, const Grid& grid) {
    const double dE = (energy_E(next, p, grid) - energy_E(prev, p, grid)) / (2.0 * dt);
    const double dW = (energy_W(next, p, grid) - energy_W(prev, p, grid)) / (2.0 * dt);

    const double momentum = liquid_momentum(mid, grid);
    const double rhs_E = -p.mu * dissipation_integral(mid, grid) + f_mid * momentum;
    const double rhs_W = -p.mu * p.g * slope_l2_sq(mid, grid) -
                         p.mu * p.sigma * curvature_dissipation_integral(mid, grid) +
                         f_mid * (momentum + p.mu * level_difference(mid));

    return {std::abs(dE - rhs_E), std::abs(dW - rhs_W)};
}

}  // namespace slosh
