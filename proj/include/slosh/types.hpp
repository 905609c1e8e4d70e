#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "slosh/errors.hpp"

namespace slosh {

/// Physical constants of the tank-liquid system. The rest level h* = m/L is
/// always derived, never stored, so it cannot drift out of sync with m and L.
struct PhysicalParams {
    double g = 9.81;       // gravity [m/s^2]
    double mu = 0.1;       // kinematic viscosity [m^2/s]
    double sigma = 0.073;  // surface tension / density [m^3/s^2]
    double L = 0.0;        // tank length [m]
    double m = 0.0;        // liquid mass per unit width [m^2]
    double H_max = 0.0;    // wall height [m]

    double h_star() const { return m / L; }
};

/// Controller parameters. All four must be positive; the only coupling
/// restriction (k < q*theta(r)) lives in the certificate module.
struct ControlGains {
    double omega = 1.0;  // outer gain [1/s]
    double k = 0.0;      // position-error gain [1/s]
    double q = 1.0;      // velocity gain
    double delta = 1.0;  // CLF mixing weight
};

inline PhysicalParams validate_params(const PhysicalParams& p) {
    SLOSH_REQUIRE(std::isfinite(p.g) && p.g > 0.0, Errc::invalid_params, "g must be positive");
    SLOSH_REQUIRE(std::isfinite(p.mu) && p.mu > 0.0, Errc::invalid_params, "mu must be positive");
    SLOSH_REQUIRE(std::isfinite(p.sigma) && p.sigma > 0.0, Errc::invalid_params,
                  "sigma must be positive");
    SLOSH_REQUIRE(std::isfinite(p.L) && p.L > 0.0, Errc::invalid_params, "L must be positive");
    SLOSH_REQUIRE(std::isfinite(p.m) && p.m > 0.0, Errc::invalid_params, "m must be positive");
    SLOSH_REQUIRE(std::isfinite(p.H_max) && p.H_max > 0.0, Errc::invalid_params,
                  "H_max must be positive");
    SLOSH_REQUIRE(p.h_star() < p.H_max, Errc::invalid_params,
                  "h* >= H_max: rest level m/L must stay below the wall height");
    return p;
}

inline ControlGains validate_gain_positivity(const ControlGains& gains) {
    SLOSH_REQUIRE(std::isfinite(gains.omega) && gains.omega > 0.0, Errc::invalid_params,
                  "omega must be positive");
    SLOSH_REQUIRE(std::isfinite(gains.k) && gains.k > 0.0, Errc::invalid_params,
                  "k must be positive");
    SLOSH_REQUIRE(std::isfinite(gains.q) && gains.q > 0.0, Errc::invalid_params,
                  "q must be positive");
    SLOSH_REQUIRE(std::isfinite(gains.delta) && gains.delta > 0.0, Errc::invalid_params,
                  "delta must be positive");
    return gains;
}

/// Uniform staggered grid on [0, L]: levels live at the n cell centers
/// (i + 1/2) dx, velocities at the n + 1 faces j dx.
class Grid {
public:
    Grid(int n_cells, double length) : n_(n_cells), L_(length), dx_(length / n_cells) {
        SLOSH_REQUIRE(n_cells >= 8, Errc::invalid_grid,
                      "need at least 8 cells for the wall-reflection stencils");
        SLOSH_REQUIRE(std::isfinite(length) && length > 0.0, Errc::invalid_grid,
                      "grid length must be positive");
        SLOSH_REQUIRE(std::abs(dx_ * n_ - L_) <= 4.0 * 1e-16 * L_, Errc::invalid_grid,
                      "dx * N must reproduce L to machine precision");
    }

    int n() const { return n_; }
    double length() const { return L_; }
    double dx() const { return dx_; }
    double center(int i) const { return (i + 0.5) * dx_; }
    double face(int j) const { return j * dx_; }

private:
    int n_;
    double L_;
    double dx_;
};

/// Moving-frame state: tank offset xi, tank velocity w, levels h at cell
/// centers, relative velocities v at faces (v.front() == v.back() == 0).
struct TankState {
    double xi = 0.0;
    double w = 0.0;
    std::vector<double> h;
    std::vector<double> v;
};

inline double liquid_mass(const TankState& s, const Grid& grid) {
    double sum = 0.0;
    for (double hi : s.h) sum += hi;
    return sum * grid.dx();
}

inline TankState equilibrium_state(const PhysicalParams& p, const Grid& grid) {
    TankState s;
    s.h.assign(static_cast<std::size_t>(grid.n()), p.h_star());
    s.v.assign(static_cast<std::size_t>(grid.n()) + 1, 0.0);
    return s;
}

inline const TankState& validate_state(const TankState& s, const PhysicalParams& p,
                                       const Grid& grid) {
    SLOSH_REQUIRE(s.h.size() == static_cast<std::size_t>(grid.n()) &&
                      s.v.size() == static_cast<std::size_t>(grid.n()) + 1,
                  Errc::invalid_grid, "field lengths do not match the grid");
    SLOSH_REQUIRE(s.v.front() == 0.0 && s.v.back() == 0.0, Errc::boundary_velocity,
                  "boundary velocity: v must vanish at both walls");
    for (std::size_t i = 0; i < s.h.size(); ++i) {
        SLOSH_REQUIRE(s.h[i] > 0.0, Errc::nonpositive_level,
                      "nonpositive level at cell " + std::to_string(i));
    }
    const double mass = liquid_mass(s, grid);
    SLOSH_REQUIRE(std::abs(mass - p.m) <= 1e-12 * p.m, Errc::mass_mismatch,
                  "mass mismatch: dx*sum(h) = " + std::to_string(mass) +
                      " differs from m = " + std::to_string(p.m));
    return s;
}

/// Lab-frame picture of a state: left wall at a, absolute velocities u = v + w.
struct LabFrameView {
    double a = 0.0;
    double tank_velocity = 0.0;
    std::vector<double> H;
    std::vector<double> u;
};

inline LabFrameView reconstruct_lab_frame(const TankState& s, double a_star) {
    LabFrameView view;
    view.a = s.xi + a_star;
    view.tank_velocity = s.w;
    view.H = s.h;
    view.u.resize(s.v.size());
    for (std::size_t j = 0; j < s.v.size(); ++j) view.u[j] = s.v[j] + s.w;
    return view;
}

inline TankState to_moving_frame(const LabFrameView& view, double a_star) {
    TankState s;
    s.xi = view.a - a_star;
    s.w = view.tank_velocity;
    s.h = view.H;
    s.v.resize(view.u.size());
    for (std::size_t j = 0; j < view.u.size(); ++j) s.v[j] = view.u[j] - view.tank_velocity;
    return s;
}

}  // namespace slosh
