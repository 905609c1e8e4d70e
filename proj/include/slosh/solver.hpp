#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "slosh/errors.hpp"
#include "slosh/stencils.hpp"
#include "slosh/types.hpp"

namespace slosh {

/// Time derivative of a state. d_v is pinned to zero at both walls and d_h
/// telescopes to zero mass change by construction.
struct StateDerivative {
    double d_xi = 0.0;
    double d_w = 0.0;
    std::vector<double> d_h;
    std::vector<double> d_v;
};

struct StepControls {
    double cfl_safety = 0.4;  // fraction of the stability bound, in (0, 1]
    double dt_max = 1e-2;     // hard step ceiling [s]
    double t_end = 40.0;      // horizon [s]
    int output_stride = 500;  // steps between recorded samples
};

inline const StepControls& validate_step_controls(const StepControls& ctrl) {
    SLOSH_REQUIRE(ctrl.cfl_safety > 0.0 && ctrl.cfl_safety <= 1.0, Errc::invalid_params,
                  "cfl_safety must lie in (0, 1]");
    SLOSH_REQUIRE(std::isfinite(ctrl.dt_max) && ctrl.dt_max > 0.0, Errc::invalid_params,
                  "dt_max must be positive");
    SLOSH_REQUIRE(std::isfinite(ctrl.t_end) && ctrl.t_end >= 0.0, Errc::invalid_params,
                  "t_end must be nonnegative");
    SLOSH_REQUIRE(ctrl.output_stride >= 1, Errc::invalid_params, "output_stride must be >= 1");
    return ctrl;
}

/// Curvature kappa = h_xx / (1 + h_x^2)^(3/2) at cell centers, with centered
/// differences and reflection ghosts at the walls.
inline std::vector<double> mean_curvature(const std::vector<double>& h, const Grid& grid) {
    std::vector<double> hx, hxx, kappa(h.size());
    detail::center_slopes(h, grid, hx);
    detail::center_second_diff(h, grid, hxx);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double t = 1.0 + hx[i] * hx[i];
        kappa[i] = hxx[i] / (t * std::sqrt(t));
    }
    return kappa;
}

/// d(kappa)/dx at faces: differences of center curvatures inside, one-sided
/// copies at the two wall faces (the solver never uses the wall values; the
/// wall velocities are pinned).
inline std::vector<double> curvature_term(const std::vector<double>& h, const Grid& grid) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    const auto kappa = mean_curvature(h, grid);
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j < n; ++j) out[j] = (kappa[j] - kappa[j - 1]) * inv_dx;
    out[0] = (kappa[1] - kappa[0]) * inv_dx;
    out[static_cast<std::size_t>(n)] = (kappa[n - 1] - kappa[n - 2]) * inv_dx;
    return out;
}

namespace detail {

struct RhsScratch {
    std::vector<double> kappa;  // n
    std::vector<double> vx;     // n
    std::vector<double> flux;   // n + 1
};

// Semi-discrete right-hand side of the moving-frame system:
//   xi' = w,  w' = -f,
//   h'  = -(h v)_x            (face fluxes, exact telescoping),
//   v'  = -v v_x - g h_x + sigma (kappa)_x + mu (h v_x)_x / h + f  (interior faces).
inline void compute_rhs(const TankState& s, double f, const PhysicalParams& p, const Grid& grid,
                        RhsScratch& scratch, StateDerivative& out) {
    const int n = grid.n();
    const double dx = grid.dx();
    const double inv_dx = 1.0 / dx;
    const double inv_dx2 = inv_dx * inv_dx;
    const double half_inv_dx = 0.5 * inv_dx;

    const double* h = s.h.data();
    const double* v = s.v.data();

    double h_min = h[0];
    for (int i = 1; i < n; ++i) h_min = std::min(h_min, h[i]);
    SLOSH_REQUIRE(h_min > 0.0, Errc::positivity_lost,
                  "liquid level reached " + std::to_string(h_min) +
                      "; the state left the physical domain (try a smaller cfl_safety)");

    out.d_xi = s.w;
    out.d_w = -f;
    out.d_h.resize(static_cast<std::size_t>(n));
    out.d_v.resize(static_cast<std::size_t>(n) + 1);

    scratch.kappa.resize(static_cast<std::size_t>(n));
    scratch.vx.resize(static_cast<std::size_t>(n));
    scratch.flux.resize(static_cast<std::size_t>(n) + 1);
    double* kappa = scratch.kappa.data();
    double* vx = scratch.vx.data();
    double* flux = scratch.flux.data();

    for (int i = 1; i < n - 1; ++i) {
        const double hx = (h[i + 1] - h[i - 1]) * half_inv_dx;
        const double hxx = (h[i + 1] - 2.0 * h[i] + h[i - 1]) * inv_dx2;
        const double t = 1.0 + hx * hx;
        kappa[i] = hxx / (t * std::sqrt(t));
    }
    {  // reflection ghosts h[-1] = h[0], h[n] = h[n-1]
        const double hx0 = (h[1] - h[0]) * half_inv_dx;
        const double t0 = 1.0 + hx0 * hx0;
        kappa[0] = (h[1] - h[0]) * inv_dx2 / (t0 * std::sqrt(t0));
        const double hxn = (h[n - 1] - h[n - 2]) * half_inv_dx;
        const double tn = 1.0 + hxn * hxn;
        kappa[n - 1] = (h[n - 2] - h[n - 1]) * inv_dx2 / (tn * std::sqrt(tn));
    }

    for (int i = 0; i < n; ++i) vx[i] = (v[i + 1] - v[i]) * inv_dx;

    flux[0] = 0.0;
    flux[n] = 0.0;
    for (int j = 1; j < n; ++j) flux[j] = 0.5 * (h[j - 1] + h[j]) * v[j];
    for (int i = 0; i < n; ++i) out.d_h[i] = -(flux[i + 1] - flux[i]) * inv_dx;

    out.d_v[0] = 0.0;
    out.d_v[static_cast<std::size_t>(n)] = 0.0;
    for (int j = 1; j < n; ++j) {
        const double h_face = 0.5 * (h[j - 1] + h[j]);
        const double advect = -v[j] * (v[j + 1] - v[j - 1]) * half_inv_dx;
        const double gravity = -p.g * (h[j] - h[j - 1]) * inv_dx;
        const double capillary = p.sigma * (kappa[j] - kappa[j - 1]) * inv_dx;
        const double viscous = p.mu * (h[j] * vx[j] - h[j - 1] * vx[j - 1]) * inv_dx / h_face;
        out.d_v[j] = advect + gravity + capillary + viscous + f;
    }
}

}  // namespace detail

inline StateDerivative rhs(const TankState& s, double f, const PhysicalParams& p,
                           const Grid& grid) {
    detail::RhsScratch scratch;
    StateDerivative out;
    detail::compute_rhs(s, f, p, grid, scratch, out);
    return out;
}

/// Largest stable explicit step for the current state: advective, viscous and
/// capillary-dispersive bounds, scaled by cfl_safety and capped by dt_max.
inline double cfl_dt(const TankState& s, const PhysicalParams& p, const Grid& grid,
                     const StepControls& ctrl) {
    const double dx = grid.dx();
    double v_max = 0.0, h_max = 0.0;
    for (double vj : s.v) v_max = std::max(v_max, std::abs(vj));
    for (double hi : s.h) h_max = std::max(h_max, hi);

    const double advective = dx / (v_max + std::sqrt(p.g * h_max));
    const double viscous = dx * dx / (4.0 * p.mu);
    const double capillary = dx * dx / (std::numbers::pi * std::sqrt(p.sigma * h_max));
    return ctrl.cfl_safety * std::min({advective, viscous, capillary, ctrl.dt_max});
}

/// Classical RK4 with the control acceleration re-evaluated at every stage
/// state. The level update is compensated (per-cell Kahan carry) so discrete
/// mass stays at m to machine precision over millions of steps.
class Rk4Stepper {
public:
    Rk4Stepper(const PhysicalParams& p, const Grid& grid) : p_(p), grid_(grid) {
        const auto n = static_cast<std::size_t>(grid.n());
        stage_.h.resize(n);
        stage_.v.resize(n + 1);
        carry_.assign(n, 0.0);
    }

    template <class ControlLaw>
    void advance(TankState& s, double dt, ControlLaw&& law) {
        detail::compute_rhs(s, law(s), p_, grid_, scratch_, k1_);
        make_stage(s, 0.5 * dt, k1_);
        detail::compute_rhs(stage_, law(stage_), p_, grid_, scratch_, k2_);
        make_stage(s, 0.5 * dt, k2_);
        detail::compute_rhs(stage_, law(stage_), p_, grid_, scratch_, k3_);
        make_stage(s, dt, k3_);
        detail::compute_rhs(stage_, law(stage_), p_, grid_, scratch_, k4_);

        const double w6 = dt / 6.0;
        s.xi += w6 * (k1_.d_xi + 2.0 * (k2_.d_xi + k3_.d_xi) + k4_.d_xi);
        s.w += w6 * (k1_.d_w + 2.0 * (k2_.d_w + k3_.d_w) + k4_.d_w);
        const int n = grid_.n();
        for (int i = 0; i < n; ++i) {
            const double inc = w6 * (k1_.d_h[i] + 2.0 * (k2_.d_h[i] + k3_.d_h[i]) + k4_.d_h[i]);
            const double y = inc - carry_[i];
            const double t = s.h[i] + y;
            carry_[i] = (t - s.h[i]) - y;
            s.h[i] = t;
        }
        // wall entries have zero derivative at every stage, so v[0] and v[n]
        // remain exactly zero
        for (int j = 1; j < n; ++j)
            s.v[j] += w6 * (k1_.d_v[j] + 2.0 * (k2_.d_v[j] + k3_.d_v[j]) + k4_.d_v[j]);
    }

    void reset_compensation() { std::fill(carry_.begin(), carry_.end(), 0.0); }

private:
    void make_stage(const TankState& s, double a, const StateDerivative& k) {
        stage_.xi = s.xi + a * k.d_xi;
        stage_.w = s.w + a * k.d_w;
        const int n = grid_.n();
        for (int i = 0; i < n; ++i) stage_.h[i] = s.h[i] + a * k.d_h[i];
        for (int j = 0; j <= n; ++j) stage_.v[j] = s.v[j] + a * k.d_v[j];
    }

    PhysicalParams p_;
    Grid grid_;
    TankState stage_;
    StateDerivative k1_, k2_, k3_, k4_;
    detail::RhsScratch scratch_;
    std::vector<double> carry_;
};

/// One RK4 step as a pure function (tests and small drivers; the harness
/// reuses an Rk4Stepper to keep buffers and the mass compensation warm).
template <class ControlLaw>
TankState step_rk4(const TankState& s, ControlLaw&& law, const PhysicalParams& p, const Grid& grid,
                   double dt) {
    TankState next = s;
    Rk4Stepper stepper(p, grid);
    stepper.advance(next, dt, law);
    return next;
}

}  // namespace slosh
