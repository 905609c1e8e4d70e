#pragma once

#include "slosh/functionals.hpp"
#include "slosh/types.hpp"

namespace slosh {

/// The four measured quantities the feedback law needs. The controller never
/// reads the full level or velocity profiles.
struct Measurements {
    double momentum = 0.0;    // int h v dx
    double level_diff = 0.0;  // h(L) - h(0)
    double xi = 0.0;
    double w = 0.0;
};

inline Measurements measure(const TankState& s, const Grid& grid) {
    return {liquid_momentum(s, grid), level_difference(s), s.xi, s.w};
}

/// Output feedback law
///   f = -omega ((delta+1) int h v dx + mu (h(L) - h(0)) - q (w + k xi)).
/// Independent of sigma: the same gains stabilize any surface tension.
inline double feedback_f(const Measurements& meas, const ControlGains& gains,
                         const PhysicalParams& p) {
    return -gains.omega * ((gains.delta + 1.0) * meas.momentum + p.mu * meas.level_diff -
                           gains.q * (meas.w + gains.k * meas.xi));
}

/// State-feedback functor for the time stepper (evaluated at every stage).
class ClfController {
public:
    ClfController(const PhysicalParams& p, const ControlGains& gains, const Grid& grid)
        : p_(p), gains_(gains), grid_(grid) {}

    double operator()(const TankState& s) const { return feedback_f(measure(s, grid_), gains_, p_); }

private:
    PhysicalParams p_;
    ControlGains gains_;
    Grid grid_;
};

/// Open-loop stand-in (free decay).
struct ZeroController {
    double operator()(const TankState&) const { return 0.0; }
};

}  // namespace slosh
