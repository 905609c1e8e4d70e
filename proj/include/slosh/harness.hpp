#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "slosh/certificates.hpp"
#include "slosh/controller.hpp"
#include "slosh/functionals.hpp"
#include "slosh/solver.hpp"
#include "slosh/types.hpp"

namespace slosh {

// ---------------------------------------------------------------------------
// Initial conditions
// ---------------------------------------------------------------------------

enum class IcMode { cosine_levels, sine_velocity, combined, offset_only };

/// Modal initial-condition recipe. Level modes are cosines (zero mean, zero
/// wall slope: mass and the contact-angle condition hold exactly), velocity
/// modes are sines (zero at the walls). In `combined` mode the same
/// coefficient list drives both families. xi0 and w0 are taken as given; only
/// the field amplitudes are rescaled to hit the CLF target.
struct InitialConditionSpec {
    IcMode mode = IcMode::cosine_levels;
    std::vector<double> amplitudes{1.0};
    double xi0 = 0.0;
    double w0 = 0.0;
    double target_r_fraction = 0.5;  // fraction of the spill radius R
};

struct InitialCondition {
    TankState state;
    double V = 0.0;
};

namespace detail {

inline bool uses_level_modes(IcMode mode) {
    return mode == IcMode::cosine_levels || mode == IcMode::combined;
}
inline bool uses_velocity_modes(IcMode mode) {
    return mode == IcMode::sine_velocity || mode == IcMode::combined;
}

inline TankState assemble_modes(const InitialConditionSpec& spec, double scale,
                                const PhysicalParams& p, const Grid& grid) {
    TankState s = equilibrium_state(p, grid);
    s.xi = spec.xi0;
    s.w = spec.w0;
    const double pi = std::numbers::pi;
    if (uses_level_modes(spec.mode)) {
        for (std::size_t mode = 0; mode < spec.amplitudes.size(); ++mode) {
            const double a = scale * spec.amplitudes[mode];
            if (a == 0.0) continue;
            const double wave = (mode + 1) * pi / grid.length();
            for (int i = 0; i < grid.n(); ++i) s.h[i] += a * std::cos(wave * grid.center(i));
        }
    }
    if (uses_velocity_modes(spec.mode)) {
        for (std::size_t mode = 0; mode < spec.amplitudes.size(); ++mode) {
            const double b = scale * spec.amplitudes[mode];
            if (b == 0.0) continue;
            const double wave = (mode + 1) * pi / grid.length();
            for (int j = 1; j < grid.n(); ++j) s.v[j] += b * std::sin(wave * grid.face(j));
        }
    }
    return s;
}

inline double min_level(const TankState& s) {
    return *std::min_element(s.h.begin(), s.h.end());
}

}  // namespace detail

/// Build a state inside the certified level set: field amplitudes are scaled
/// by bisection until V lands in [0.95, 1.0] * target_r_fraction * R.
/// `offset_only` states (and all-zero recipes) have nothing to scale; they are
/// accepted as-is when V does not exceed the target and rejected otherwise.
inline InitialCondition make_initial_condition(const InitialConditionSpec& spec,
                                               const PhysicalParams& p, const ControlGains& gains,
                                               const Grid& grid) {
    SLOSH_REQUIRE(spec.target_r_fraction > 0.0 && spec.target_r_fraction < 1.0,
                  Errc::infeasible_ic, "target_r_fraction must lie in (0, 1)");
    const double target = spec.target_r_fraction * spill_radius(p, gains.delta).value;

    const bool has_field_modes =
        (detail::uses_level_modes(spec.mode) || detail::uses_velocity_modes(spec.mode)) &&
        std::any_of(spec.amplitudes.begin(), spec.amplitudes.end(),
                    [](double a) { return a != 0.0; });

    const auto V_at = [&](double scale) {
        const TankState s = detail::assemble_modes(spec, scale, p, grid);
        SLOSH_REQUIRE(detail::min_level(s) > 0.0, Errc::infeasible_ic,
                      "initial-condition amplitude drives the level nonpositive");
        return clf_V(s, p, gains, grid).V;
    };

    if (!has_field_modes) {
        const TankState s = detail::assemble_modes(spec, 0.0, p, grid);
        const double V = clf_V(s, p, gains, grid).V;
        SLOSH_REQUIRE(V <= target, Errc::infeasible_ic,
                      "offset-only state already exceeds the level-set target");
        return {s, V};
    }

    SLOSH_REQUIRE(V_at(0.0) <= target, Errc::infeasible_ic,
                  "tank offset alone already exceeds the level-set target");

    // Largest scale that keeps the level positive (only level modes push h
    // down; pure velocity recipes are unconstrained).
    double scale_cap = std::numeric_limits<double>::infinity();
    if (detail::uses_level_modes(spec.mode)) {
        const TankState probe = detail::assemble_modes(spec, 1.0, p, grid);
        const double drop = p.h_star() - detail::min_level(probe);
        if (drop > 0.0) scale_cap = 0.999 * p.h_star() / drop;
    }

    double lo = 0.0, hi = std::min(1.0, scale_cap);
    while (V_at(hi) < target && hi < scale_cap) hi = std::min(2.0 * hi, scale_cap);
    SLOSH_REQUIRE(V_at(hi) >= 0.95 * target, Errc::infeasible_ic,
                  "requested level-set target is unreachable before the level loses positivity");

    double scale = hi, V = V_at(hi);
    for (int it = 0; it < 200 && (V < 0.95 * target || V > target); ++it) {
        scale = 0.5 * (lo + hi);
        V = V_at(scale);
        (V > target ? hi : lo) = scale;
    }
    SLOSH_REQUIRE(V >= 0.95 * target && V <= target, Errc::infeasible_ic,
                  "amplitude bisection failed to land in the target window");

    InitialCondition out{detail::assemble_modes(spec, scale, p, grid), V};
    validate_state(out.state, p, grid);
    return out;
}

// ---------------------------------------------------------------------------
// Randomized states for the property and Monte-Carlo suites
// ---------------------------------------------------------------------------

struct RandomStateOptions {
    int max_modes = 6;
    double level_amp = 0.3;   // relative to h*
    double vel_amp = 0.3;
    double xi_amp = 0.5;
    double w_amp = 0.5;
    double V_cap = 0.0;       // if > 0, rescale deviations until V <= V_cap
};

/// Random member of the admissible set: cosine level modes and sine velocity
/// modes (mass, wall slopes and wall velocities exact by construction),
/// positivity enforced by rescaling.
inline TankState random_valid_state(std::mt19937_64& rng, const PhysicalParams& p,
                                    const ControlGains& gains, const Grid& grid,
                                    const RandomStateOptions& opts = {}) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> mode_count(1, opts.max_modes);

    TankState s = equilibrium_state(p, grid);
    s.xi = unit(rng) * opts.xi_amp;
    s.w = unit(rng) * opts.w_amp;

    const int modes = mode_count(rng);
    const double pi = std::numbers::pi;
    for (int mode = 0; mode < modes; ++mode) {
        const double decay = 1.0 / ((mode + 1) * (mode + 1));
        const double a = unit(rng) * opts.level_amp * p.h_star() * decay;
        const double b = unit(rng) * opts.vel_amp * decay;
        const double wave = (mode + 1) * pi / grid.length();
        for (int i = 0; i < grid.n(); ++i) s.h[i] += a * std::cos(wave * grid.center(i));
        for (int j = 1; j < grid.n(); ++j) s.v[j] += b * std::sin(wave * grid.face(j));
    }

    const double drop = p.h_star() - detail::min_level(s);
    if (drop > 0.9 * p.h_star()) {
        const double shrink = 0.9 * p.h_star() / drop;
        for (int i = 0; i < grid.n(); ++i)
            s.h[i] = p.h_star() + (s.h[i] - p.h_star()) * shrink;
    }

    if (opts.V_cap > 0.0) {
        for (int it = 0; it < 200 && clf_V(s, p, gains, grid).V > opts.V_cap; ++it) {
            s.xi *= 0.7;
            s.w *= 0.7;
            for (int i = 0; i < grid.n(); ++i) s.h[i] = p.h_star() + 0.7 * (s.h[i] - p.h_star());
            for (int j = 1; j < grid.n(); ++j) s.v[j] *= 0.7;
        }
    }
    return validate_state(s, p, grid);
}

/// Seed for the randomized suites: SLOSH_CLF_SEED if set, a fixed default
/// otherwise.
inline std::uint64_t property_seed() {
    if (const char* env = std::getenv("SLOSH_CLF_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5105844ull;
}

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

struct TraceSample {
    double t = 0.0;
    double xi = 0.0;
    double w = 0.0;
    double f = 0.0;
    double V = 0.0;
    double E = 0.0;
    double W = 0.0;
    double mass = 0.0;
    double h_min = 0.0;
    double h_max = 0.0;
    double x_norm_dev = 0.0;
    // scalar field integrals kept for the trajectory certificates
    double momentum = 0.0;
    double level_diff = 0.0;
    double slope_sq = 0.0;      // ||h_x||_2^2
    double dissipation = 0.0;   // int h v_x^2
    double curvature_sq = 0.0;  // int h_xx^2 / (1+h_x^2)^(3/2)
};

struct SimTrace {
    std::vector<TraceSample> samples;
    PhysicalParams params;
    ControlGains gains;
    int n_cells = 0;
    double dt = 0.0;         // integrator step
    double sample_dt = 0.0;  // spacing of recorded samples
    double r = 0.0;          // certified level-set radius (= V at t = 0)
    double R = 0.0;          // spill radius
    double lambda_V = 0.0;   // guaranteed V-decay rate at r (0 in open loop)
    bool closed_loop = true;
    // optional per-sample profiles (cmd_simulate --profiles)
    bool has_profiles = false;
    std::vector<std::vector<double>> profile_h;
    std::vector<std::vector<double>> profile_v;

    double t_end() const { return samples.empty() ? 0.0 : samples.back().t; }
};

struct RunOptions {
    bool record_profiles = false;
    bool closed_loop = true;  // false: f == 0 (free decay), no gain check
};

namespace detail {

inline TraceSample sample_state(double t, const TankState& s, double f, const PhysicalParams& p,
                                const ControlGains& gains, const Grid& grid) {
    const FunctionalValues fv = clf_V(s, p, gains, grid);
    TraceSample out;
    out.t = t;
    out.xi = s.xi;
    out.w = s.w;
    out.f = f;
    out.V = fv.V;
    out.E = fv.E;
    out.W = fv.W;
    out.mass = fv.mass;
    out.h_min = *std::min_element(s.h.begin(), s.h.end());
    out.h_max = *std::max_element(s.h.begin(), s.h.end());
    out.x_norm_dev = x_norm(s, p, grid);
    out.momentum = liquid_momentum(s, grid);
    out.level_diff = level_difference(s);
    out.slope_sq = slope_l2_sq(s, grid);
    out.dissipation = dissipation_integral(s, grid);
    out.curvature_sq = curvature_dissipation_integral(s, grid);
    return out;
}

// The uniform run step may exceed the instantaneous CFL bound by this factor
// before the run restarts with a halved step. The stability region of the
// stepper sits well above cfl_safety * slack for the default safety, so the
// slack only absorbs mild growth of max h or max |v| past their initial
// values; a genuine violation still restarts.
inline constexpr double kCflRevalidationSlack = 1.25;

}  // namespace detail

/// Closed-loop (or free-decay) integration with a uniform step, so that the
/// recorded samples support centered time differencing. The step is fixed
/// from the initial state's CFL bound, re-checked at every recorded sample,
/// and the whole run restarts with half the step in the rare case the bound
/// tightens past the slack. Each recorded state is re-validated.
inline SimTrace run_simulation(const InitialCondition& ic, const PhysicalParams& p,
                               const ControlGains& gains, const Grid& grid,
                               const StepControls& ctrl, const RunOptions& opts = {}) {
    validate_params(p);
    validate_step_controls(ctrl);
    validate_state(ic.state, p, grid);

    SimTrace trace;
    trace.params = p;
    trace.gains = gains;
    trace.n_cells = grid.n();
    trace.r = ic.V;
    trace.R = spill_radius(p, gains.delta).value;
    trace.closed_loop = opts.closed_loop;
    trace.has_profiles = opts.record_profiles;

    if (opts.closed_loop) {
        validate_gain_positivity(gains);
        SLOSH_REQUIRE(ic.V < trace.R, Errc::certificate_domain,
                      "initial CLF value V(0) >= R: no spill-free certificate exists");
        const GainCheck check = validate_gains(p, gains, ic.V);
        SLOSH_REQUIRE(check.pass, Errc::gain_condition,
                      "gain condition k < q*theta(r) fails at r = V(0); margin " +
                          std::to_string(check.margin));
        trace.lambda_V = decay_rates(ic.V, p, gains).lambda_V;
    }

    const ClfController feedback(p, gains, grid);
    const auto law = [&](const TankState& s) {
        return opts.closed_loop ? feedback(s) : 0.0;
    };

    double dt_target = cfl_dt(ic.state, p, grid, ctrl);
    for (int attempt = 0;; ++attempt) {
        SLOSH_REQUIRE(attempt < 5, Errc::positivity_lost,
                      "stable step not found after repeated halving; aborting run");

        trace.samples.clear();
        trace.profile_h.clear();
        trace.profile_v.clear();

        const auto record = [&](double t, const TankState& s) {
            validate_state(s, p, grid);
            trace.samples.push_back(detail::sample_state(t, s, law(s), p, gains, grid));
            if (opts.record_profiles) {
                trace.profile_h.push_back(s.h);
                std::vector<double> vc;
                detail::center_velocities(s.v, grid, vc);
                trace.profile_v.push_back(vc);
            }
        };

        if (ctrl.t_end <= 0.0) {
            trace.dt = trace.sample_dt = 0.0;
            record(0.0, ic.state);
            return trace;
        }

        const long base = std::max(1L, static_cast<long>(std::ceil(ctrl.t_end / dt_target)));
        const long stride = ctrl.output_stride;
        const long n_steps = ((base + stride - 1) / stride) * stride;
        const double dt = ctrl.t_end / static_cast<double>(n_steps);
        trace.dt = dt;
        trace.sample_dt = dt * static_cast<double>(stride);

        TankState s = ic.state;
        Rk4Stepper stepper(p, grid);
        record(0.0, s);

        // the step is fixed from the initial state's CFL bound; the sample-
        // time revalidation restarts the run with a halved step if the bound
        // ever tightens past the slack
        const auto step_ok = [&](const TankState& state) {
            return dt <= detail::kCflRevalidationSlack * cfl_dt(state, p, grid, ctrl);
        };
        bool cfl_violated = !step_ok(s);
        for (long step = 1; step <= n_steps && !cfl_violated; ++step) {
            try {
                stepper.advance(s, dt, law);
            } catch (const Error& err) {
                if (err.code() != Errc::positivity_lost) throw;
                throw Error(Errc::positivity_lost,
                            std::string(err.what()) + " at t = " +
                                std::to_string(static_cast<double>(step) * dt));
            }
            if (step % stride == 0) {
                record(static_cast<double>(step) * dt, s);
                cfl_violated = !step_ok(s);
            }
        }
        if (!cfl_violated) return trace;
        dt_target *= 0.5;
    }
}

/// Free-decay convenience wrapper (f == 0).
inline SimTrace run_free_decay(const InitialCondition& ic, const PhysicalParams& p,
                               const ControlGains& gains, const Grid& grid,
                               const StepControls& ctrl) {
    RunOptions opts;
    opts.closed_loop = false;
    return run_simulation(ic, p, gains, grid, ctrl, opts);
}

// ---------------------------------------------------------------------------
// Trajectory certificates
// ---------------------------------------------------------------------------

struct DissipationCheck {
    bool pass = true;
    double worst_residual = 0.0;  // max over interior samples of dV/dt - RHS
    double worst_time = 0.0;
    double tol = 0.0;
};

namespace detail {
inline void require_uniform_sampling(const SimTrace& trace) {
    const auto& s = trace.samples;
    for (std::size_t i = 2; i < s.size(); ++i) {
        const double d0 = s[1].t - s[0].t;
        const double di = s[i].t - s[i - 1].t;
        SLOSH_REQUIRE(std::abs(di - d0) <= 1e-9 * d0, Errc::nonuniform_sampling,
                      "centered time differencing needs uniformly spaced samples");
    }
}

// Discretization-limited tolerance scale for the dissipation-inequality
// residual, fixed by the refinement study in the acceptance suite.
inline constexpr double kDissipationTolScale = 10.0;
}  // namespace detail

/// Check the Lyapunov dissipation inequality along a closed-loop trace:
/// centered dV/dt against the five-term certified upper bound at every
/// interior sample.
inline DissipationCheck verify_dissipation(const SimTrace& trace, const PhysicalParams& p,
                                           const ControlGains& gains, const Grid& grid) {
    detail::require_uniform_sampling(trace);
    DissipationCheck out;
    const auto& smp = trace.samples;
    if (smp.size() < 3) return out;

    const double dt_s = trace.sample_dt;
    const double dx = grid.dx();
    out.tol = std::max(1e-6, detail::kDissipationTolScale * (dt_s * dt_s + dx * dx));

    const double theta_r = theta(trace.r, p, gains);
    const double Q1_r = level_bounds(trace.r, p, gains.delta).Q1;
    const double qg = gains.q;

    out.worst_residual = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
        const double dVdt = (smp[i + 1].V - smp[i - 1].V) / (2.0 * dt_s);
        const auto lb = level_bounds(smp[i].V, p, gains.delta);
        const double drag =
            (p.mu * gains.delta / (2.0 * p.H_max)) * (2.0 * p.H_max - Q1_r * lb.Q2 / lb.Q1);
        const double wk = smp[i].w + gains.k * smp[i].xi;
        const double rhs = -(3.0 * p.mu * p.g / 4.0) * smp[i].slope_sq -
                           qg * gains.k * gains.k * gains.k * smp[i].xi * smp[i].xi -
                           drag * smp[i].dissipation - p.mu * p.sigma * smp[i].curvature_sq -
                           qg * (qg * theta_r - gains.k) * wk * wk;
        const double residual = dVdt - rhs;
        if (residual > out.worst_residual) {
            out.worst_residual = residual;
            out.worst_time = smp[i].t;
        }
    }
    out.pass = out.worst_residual <= out.tol;
    return out;
}

/// Energy-identity residuals over a recorded trace, from the stored scalar
/// integrals (centered dE/dt, dW/dt versus the exact balance laws).
struct TraceResiduals {
    double max_res_E = 0.0;
    double max_res_W = 0.0;
    double max_E = 0.0;
};

inline TraceResiduals trace_identity_residuals(const SimTrace& trace, const PhysicalParams& p) {
    detail::require_uniform_sampling(trace);
    TraceResiduals out;
    const auto& smp = trace.samples;
    for (std::size_t i = 0; i < smp.size(); ++i) out.max_E = std::max(out.max_E, smp[i].E);
    for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
        const double dE = (smp[i + 1].E - smp[i - 1].E) / (2.0 * trace.sample_dt);
        const double dW = (smp[i + 1].W - smp[i - 1].W) / (2.0 * trace.sample_dt);
        const double rhs_E = -p.mu * smp[i].dissipation + smp[i].f * smp[i].momentum;
        const double rhs_W = -p.mu * p.g * smp[i].slope_sq - p.mu * p.sigma * smp[i].curvature_sq +
                             smp[i].f * (smp[i].momentum + p.mu * smp[i].level_diff);
        out.max_res_E = std::max(out.max_res_E, std::abs(dE - rhs_E));
        out.max_res_W = std::max(out.max_res_W, std::abs(dW - rhs_W));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decay fitting
// ---------------------------------------------------------------------------

struct DecayFit {
    bool applicable = false;
    double lambda_emp = 0.0;  // -slope of ln V over the tail window
    double t_lo = 0.0;
    double t_hi = 0.0;
    int n_points = 0;
};

/// Least-squares slope of ln V(t) over the tail window [t_end/2, t_end],
/// skipping samples with V below 1e-14.
inline DecayFit fit_decay(const SimTrace& trace) {
    DecayFit out;
    if (trace.samples.empty()) return out;
    const double t_end = trace.t_end();
    out.t_lo = 0.5 * t_end;
    out.t_hi = t_end;

    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    int n = 0;
    for (const auto& smp : trace.samples) {
        if (smp.t < out.t_lo || smp.V < 1e-14) continue;
        const double y = std::log(smp.V);
        st += smp.t;
        sy += y;
        stt += smp.t * smp.t;
        sty += smp.t * y;
        ++n;
    }
    out.n_points = n;
    if (n < 2) return out;
    const double denom = n * stt - st * st;
    if (denom <= 0.0) return out;
    out.applicable = true;
    out.lambda_emp = -(n * sty - st * sy) / denom;
    return out;
}

// ---------------------------------------------------------------------------
// Certificate report
// ---------------------------------------------------------------------------

struct CertificateResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;      // >= 0 means satisfied with that slack
    double worst_time = 0.0;  // sample time where the margin is attained
};

struct CertificateReport {
    std::vector<CertificateResult> entries;
    bool all_pass = false;
    DissipationCheck dissipation;
    DecayFit fit;
    double lambda_V = 0.0;

    const CertificateResult& entry(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return e;
        throw Error(Errc::config_error, "unknown certificate " + name);
    }
};

/// Evaluate the eight trajectory certificates along a completed trace.
inline CertificateReport certify(const SimTrace& trace, const PhysicalParams& p,
                                 const ControlGains& gains, const Grid& grid) {
    const auto& smp = trace.samples;
    CertificateReport report;
    report.lambda_V = trace.lambda_V;

    const double V0 = smp.empty() ? 0.0 : smp.front().V;
    const double mass_tol = 1e-12 * p.m;
    const double mono_tol = 1e-8 * std::max(V0, 1.0);
    const double round_tol = 1e-10 * std::max(V0, 1.0);

    const auto scan = [&](const std::string& name, auto&& margin_of) {
        CertificateResult res;
        res.name = name;
        res.margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < smp.size(); ++i) {
            const double margin = margin_of(i);
            if (margin < res.margin) {
                res.margin = margin;
                res.worst_time = smp[i].t;
            }
        }
        res.pass = res.margin >= 0.0;
        report.entries.push_back(res);
    };

    // C1 mass conservation
    scan("C1 mass", [&](std::size_t i) { return mass_tol - std::abs(smp[i].mass - p.m); });
    // C2 V monotone (checked between consecutive samples)
    scan("C2 V-monotone", [&](std::size_t i) {
        if (i + 1 >= smp.size()) return std::numeric_limits<double>::infinity();
        return mono_tol - (smp[i + 1].V - smp[i].V);
    });
    // C3 level-set invariance V(t) <= V(0) = r
    scan("C3 invariance", [&](std::size_t i) { return V0 + round_tol - smp[i].V; });
    // C4 level bounds Q1(V) <= h <= Q2(V)
    scan("C4 level-bounds", [&](std::size_t i) {
        const auto lb = level_bounds(smp[i].V, p, gains.delta);
        return std::min(smp[i].h_min - lb.Q1, lb.Q2 - smp[i].h_max) + 1e-10;
    });
    // C5 spill-free (strict)
    scan("C5 spill-free", [&](std::size_t i) { return p.H_max - smp[i].h_max; });
    // C6 exponential decay envelope (closed loop only; trivially satisfied
    // with lambda_V = 0 in open loop)
    scan("C6 V-decay", [&](std::size_t i) {
        return V0 * std::exp(-trace.lambda_V * smp[i].t) + 1e-10 - smp[i].V;
    });
    // C7 dissipation inequality
    {
        CertificateResult res;
        res.name = "C7 dissipation";
        if (trace.closed_loop && smp.size() >= 3) {
            report.dissipation = verify_dissipation(trace, p, gains, grid);
            res.pass = report.dissipation.pass;
            res.margin = report.dissipation.tol - report.dissipation.worst_residual;
            res.worst_time = report.dissipation.worst_time;
        } else {
            res.pass = true;
            res.margin = std::numeric_limits<double>::infinity();
        }
        report.entries.push_back(res);
    }
    // C8 positivity (strict)
    scan("C8 positivity", [&](std::size_t i) { return smp[i].h_min; });

    report.fit = fit_decay(trace);
    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const CertificateResult& e) { return e.pass; });
    return report;
}

}  // namespace slosh
