#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "slosh/config.hpp"
#include "slosh/harness.hpp"

namespace slosh {

namespace detail {

/// 17 significant digits: round-trips every binary double exactly.
inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    SLOSH_REQUIRE(out.good(), Errc::config_error, "cannot write '" + path + "'");
    return out;
}

}  // namespace detail

inline void write_trace_csv(std::ostream& out, const SimTrace& trace) {
    out << "t,xi,w,f,V,E,W,mass,h_min,h_max,x_norm_dev\n";
    for (const auto& s : trace.samples) {
        out << detail::fmt(s.t) << ',' << detail::fmt(s.xi) << ',' << detail::fmt(s.w) << ','
            << detail::fmt(s.f) << ',' << detail::fmt(s.V) << ',' << detail::fmt(s.E) << ','
            << detail::fmt(s.W) << ',' << detail::fmt(s.mass) << ',' << detail::fmt(s.h_min) << ','
            << detail::fmt(s.h_max) << ',' << detail::fmt(s.x_norm_dev) << '\n';
    }
}

inline void write_trace_csv(const std::string& path, const SimTrace& trace) {
    auto out = detail::open_out(path);
    write_trace_csv(out, trace);
}

/// Per-sample profiles at cell centers (velocity averaged to centers).
inline void write_profiles_csv(const std::string& path, const SimTrace& trace, const Grid& grid) {
    SLOSH_REQUIRE(trace.has_profiles, Errc::config_error, "trace carries no profiles");
    auto out = detail::open_out(path);
    out << "t,x,h,v\n";
    for (std::size_t k = 0; k < trace.profile_h.size(); ++k) {
        const double t = trace.samples[k].t;
        for (int i = 0; i < grid.n(); ++i) {
            out << detail::fmt(t) << ',' << detail::fmt(grid.center(i)) << ','
                << detail::fmt(trace.profile_h[k][i]) << ',' << detail::fmt(trace.profile_v[k][i])
                << '\n';
        }
    }
}

inline void write_certificates_txt(std::ostream& out, const CertificateReport& report,
                                   const SimTrace& trace) {
    out << "certificate report\n";
    out << "  r = " << detail::fmt(trace.r) << "  R = " << detail::fmt(trace.R)
        << "  lambda_V = " << detail::fmt(trace.lambda_V) << "\n";
    for (const auto& e : report.entries) {
        out << "  [" << (e.pass ? "PASS" : "FAIL") << "] " << e.name
            << "  margin = " << detail::fmt(e.margin) << "  at t = " << detail::fmt(e.worst_time)
            << "\n";
    }
    if (report.fit.applicable) {
        out << "  decay fit over [" << detail::fmt(report.fit.t_lo) << ", "
            << detail::fmt(report.fit.t_hi) << "] (" << report.fit.n_points
            << " samples): lambda_emp = " << detail::fmt(report.fit.lambda_emp) << "\n";
        if (trace.lambda_V > 0.0)
            out << "  empirical/guaranteed rate ratio = "
                << detail::fmt(report.fit.lambda_emp / trace.lambda_V) << "\n";
    } else {
        out << "  decay fit: not applicable (V below floor in the tail window)\n";
    }
    out << (report.all_pass ? "ALL CERTIFICATES PASS\n" : "CERTIFICATE FAILURE\n");
}

inline void write_certificates_txt(const std::string& path, const CertificateReport& report,
                                   const SimTrace& trace) {
    auto out = detail::open_out(path);
    write_certificates_txt(out, report, trace);
}

// ---------------------------------------------------------------------------
// analyze output
// ---------------------------------------------------------------------------

struct AnalyzeRow {
    double r = 0.0;
    double Q1 = 0.0;
    double Q2 = 0.0;
    double theta_r = 0.0;
    bool gains_ok = false;
    double beta_r = 0.0;
    double Lambda_r = 0.0;
    double lambda_V = 0.0;
    double lambda_norm = 0.0;
};

inline std::vector<AnalyzeRow> analyze_grid(const ResolvedScenario& sc, int points = 10) {
    std::vector<AnalyzeRow> rows;
    for (int i = 0; i < points; ++i) {
        AnalyzeRow row;
        row.r = sc.R * static_cast<double>(i) / points;
        const auto lb = level_bounds(row.r, sc.p, sc.gains.delta);
        row.Q1 = lb.Q1;
        row.Q2 = lb.Q2;
        row.theta_r = theta(row.r, sc.p, sc.gains);
        row.gains_ok = validate_gains(sc.p, sc.gains, row.r).pass;
        row.Lambda_r = Lambda(row.r, sc.p, sc.gains);
        if (row.gains_ok) {
            row.beta_r = beta(row.r, sc.p, sc.gains);
            row.lambda_V = row.beta_r / row.Lambda_r;
            row.lambda_norm = 0.5 * row.lambda_V;
        }
        rows.push_back(row);
    }
    return rows;
}

inline const char* zeta_branch_name(const SpillRadius& sr) {
    return sr.zeta_branch == 1 ? "zeta1 (no-spill family)" : "zeta2 (positivity family)";
}

inline std::string active_branch_name(const SpillRadius& sr) {
    if (sr.zeta_branch == 1) return "Gamma" + std::to_string(sr.gamma_branch);
    return sr.delta_branch == 0 ? "constant 2" : "Delta" + std::to_string(sr.delta_branch);
}

inline void write_analyze_text(std::ostream& out, const ResolvedScenario& sc) {
    const SpillRadius sr = spill_radius(sc.p, sc.gains.delta);
    const GainCheck gc = validate_gains(sc.p, sc.gains, sc.ic.V);
    out << "spill radius R = " << detail::fmt(sr.value) << "\n";
    out << "  limited by " << zeta_branch_name(sr) << ", active branch " << active_branch_name(sr)
        << "\n";
    out << "positivity threshold = " << detail::fmt(positivity_threshold(sc.p, sc.gains.delta))
        << "\n";
    out << "r = V(initial) = " << detail::fmt(sc.ic.V) << "\n";
    out << "gains: omega = " << detail::fmt(sc.gains.omega) << "  k = " << detail::fmt(sc.gains.k)
        << "  q = " << detail::fmt(sc.gains.q) << "  delta = " << detail::fmt(sc.gains.delta)
        << "\n";
    out << "gain margin q*theta(r) - k = " << detail::fmt(gc.margin) << "  ("
        << (gc.pass ? "pass" : "FAIL") << ")\n\n";
    out << "r            Q1           Q2           theta        beta         Lambda       "
           "lambda_V     lambda_norm\n";
    for (const auto& row : analyze_grid(sc)) {
        char line[256];
        if (row.gains_ok) {
            std::snprintf(line, sizeof line,
                          "%-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g\n",
                          row.r, row.Q1, row.Q2, row.theta_r, row.beta_r, row.Lambda_r,
                          row.lambda_V, row.lambda_norm);
        } else {
            std::snprintf(line, sizeof line,
                          "%-12.6g %-12.6g %-12.6g %-12.6g %-12s %-12.6g %-12s %-12s\n", row.r,
                          row.Q1, row.Q2, row.theta_r, "-", row.Lambda_r, "-", "-");
        }
        out << line;
    }
}

inline void write_analyze_csv(std::ostream& out, const ResolvedScenario& sc) {
    out << "r,Q1,Q2,theta,beta,Lambda,lambda_V,lambda_norm\n";
    for (const auto& row : analyze_grid(sc)) {
        out << detail::fmt(row.r) << ',' << detail::fmt(row.Q1) << ',' << detail::fmt(row.Q2) << ','
            << detail::fmt(row.theta_r) << ','
            << (row.gains_ok ? detail::fmt(row.beta_r) : std::string("nan")) << ','
            << detail::fmt(row.Lambda_r) << ','
            << (row.gains_ok ? detail::fmt(row.lambda_V) : std::string("nan")) << ','
            << (row.gains_ok ? detail::fmt(row.lambda_norm) : std::string("nan")) << '\n';
    }
}

// ---------------------------------------------------------------------------
// sweep summary
// ---------------------------------------------------------------------------

struct SweepRow {
    double value = 0.0;
    int exit_status = 0;
    double lambda_emp = 0.0;
    double lambda_V = 0.0;
    double worst_margin = 0.0;
};

inline void write_sweep_summary_csv(const std::string& path, const std::string& param,
                                    const std::vector<SweepRow>& rows) {
    auto out = detail::open_out(path);
    out << param << ",exit_status,lambda_emp,lambda_V,worst_margin\n";
    for (const auto& row : rows) {
        // the swept value echoes the input compactly; computed columns keep
        // the 17-digit round-trip convention
        char value[32];
        std::snprintf(value, sizeof value, "%.12g", row.value);
        out << value << ',' << row.exit_status << ',' << detail::fmt(row.lambda_emp) << ','
            << detail::fmt(row.lambda_V) << ',' << detail::fmt(row.worst_margin) << '\n';
    }
}

}  // namespace slosh
