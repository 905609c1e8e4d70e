#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slosh/harness.hpp"
#include "slosh/types.hpp"

namespace slosh {

/// Parsed scenario file. Tank geometry (L, m, H_max) has no default and must
/// be explicit; everything else falls back to the canonical defaults.
struct ScenarioConfig {
    PhysicalParams physical;
    ControlGains gains;
    bool k_auto = true;  // gains.k ignored until resolved
    int n_cells = 256;
    InitialConditionSpec initial;
    StepControls stepping;
    std::string out_dir = ".";
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void config_fail(int line, const std::string& what) {
    throw Error(Errc::config_error, "config line " + std::to_string(line) + ": " + what);
}

inline double parse_double(const std::string& value, int line) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        config_fail(line, "expected a number, got '" + value + "'");
    }
    if (pos != value.size()) config_fail(line, "trailing characters after number '" + value + "'");
    return out;
}

inline int parse_int(const std::string& value, int line) {
    const double d = parse_double(value, line);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) config_fail(line, "expected an integer, got '" + value + "'");
    return i;
}

inline std::vector<double> parse_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), line));
    if (out.empty()) config_fail(line, "expected a comma-separated list");
    return out;
}

inline IcMode parse_mode(const std::string& value, int line) {
    if (value == "cosine-levels") return IcMode::cosine_levels;
    if (value == "sine-velocity") return IcMode::sine_velocity;
    if (value == "combined") return IcMode::combined;
    if (value == "offset-only") return IcMode::offset_only;
    config_fail(line, "unknown initial mode '" + value + "'");
}

}  // namespace detail

/// Parse the line-oriented `key = value` format with `[section]` headers.
/// Unknown sections or keys, duplicate keys and malformed values are hard
/// errors that name the offending line.
inline ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    bool has_L = false, has_m = false, has_Hmax = false;

    std::set<std::string> seen;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = detail::trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') detail::config_fail(line, "unterminated section header");
            section = detail::trim(s.substr(1, s.size() - 2));
            static const std::set<std::string> known{"physical", "gains",    "grid",
                                                     "initial",  "stepping", "output"};
            if (!known.count(section)) detail::config_fail(line, "unknown section '" + section + "'");
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) detail::config_fail(line, "expected key = value");
        const std::string key = detail::trim(s.substr(0, eq));
        const std::string value = detail::trim(s.substr(eq + 1));
        if (key.empty()) detail::config_fail(line, "empty key");
        if (value.empty()) detail::config_fail(line, "empty value for '" + key + "'");
        if (section.empty()) detail::config_fail(line, "key '" + key + "' outside any section");
        if (!seen.insert(section + "." + key).second)
            detail::config_fail(line, "duplicate key '" + key + "' in [" + section + "]");

        if (section == "physical") {
            if (key == "g") cfg.physical.g = detail::parse_double(value, line);
            else if (key == "mu") cfg.physical.mu = detail::parse_double(value, line);
            else if (key == "sigma") cfg.physical.sigma = detail::parse_double(value, line);
            else if (key == "L") { cfg.physical.L = detail::parse_double(value, line); has_L = true; }
            else if (key == "m") { cfg.physical.m = detail::parse_double(value, line); has_m = true; }
            else if (key == "H_max") { cfg.physical.H_max = detail::parse_double(value, line); has_Hmax = true; }
            else detail::config_fail(line, "unknown key '" + key + "' in [physical]");
        } else if (section == "gains") {
            if (key == "omega") cfg.gains.omega = detail::parse_double(value, line);
            else if (key == "q") cfg.gains.q = detail::parse_double(value, line);
            else if (key == "delta") cfg.gains.delta = detail::parse_double(value, line);
            else if (key == "k") {
                if (value == "auto") cfg.k_auto = true;
                else { cfg.gains.k = detail::parse_double(value, line); cfg.k_auto = false; }
            } else detail::config_fail(line, "unknown key '" + key + "' in [gains]");
        } else if (section == "grid") {
            if (key == "n_cells") cfg.n_cells = detail::parse_int(value, line);
            else detail::config_fail(line, "unknown key '" + key + "' in [grid]");
        } else if (section == "initial") {
            if (key == "mode") cfg.initial.mode = detail::parse_mode(value, line);
            else if (key == "amplitudes") cfg.initial.amplitudes = detail::parse_list(value, line);
            else if (key == "xi0") cfg.initial.xi0 = detail::parse_double(value, line);
            else if (key == "w0") cfg.initial.w0 = detail::parse_double(value, line);
            else if (key == "target_r_fraction")
                cfg.initial.target_r_fraction = detail::parse_double(value, line);
            else detail::config_fail(line, "unknown key '" + key + "' in [initial]");
        } else if (section == "stepping") {
            if (key == "t_end") cfg.stepping.t_end = detail::parse_double(value, line);
            else if (key == "dt_max") cfg.stepping.dt_max = detail::parse_double(value, line);
            else if (key == "cfl_safety") cfg.stepping.cfl_safety = detail::parse_double(value, line);
            else if (key == "output_stride") cfg.stepping.output_stride = detail::parse_int(value, line);
            else detail::config_fail(line, "unknown key '" + key + "' in [stepping]");
        } else if (section == "output") {
            if (key == "dir") cfg.out_dir = value;
            else detail::config_fail(line, "unknown key '" + key + "' in [output]");
        }
    }

    if (!has_L || !has_m || !has_Hmax)
        throw Error(Errc::config_error,
                    "tank geometry is mandatory: set L, m and H_max in [physical]");
    return cfg;
}

inline ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    SLOSH_REQUIRE(in.good(), Errc::config_error, "cannot read config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

/// A runnable scenario: validated inputs, resolved k, and the constructed
/// initial state with its certified radius r = V(0).
struct ResolvedScenario {
    PhysicalParams p;
    ControlGains gains;
    int n_cells = 0;
    InitialCondition ic;
    StepControls stepping;
    double R = 0.0;
    double theta_r = 0.0;
    std::string out_dir;

    Grid grid() const { return Grid(n_cells, p.L); }
};

/// Resolve a parsed scenario: validate parameters, fix `k = auto` by the
/// fixed point k = q theta(V(ic))/2 (the initial condition is rebuilt each
/// round because V depends on k through the tank terms), and build the final
/// initial state.
inline ResolvedScenario resolve_scenario(const ScenarioConfig& cfg) {
    ResolvedScenario out;
    out.p = validate_params(cfg.physical);
    out.gains = cfg.gains;
    out.n_cells = cfg.n_cells;
    out.stepping = validate_step_controls(cfg.stepping);
    out.out_dir = cfg.out_dir;
    const Grid grid(cfg.n_cells, cfg.physical.L);

    if (cfg.k_auto) {
        double k = 0.0;
        for (int it = 0; it < 50; ++it) {
            ControlGains trial = out.gains;
            trial.k = k;
            const InitialCondition ic = make_initial_condition(cfg.initial, out.p, trial, grid);
            const double next = 0.5 * out.gains.q * theta(ic.V, out.p, out.gains);
            if (std::abs(next - k) <= 1e-12 * std::max(next, 1e-30)) {
                k = next;
                break;
            }
            k = next;
        }
        out.gains.k = k;
    }

    validate_gain_positivity(out.gains);
    out.ic = make_initial_condition(cfg.initial, out.p, out.gains, grid);
    out.R = spill_radius(out.p, out.gains.delta).value;
    out.theta_r = theta(out.ic.V, out.p, out.gains);
    return out;
}

}  // namespace slosh
