// slosh-clf: closed-loop tank-sloshing simulator and certificate checker.
//
// Subcommands:
//   simulate <config> [--profiles] [--out DIR]   run + certify one scenario
//   analyze  <config> [--csv]                    print the certificate table
//   sweep    <config> --param NAME --values LIST [--jobs K] [--out DIR]
//
// Exit codes: 0 ok, 1 certificate failure, 2 config error, 3 gain-condition
// refusal, 4 blow-up.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "slosh/config.hpp"
#include "slosh/trace_io.hpp"

namespace fs = std::filesystem;
using namespace slosh;

namespace {

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case Errc::gain_condition:
        case Errc::certificate_domain:
            return 3;
        case Errc::positivity_lost:
        case Errc::mass_mismatch:
        case Errc::nonpositive_level:
        case Errc::boundary_velocity:
            return 4;
        default:
            return 2;
    }
}

struct RunOutput {
    int exit_status = 0;
    CertificateReport report;
    SimTrace trace;
};

RunOutput run_scenario(const ResolvedScenario& sc, bool profiles, const std::string& out_dir) {
    RunOutput out;
    const Grid grid = sc.grid();
    RunOptions opts;
    opts.record_profiles = profiles;
    out.trace = run_simulation(sc.ic, sc.p, sc.gains, grid, sc.stepping, opts);
    out.report = certify(out.trace, sc.p, sc.gains, grid);

    fs::create_directories(out_dir);
    write_trace_csv(out_dir + "/trace.csv", out.trace);
    write_certificates_txt(out_dir + "/certificates.txt", out.report, out.trace);
    if (profiles) write_profiles_csv(out_dir + "/profiles.csv", out.trace, grid);

    out.exit_status = out.report.all_pass ? 0 : 1;
    return out;
}

int cmd_simulate(const std::string& config_path, bool profiles, std::string out_override) {
    ScenarioConfig cfg = load_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;
    const ResolvedScenario sc = resolve_scenario(cfg);
    const RunOutput run = run_scenario(sc, profiles, cfg.out_dir);
    write_certificates_txt(std::cout, run.report, run.trace);
    std::cout << "trace: " << cfg.out_dir << "/trace.csv ("
              << run.trace.samples.size() << " samples, dt = " << run.trace.dt << ")\n";
    return run.exit_status;
}

int cmd_analyze(const std::string& config_path, bool csv) {
    const ScenarioConfig cfg = load_config_file(config_path);
    const ResolvedScenario sc = resolve_scenario(cfg);
    if (csv)
        write_analyze_csv(std::cout, sc);
    else
        write_analyze_text(std::cout, sc);
    return 0;
}

void set_sweep_param(ScenarioConfig& cfg, const std::string& name, double value) {
    if (name == "g") cfg.physical.g = value;
    else if (name == "mu") cfg.physical.mu = value;
    else if (name == "sigma") cfg.physical.sigma = value;
    else if (name == "L") cfg.physical.L = value;
    else if (name == "m") cfg.physical.m = value;
    else if (name == "H_max") cfg.physical.H_max = value;
    else if (name == "omega") cfg.gains.omega = value;
    else if (name == "q") cfg.gains.q = value;
    else if (name == "delta") cfg.gains.delta = value;
    else if (name == "k") { cfg.gains.k = value; cfg.k_auto = false; }
    else if (name == "n_cells") cfg.n_cells = static_cast<int>(value);
    else if (name == "t_end") cfg.stepping.t_end = value;
    else if (name == "cfl_safety") cfg.stepping.cfl_safety = value;
    else if (name == "target_r_fraction") cfg.initial.target_r_fraction = value;
    else if (name == "xi0") cfg.initial.xi0 = value;
    else if (name == "w0") cfg.initial.w0 = value;
    else throw Error(Errc::config_error, "unknown sweep parameter '" + name + "'");
}

std::string value_tag(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::string& values_csv, int jobs, std::string out_override) {
    const ScenarioConfig base = load_config_file(config_path);
    const std::string out_dir = out_override.empty() ? base.out_dir : out_override;

    std::vector<double> values;
    {
        std::stringstream ss(values_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::string trimmed = slosh::detail::trim(item);
            if (!trimmed.empty()) values.push_back(std::stod(trimmed));
        }
    }
    SLOSH_REQUIRE(!values.empty(), Errc::config_error, "sweep value grid is empty");

    std::vector<ScenarioConfig> configs;
    for (double value : values) {
        ScenarioConfig cfg = base;
        set_sweep_param(cfg, param, value);
        configs.push_back(cfg);
    }

    // `k = auto` across a sweep resolves to one shared gain: the smallest of
    // the per-run auto values, re-checked (and halved if necessary) against
    // every run's own gain condition, so all runs use identical gains. Grid
    // points whose scenario is invalid are skipped here and recorded as
    // failed runs below.
    if (base.k_auto && param != "k") {
        double k_shared = std::numeric_limits<double>::infinity();
        for (const auto& cfg : configs) {
            try {
                k_shared = std::min(k_shared, resolve_scenario(cfg).gains.k);
            } catch (const Error&) {
            }
        }
        if (std::isfinite(k_shared)) {
            for (int round = 0; round < 8; ++round) {
                bool ok = true;
                for (auto& cfg : configs) {
                    cfg.gains.k = k_shared;
                    cfg.k_auto = false;
                    try {
                        const ResolvedScenario sc = resolve_scenario(cfg);
                        ok = ok && validate_gains(sc.p, sc.gains, sc.ic.V).pass;
                    } catch (const Error&) {
                    }
                }
                if (ok) break;
                k_shared *= 0.5;
            }
        }
    }

    std::vector<SweepRow> rows(values.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= values.size()) return;
            SweepRow row;
            row.value = values[idx];
            const std::string run_dir = out_dir + "/" + param + "=" + value_tag(values[idx]);
            try {
                const ResolvedScenario sc = resolve_scenario(configs[idx]);
                const RunOutput run = run_scenario(sc, false, run_dir);
                row.exit_status = run.exit_status;
                row.lambda_V = run.trace.lambda_V;
                row.lambda_emp = run.report.fit.applicable ? run.report.fit.lambda_emp : 0.0;
                row.worst_margin = std::numeric_limits<double>::infinity();
                for (const auto& e : run.report.entries)
                    row.worst_margin = std::min(row.worst_margin, e.margin);
            } catch (const Error& err) {
                row.exit_status = exit_code_for(err);
                std::lock_guard<std::mutex> lock(log_mutex);
                std::cerr << param << " = " << values[idx] << ": " << err.what() << "\n";
            }
            rows[idx] = row;
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    fs::create_directories(out_dir);
    write_sweep_summary_csv(out_dir + "/sweep_summary.csv", param, rows);

    bool all_ok = true;
    for (const auto& row : rows) {
        std::cout << param << " = " << value_tag(row.value) << "  exit " << row.exit_status
                  << "  lambda_emp = " << row.lambda_emp << "  lambda_V = " << row.lambda_V
                  << "\n";
        all_ok = all_ok && row.exit_status == 0;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"viscous tank-sloshing simulator with CLF certificates"};
    app.require_subcommand(1);

    std::string config_path, out_dir, param, values_csv;
    bool profiles = false, csv = false;
    int jobs = 1;

    auto* simulate = app.add_subcommand("simulate", "run a scenario and check its certificates");
    simulate->add_option("config", config_path, "scenario file")->required();
    simulate->add_flag("--profiles", profiles, "also write profiles.csv");
    simulate->add_option("--out", out_dir, "output directory (overrides the config)");

    auto* analyze = app.add_subcommand("analyze", "print the certificate table without simulating");
    analyze->add_option("config", config_path, "scenario file")->required();
    analyze->add_flag("--csv", csv, "machine-readable output");

    auto* sweep = app.add_subcommand("sweep", "run one scenario per parameter value");
    sweep->add_option("config", config_path, "scenario file")->required();
    sweep->add_option("--param", param, "parameter name (e.g. sigma)")->required();
    sweep->add_option("--values", values_csv, "comma-separated value list")->required();
    sweep->add_option("--jobs", jobs, "concurrent runs");
    sweep->add_option("--out", out_dir, "output directory (overrides the config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(config_path, profiles, out_dir);
        if (analyze->parsed()) return cmd_analyze(config_path, csv);
        if (sweep->parsed()) return cmd_sweep(config_path, param, values_csv, jobs, out_dir);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
