#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "staotto/cli.hpp"
#include "staotto/config.hpp"
#include "staotto/errors.hpp"

namespace {

using staotto::cli::ConfigMap;

struct CommonFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> omega1, omega2, beta1, beta2, tau, method;
    std::optional<std::string> tau_min, tau_max, n_points, spacing;
    std::optional<std::string> quad_rel_tol, ode_steps;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key = value configuration file");
    cmd->add_option("--omega1", flags.omega1, "lower stroke frequency");
    cmd->add_option("--omega2", flags.omega2, "upper stroke frequency (> omega1)");
    cmd->add_option("--beta1", flags.beta1, "cold-bath inverse temperature (> beta2)");
    cmd->add_option("--beta2", flags.beta2, "hot-bath inverse temperature");
    cmd->add_option("--tau", flags.tau, "per-stroke duration (cycle time is 2 tau)");
    cmd->add_option("--method", flags.method,
                    "AD, NA, CD, LCD or IE; sweep/pareto accept a comma list");
    cmd->add_option("--tau_min", flags.tau_min, "sweep lower bound (default 0.5)");
    cmd->add_option("--tau_max", flags.tau_max, "sweep upper bound (default 50)");
    cmd->add_option("--n_points", flags.n_points, "sweep point count (default 40)");
    cmd->add_option("--spacing", flags.spacing, "sweep spacing: log (default) or linear");
    cmd->add_option("--quad_rel_tol", flags.quad_rel_tol,
                    "quadrature relative tolerance (default 1e-10)");
    cmd->add_option("--ode_steps", flags.ode_steps, "fixed RK4 step count (default 4096)");
}

// Config file first, then every flag that was actually passed.
ConfigMap resolve(const CommonFlags& flags) {
    ConfigMap map;
    if (flags.config_path) map = staotto::cli::parse_config_file(*flags.config_path);
    auto set = [&map](const char* key, const std::optional<std::string>& value) {
        if (value) staotto::cli::apply_override(map, key, *value);
    };
    set("omega1", flags.omega1);
    set("omega2", flags.omega2);
    set("beta1", flags.beta1);
    set("beta2", flags.beta2);
    set("tau", flags.tau);
    set("method", flags.method);
    set("tau_min", flags.tau_min);
    set("tau_max", flags.tau_max);
    set("n_points", flags.n_points);
    set("spacing", flags.spacing);
    set("quad_rel_tol", flags.quad_rel_tol);
    set("ode_steps", flags.ode_steps);
    return map;
}

int with_output_stream(const std::optional<std::string>& path,
                       const std::function<int(std::ostream&)>& body) {
    if (!path) return body(std::cout);
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << *path << "'\n";
        return staotto::cli::kIoError;
    }
    const int code = body(out);
    out.flush();
    if (!out.good()) {
        std::cerr << "error: write failed for '" << *path << "'\n";
        return staotto::cli::kIoError;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-time quantum Otto engine with shortcut-to-adiabaticity driving"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::optional<std::string> out_path;
    std::string sweep_out;
    std::string format = "csv";
    int n_samples = 201;
    int jobs = 1;

    CLI::App* trace = app.add_subcommand(
        "trace", "Q*(t) and cost-density profile of the compression stroke (CSV)");
    add_common_flags(trace, flags);
    trace->add_option("--samples", n_samples, "number of rows (default 201)")
        ->check(CLI::Range(2, 100000000));
    trace->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* cycle = app.add_subcommand("cycle", "single-cycle performance record");
    add_common_flags(cycle, flags);
    cycle->add_option("--format", format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cycle->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "record table over a tau grid (CSV file)");
    add_common_flags(sweep, flags);
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    sweep->add_option("--jobs", jobs, "worker threads (default 1)")->check(CLI::Range(1, 1024));

    CLI::App* pareto = app.add_subcommand(
        "pareto", "power-efficiency rows of the valid sweep points (CSV file)");
    add_common_flags(pareto, flags);
    pareto->add_option("--out", sweep_out, "output CSV path")->required();
    pareto->add_option("--jobs", jobs, "worker threads (default 1)")->check(CLI::Range(1, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return staotto::cli::kConfigError;
    }

    try {
        const ConfigMap map = resolve(flags);
        if (trace->parsed()) {
            const staotto::CycleConfig cfg = staotto::cli::make_cycle_config(map);
            return with_output_stream(
                out_path, [&](std::ostream& out) { return staotto::cli::cmd_trace(cfg, n_samples, out); });
        }
        if (cycle->parsed()) {
            const staotto::CycleConfig cfg = staotto::cli::make_cycle_config(map);
            const auto fmt = format == "json" ? staotto::cli::CycleFormat::Json
                                              : staotto::cli::CycleFormat::Csv;
            return with_output_stream(
                out_path, [&](std::ostream& out) { return staotto::cli::cmd_cycle(cfg, fmt, out); });
        }
        const staotto::CycleConfig base = staotto::cli::make_base_config(map);
        using staotto::Method;
        if (sweep->parsed()) {
            const auto spec = staotto::cli::make_sweep_spec(
                map, {Method::AD, Method::NA, Method::CD, Method::LCD, Method::IE});
            return staotto::cli::cmd_sweep(base, spec, jobs, sweep_out);
        }
        const auto spec = staotto::cli::make_sweep_spec(
            map, {Method::NA, Method::CD, Method::LCD, Method::IE});
        return staotto::cli::cmd_pareto(base, spec, jobs, sweep_out);
    } catch (const staotto::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return staotto::cli::kConfigError;
    } catch (const staotto::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return staotto::cli::kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return staotto::cli::kConfigError;
    }
}
