#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "staotto/config.hpp"
#include "staotto/engine.hpp"

namespace staotto::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kNonEngine = 2,
    kMethodInvalid = 3,
    kIoError = 4,
};

/// One flat result row per (tau, method). Column order is fixed; floating
/// values are serialized with 12 significant digits; absent values are
/// emitted as empty cells.
struct OutputRecord {
    double tau = 0.0;
    Method method = Method::AD;
    double qstar1 = 1.0;
    double qstar3 = 1.0;
    double w1 = 0.0;
    double w3 = 0.0;
    double q2 = 0.0;
    std::optional<double> cost1;
    std::optional<double> cost3;
    std::optional<double> eta;
    double power = 0.0;
    bool engine_valid = false;
    bool method_valid = true;
};

OutputRecord make_record(double tau, Method method, const EnginePerformance& perf);

/// Fixed 12-significant-digit formatting ("0.680000000000").
std::string format_value(double value);

std::string record_header();
std::string record_row(const OutputRecord& record);

enum class CycleFormat { Csv, Json };

/// Runs one cycle and writes it as CSV (header + row) or as a JSON document
/// whose "config" object round-trips through the config parser.
/// Returns kOk / kNonEngine / kMethodInvalid.
int cmd_cycle(const CycleConfig& cfg, CycleFormat format, std::ostream& out);

/// Writes n_samples rows (t, s, omega, domega, ddomega, qstar, cost_density)
/// over the compression stroke. A CD trap inversion stops the rows at the
/// failure and appends a "# error: ..." trailer line (returns
/// kMethodInvalid).
int cmd_trace(const CycleConfig& cfg, int n_samples, std::ostream& out);

/// Every record of the sweep, sorted by tau then method name. Rows are
/// independent pure evaluations, so the result does not depend on the
/// worker count.
std::vector<OutputRecord> sweep_records(const CycleConfig& base, const SweepSpec& spec,
                                        int jobs);

/// Writes the full record table to out_path. Returns kOk or kIoError.
int cmd_sweep(const CycleConfig& base, const SweepSpec& spec, int jobs,
              const std::filesystem::path& out_path);

/// Writes only engine-valid, method-valid rows as (method, tau, eta, power)
/// for power-efficiency diagrams. Returns kNonEngine if no row qualifies.
int cmd_pareto(const CycleConfig& base, const SweepSpec& spec, int jobs,
               const std::filesystem::path& out_path);

}  // namespace staotto::cli
