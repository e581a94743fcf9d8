#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "staotto/engine.hpp"

namespace staotto::cli {

/// Bad key, bad value, missing required key, or unreadable file. Maps to
/// exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` configuration. Later assignments win, so CLI flags are
/// applied as overrides on top of the file contents.
using ConfigMap = std::map<std::string, std::string>;

/// Recognized keys: omega1, omega2, beta1, beta2, tau, method, tau_min,
/// tau_max, n_points, spacing, quad_rel_tol, ode_steps.
bool is_known_key(const std::string& key);

/// Parses `key = value` lines; '#' starts a comment, blank lines are
/// skipped. Throws ConfigError on syntax errors or unknown keys.
ConfigMap parse_config_stream(std::istream& in);
ConfigMap parse_config_file(const std::filesystem::path& path);

/// Sets map[key] = value after validating the key name.
void apply_override(ConfigMap& map, const std::string& key, const std::string& value);

/// Common engine parameters (omega1, omega2, beta1, beta2 required;
/// quad_rel_tol and ode_steps default to 1e-10 and 4096). The returned
/// config carries tau = 0 / method = AD placeholders for sweep use.
CycleConfig make_base_config(const ConfigMap& map);

/// Base config plus the required tau and method keys, for single-cycle and
/// trace commands.
CycleConfig make_cycle_config(const ConfigMap& map);

enum class Spacing { Linear, Log };

/// Grid of stroke durations and the method set swept over it.
struct SweepSpec {
    double tau_min = 0.5;
    double tau_max = 50.0;
    int n_points = 40;
    Spacing spacing = Spacing::Log;
    std::vector<Method> methods;  // emitted in this order per tau
};

/// Sweep parameters from the map; absent keys fall back to the defaults
/// above with `default_methods` (the `method` key accepts a comma-separated
/// list here). Methods are stored sorted by name.
SweepSpec make_sweep_spec(const ConfigMap& map, const std::vector<Method>& default_methods);

/// tau_min, then n_points - 1 further durations up to tau_max inclusive;
/// log spacing is a geometric progression.
std::vector<double> sweep_grid(const SweepSpec& spec);

}  // namespace staotto::cli
