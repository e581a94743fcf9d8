#include "staotto/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace staotto::cli {
namespace {

constexpr std::array<const char*, 12> kKnownKeys = {
    "omega1", "omega2", "beta1",   "beta2",   "tau",          "method",
    "tau_min", "tau_max", "n_points", "spacing", "quad_rel_tol", "ode_steps",
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const ConfigMap& map, const std::string& key) {
    const std::string& text = map.at(key);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
    }
    if (used != text.size())
        throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
    if (!std::isfinite(value))
        throw ConfigError("config key '" + key + "': value must be finite");
    return value;
}

int parse_int(const ConfigMap& map, const std::string& key) {
    const std::string& text = map.at(key);
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    }
    if (used != text.size() || value > std::numeric_limits<int>::max() ||
        value < std::numeric_limits<int>::min())
        throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    return static_cast<int>(value);
}

void require(const ConfigMap& map, const std::string& key) {
    if (!map.count(key)) throw ConfigError("missing config key '" + key + "'");
}

}  // namespace

bool is_known_key(const std::string& key) {
    return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

ConfigMap parse_config_stream(std::istream& in) {
    ConfigMap map;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        apply_override(map, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
    return map;
}

ConfigMap parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    return parse_config_stream(in);
}

void apply_override(ConfigMap& map, const std::string& key, const std::string& value) {
    if (!is_known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    if (value.empty()) throw ConfigError("config key '" + key + "': empty value");
    map[key] = value;
}

CycleConfig make_base_config(const ConfigMap& map) {
    for (const char* key : {"omega1", "omega2", "beta1", "beta2"}) require(map, key);

    CycleConfig cfg;
    cfg.omega1 = parse_double(map, "omega1");
    cfg.omega2 = parse_double(map, "omega2");
    cfg.baths.beta_cold = parse_double(map, "beta1");
    cfg.baths.beta_hot = parse_double(map, "beta2");
    if (!(cfg.omega1 > 0.0)) throw ConfigError("config key 'omega1': require omega1 > 0");
    if (!(cfg.omega2 > cfg.omega1))
        throw ConfigError("config key 'omega2': require omega2 > omega1");
    if (!(cfg.baths.beta_hot > 0.0)) throw ConfigError("config key 'beta2': require beta2 > 0");
    if (!(cfg.baths.beta_cold > cfg.baths.beta_hot))
        throw ConfigError("config key 'beta1': require beta1 > beta2");

    if (map.count("quad_rel_tol")) {
        cfg.numerics.quadrature.rel_tol = parse_double(map, "quad_rel_tol");
        if (!(cfg.numerics.quadrature.rel_tol > 0.0))
            throw ConfigError("config key 'quad_rel_tol': require a positive tolerance");
    }
    if (map.count("ode_steps")) {
        cfg.numerics.ode.n_steps = parse_int(map, "ode_steps");
        if (cfg.numerics.ode.n_steps < 16)
            throw ConfigError("config key 'ode_steps': require at least 16 steps");
    }
    return cfg;
}

CycleConfig make_cycle_config(const ConfigMap& map) {
    CycleConfig cfg = make_base_config(map);
    require(map, "tau");
    require(map, "method");
    cfg.tau = parse_double(map, "tau");
    if (!(cfg.tau > 0.0)) throw ConfigError("config key 'tau': require tau > 0");
    const auto method = parse_method(map.at("method"));
    if (!method)
        throw ConfigError("config key 'method': '" + map.at("method") +
                          "' is not one of AD, NA, CD, LCD, IE");
    cfg.method = *method;
    return cfg;
}

SweepSpec make_sweep_spec(const ConfigMap& map, const std::vector<Method>& default_methods) {
    SweepSpec spec;
    if (map.count("tau_min")) spec.tau_min = parse_double(map, "tau_min");
    if (map.count("tau_max")) spec.tau_max = parse_double(map, "tau_max");
    if (map.count("n_points")) spec.n_points = parse_int(map, "n_points");
    if (!(spec.tau_min > 0.0)) throw ConfigError("config key 'tau_min': require tau_min > 0");
    if (!(spec.tau_max > spec.tau_min))
        throw ConfigError("config key 'tau_max': require tau_max > tau_min");
    if (spec.n_points < 2) throw ConfigError("config key 'n_points': require n_points >= 2");

    if (map.count("spacing")) {
        const std::string& text = map.at("spacing");
        if (text == "linear") spec.spacing = Spacing::Linear;
        else if (text == "log") spec.spacing = Spacing::Log;
        else throw ConfigError("config key 'spacing': '" + text + "' is not linear or log");
    }

    if (map.count("method")) {
        std::stringstream list(map.at("method"));
        std::string item;
        while (std::getline(list, item, ',')) {
            const std::string name = trim(item);
            const auto method = parse_method(name);
            if (!method)
                throw ConfigError("config key 'method': '" + name +
                                  "' is not one of AD, NA, CD, LCD, IE");
            if (std::find(spec.methods.begin(), spec.methods.end(), *method) ==
                spec.methods.end())
                spec.methods.push_back(*method);
        }
        if (spec.methods.empty())
            throw ConfigError("config key 'method': empty method list");
    } else {
        spec.methods = default_methods;
    }
    std::sort(spec.methods.begin(), spec.methods.end(), [](Method a, Method b) {
        return std::string_view(to_string(a)) < std::string_view(to_string(b));
    });
    return spec;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    std::vector<double> grid;
    grid.reserve(spec.n_points);
    const int n = spec.n_points;
    for (int i = 0; i < n; ++i) {
        const double frac = static_cast<double>(i) / (n - 1);
        if (spec.spacing == Spacing::Linear) {
            grid.push_back(spec.tau_min + (spec.tau_max - spec.tau_min) * frac);
        } else {
            grid.push_back(spec.tau_min * std::pow(spec.tau_max / spec.tau_min, frac));
        }
    }
    return grid;
}

}  // namespace staotto::cli
