#include "staotto/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "staotto/errors.hpp"

namespace staotto::cli {
namespace {

const char* kRecordHeader =
    "tau,method,qstar1,qstar3,w1,w3,q2,cost1,cost3,eta,power,engine_valid,method_valid";

std::string format_optional(const std::optional<double>& value) {
    return value ? format_value(*value) : std::string();
}

const char* bool_name(bool v) { return v ? "true" : "false"; }

int exit_code_for(const EnginePerformance& perf) {
    if (!perf.method_valid) return kMethodInvalid;
    if (!perf.engine_valid) return kNonEngine;
    return kOk;
}

nlohmann::json config_json(const CycleConfig& cfg) {
    return nlohmann::json{
        {"omega1", cfg.omega1},
        {"omega2", cfg.omega2},
        {"beta1", cfg.baths.beta_cold},
        {"beta2", cfg.baths.beta_hot},
        {"tau", cfg.tau},
        {"method", to_string(cfg.method)},
        {"quad_rel_tol", cfg.numerics.quadrature.rel_tol},
        {"ode_steps", cfg.numerics.ode.n_steps},
    };
}

nlohmann::json record_json(const OutputRecord& r) {
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json();
    };
    return nlohmann::json{
        {"tau", r.tau},           {"method", to_string(r.method)},
        {"qstar1", r.qstar1},     {"qstar3", r.qstar3},
        {"w1", r.w1},             {"w3", r.w3},
        {"q2", r.q2},             {"cost1", opt(r.cost1)},
        {"cost3", opt(r.cost3)},  {"eta", opt(r.eta)},
        {"power", r.power},       {"engine_valid", r.engine_valid},
        {"method_valid", r.method_valid},
    };
}

// Worker pool over the (tau, method) grid; each row is a pure evaluation
// stored at its own index, so the output is identical for any job count.
std::vector<OutputRecord> compute_records(const CycleConfig& base,
                                          const std::vector<double>& taus,
                                          const std::vector<Method>& methods, int jobs) {
    struct Task {
        double tau;
        Method method;
    };
    std::vector<Task> tasks;
    tasks.reserve(taus.size() * methods.size());
    for (double tau : taus)
        for (Method method : methods) tasks.push_back(Task{tau, method});

    std::vector<OutputRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                CycleConfig cfg = base;
                cfg.tau = tasks[i].tau;
                cfg.method = tasks[i].method;
                records[i] = make_record(cfg.tau, cfg.method, run_cycle(cfg));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int n_workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

}  // namespace

OutputRecord make_record(double tau, Method method, const EnginePerformance& perf) {
    OutputRecord r;
    r.tau = tau;
    r.method = method;
    r.qstar1 = perf.qstar1;
    r.qstar3 = perf.qstar3;
    r.w1 = perf.w1;
    r.w3 = perf.w3;
    r.q2 = perf.q2;
    r.cost1 = perf.cost1;
    r.cost3 = perf.cost3;
    r.eta = perf.eta;
    r.power = perf.power;
    r.engine_valid = perf.engine_valid;
    r.method_valid = perf.method_valid;
    return r;
}

std::string format_value(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.12g", value);
    return buf;
}

std::string record_header() { return kRecordHeader; }

std::string record_row(const OutputRecord& r) {
    std::string row = format_value(r.tau);
    row += ',';
    row += to_string(r.method);
    for (double v : {r.qstar1, r.qstar3, r.w1, r.w3, r.q2}) {
        row += ',';
        row += format_value(v);
    }
    for (const auto& v : {r.cost1, r.cost3, r.eta}) {
        row += ',';
        row += format_optional(v);
    }
    row += ',';
    row += format_value(r.power);
    row += ',';
    row += bool_name(r.engine_valid);
    row += ',';
    row += bool_name(r.method_valid);
    return row;
}

int cmd_cycle(const CycleConfig& cfg, CycleFormat format, std::ostream& out) {
    const EnginePerformance perf = run_cycle(cfg);
    const OutputRecord record = make_record(cfg.tau, cfg.method, perf);
    if (format == CycleFormat::Csv) {
        out << record_header() << '\n' << record_row(record) << '\n';
    } else {
        const nlohmann::json doc{{"config", config_json(cfg)}, {"result", record_json(record)}};
        out << doc.dump(2) << '\n';
    }
    return exit_code_for(perf);
}

int cmd_trace(const CycleConfig& cfg, int n_samples, std::ostream& out) {
    validate_cycle_config(cfg);
    if (n_samples < 2) throw DomainError("trace: n_samples must be >= 2");

    const RampSpec ramp = make_quintic_ramp(cfg.omega1, cfg.omega2, cfg.tau);
    out << "t,s,omega,domega,ddomega,qstar,cost_density\n";

    const auto sta = sta_method(cfg.method);
    const double e0 =
        sta ? initial_mean_energy(cfg.omega1, cfg.baths.beta_cold) : 0.0;
    std::vector<OscillatorState> states;
    if (cfg.method == Method::NA)
        states = oscillator_checkpoints(ramp, cfg.numerics.ode.n_steps, n_samples);

    for (int i = 0; i < n_samples; ++i) {
        const double t = cfg.tau * static_cast<double>(i) / (n_samples - 1);
        const RampSample smp = eval_ramp(ramp, t);
        double q = 1.0, cost = 0.0;
        if (sta) {
            try {
                q = qstar(*sta, smp);
                cost = cost_density(*sta, smp, cfg.omega1, e0);
            } catch (const TrapInversionError& e) {
                out << "# error: trap inversion at t = " << format_value(e.time()) << '\n';
                return kMethodInvalid;
            }
        } else if (cfg.method == Method::NA) {
            q = qstar_from_state(states[i], cfg.omega1, smp.omega);
        }
        out << format_value(t) << ',' << format_value(smp.s) << ',' << format_value(smp.omega)
            << ',' << format_value(smp.domega) << ',' << format_value(smp.ddomega) << ','
            << format_value(q) << ',' << format_value(cost) << '\n';
    }
    return kOk;
}

std::vector<OutputRecord> sweep_records(const CycleConfig& base, const SweepSpec& spec,
                                        int jobs) {
    return compute_records(base, sweep_grid(spec), spec.methods, jobs);
}

int cmd_sweep(const CycleConfig& base, const SweepSpec& spec, int jobs,
              const std::filesystem::path& out_path) {
    const std::vector<OutputRecord> records = sweep_records(base, spec, jobs);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return kIoError;
    out << record_header() << '\n';
    for (const OutputRecord& r : records) out << record_row(r) << '\n';
    out.flush();
    return out.good() ? kOk : kIoError;
}

int cmd_pareto(const CycleConfig& base, const SweepSpec& spec, int jobs,
               const std::filesystem::path& out_path) {
    const std::vector<OutputRecord> records = sweep_records(base, spec, jobs);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return kIoError;
    out << "method,tau,eta,power\n";
    int emitted = 0;
    for (const OutputRecord& r : records) {
        if (!r.engine_valid || !r.method_valid || !r.eta) continue;
        out << to_string(r.method) << ',' << format_value(r.tau) << ',' << format_value(*r.eta)
            << ',' << format_value(r.power) << '\n';
        ++emitted;
    }
    out.flush();
    if (!out.good()) return kIoError;
    return emitted > 0 ? kOk : kNonEngine;
}

}  // namespace staotto::cli
