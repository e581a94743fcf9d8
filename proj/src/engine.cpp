#include "staotto/engine.hpp"

#include <cmath>

#include "staotto/errors.hpp"

namespace staotto {
namespace {

constexpr int kValidityScanIntervals = 4096;

double coth(double x) { return 1.0 / std::tanh(x); }

bool cd_applies(const RampSpec& ramp) {
    for (int i = 0; i <= kValidityScanIntervals; ++i) {
        const RampSample smp =
            eval_ramp(ramp, ramp.tau * static_cast<double>(i) / kValidityScanIntervals);
        const double w2 = smp.omega * smp.omega;
        if (!(smp.domega * smp.domega < 4.0 * w2 * w2)) return false;
    }
    return true;
}

bool lcd_applies(const RampSpec& ramp) {
    for (int i = 0; i <= kValidityScanIntervals; ++i) {
        const RampSample smp =
            eval_ramp(ramp, ramp.tau * static_cast<double>(i) / kValidityScanIntervals);
        if (!(lcd_freq_sq(smp) > 0.0)) return false;
    }
    return true;
}

bool method_applies(StaMethod method, const RampSpec& comp, const RampSpec& expn,
                    const CycleConfig& cfg) {
    switch (method) {
        case StaMethod::CD:
            return cd_applies(comp) && cd_applies(expn);
        case StaMethod::LCD:
            return lcd_applies(comp) && lcd_applies(expn);
        case StaMethod::IE:
            // trap non-inversion bound of the designed protocol, taken at the
            // compression target frequency
            return cfg.tau > 0.5 / cfg.omega2;
    }
    return false;
}

}  // namespace

const char* to_string(Method method) {
    switch (method) {
        case Method::AD: return "AD";
        case Method::NA: return "NA";
        case Method::CD: return "CD";
        case Method::LCD: return "LCD";
        case Method::IE: return "IE";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "AD") return Method::AD;
    if (name == "NA") return Method::NA;
    if (name == "CD") return Method::CD;
    if (name == "LCD") return Method::LCD;
    if (name == "IE") return Method::IE;
    return std::nullopt;
}

std::optional<StaMethod> sta_method(Method method) {
    switch (method) {
        case Method::CD: return StaMethod::CD;
        case Method::LCD: return StaMethod::LCD;
        case Method::IE: return StaMethod::IE;
        default: return std::nullopt;
    }
}

void validate_cycle_config(const CycleConfig& cfg) {
    if (!(cfg.omega1 > 0.0)) throw DomainError("cycle config: require omega1 > 0");
    if (!(cfg.omega2 > cfg.omega1)) throw DomainError("cycle config: require omega2 > omega1");
    if (!(cfg.baths.beta_hot > 0.0)) throw DomainError("cycle config: require beta2 > 0");
    if (!(cfg.baths.beta_cold > cfg.baths.beta_hot))
        throw DomainError("cycle config: require beta1 > beta2");
    if (!(cfg.tau > 0.0)) throw DomainError("cycle config: require tau > 0");
}

double stroke_work_compression(double omega1, double omega2, double beta1, double qstar) {
    return 0.5 * (omega2 * qstar - omega1) * coth(0.5 * beta1 * omega1);
}

double stroke_work_expansion(double omega1, double omega2, double beta2, double qstar) {
    return 0.5 * (omega1 * qstar - omega2) * coth(0.5 * beta2 * omega2);
}

double isochore_heat(double omega2, const BathPair& baths, double omega1, double qstar1) {
    return 0.5 * omega2 *
           (coth(0.5 * baths.beta_hot * omega2) - qstar1 * coth(0.5 * baths.beta_cold * omega1));
}

std::optional<double> efficiency_sta(double w1_ad, double w3_ad, double q2_ad, double cost1,
                                     double cost3) {
    const double input = q2_ad + cost1 + cost3;
    if (!(w1_ad + w3_ad < 0.0) || !(input > 0.0)) return std::nullopt;
    return -(w1_ad + w3_ad) / input;
}

std::optional<double> efficiency_na(double w1, double w3, double q2) {
    return efficiency_sta(w1, w3, q2, 0.0, 0.0);
}

double power(double w1, double w3, double tau) { return -(w1 + w3) / (2.0 * tau); }

EnginePerformance run_cycle(const CycleConfig& cfg) {
    validate_cycle_config(cfg);
    const RampSpec comp = make_quintic_ramp(cfg.omega1, cfg.omega2, cfg.tau);
    const RampSpec expn = reverse_ramp(comp);

    StrokeReport s1, s3;
    if (cfg.method == Method::NA) {
        s1.qstar = qstar_na(comp, cfg.numerics.ode);
        s3.qstar = qstar_na(expn, cfg.numerics.ode);
    }
    s1.work = stroke_work_compression(cfg.omega1, cfg.omega2, cfg.baths.beta_cold, s1.qstar);
    s3.work = stroke_work_expansion(cfg.omega1, cfg.omega2, cfg.baths.beta_hot, s3.qstar);

    EnginePerformance perf;
    perf.q2 = isochore_heat(cfg.omega2, cfg.baths, cfg.omega1, s1.qstar);

    if (const auto sta = sta_method(cfg.method)) {
        perf.method_valid = method_applies(*sta, comp, expn, cfg);
        if (perf.method_valid) {
            try {
                s1.avg_cost = time_avg_cost(*sta, comp, cfg.baths.beta_cold,
                                            cfg.numerics.quadrature);
                s3.avg_cost = time_avg_cost(*sta, expn, cfg.baths.beta_hot,
                                            cfg.numerics.quadrature);
                perf.eta = efficiency_sta(s1.work, s3.work, perf.q2, *s1.avg_cost, *s3.avg_cost);
            } catch (const TrapInversionError&) {
                // the 4096-point applicability scan can miss a sliver
                s1.avg_cost.reset();
                s3.avg_cost.reset();
                perf.method_valid = false;
            }
        }
    } else {
        s1.avg_cost = 0.0;
        s3.avg_cost = 0.0;
        perf.eta = efficiency_na(s1.work, s3.work, perf.q2);
    }

    perf.w1 = s1.work;
    perf.w3 = s3.work;
    perf.qstar1 = s1.qstar;
    perf.qstar3 = s3.qstar;
    perf.cost1 = s1.avg_cost;
    perf.cost3 = s3.avg_cost;
    perf.power = power(s1.work, s3.work, cfg.tau);
    perf.engine_valid = s1.work + s3.work < 0.0 && perf.q2 > 0.0;
    return perf;
}

}  // namespace staotto
