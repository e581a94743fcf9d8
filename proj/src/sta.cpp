#include "staotto/sta.hpp"

#include <cmath>
#include <string>

#include "staotto/errors.hpp"

namespace staotto {
namespace {

constexpr int kCdScanIntervals = 4096;

// domega^2 / (4 omega^4), the expansion parameter of the CD drive.
double cd_ratio(const RampSample& smp) {
    const double w2 = smp.omega * smp.omega;
    return smp.domega * smp.domega / (4.0 * w2 * w2);
}

}  // namespace

const char* to_string(StaMethod method) {
    switch (method) {
        case StaMethod::CD: return "CD";
        case StaMethod::LCD: return "LCD";
        case StaMethod::IE: return "IE";
    }
    return "?";
}

double initial_mean_energy(double omega, double beta) {
    if (!(omega > 0.0)) throw DomainError("initial_mean_energy: omega must be > 0");
    if (!(beta > 0.0)) throw DomainError("initial_mean_energy: beta must be > 0");
    return 0.5 * omega / std::tanh(0.5 * beta * omega);
}

double effective_freq_cd(const RampSample& smp) {
    const double x = cd_ratio(smp);
    if (!(x < 1.0)) {
        throw TrapInversionError(
            "counterdiabatic drive: domega^2 >= 4 omega^4 at t = " + std::to_string(smp.t),
            smp.t);
    }
    return smp.omega * std::sqrt(1.0 - x);
}

double qstar_cd(const RampSample& smp) { return smp.omega / effective_freq_cd(smp); }

double qstar_lcd(const RampSample& smp) {
    return 1.0 - cd_ratio(smp) + smp.ddomega / (4.0 * smp.omega * smp.omega * smp.omega);
}

double qstar_ie(const RampSample& smp) { return 1.0 + 0.5 * cd_ratio(smp); }

double qstar(StaMethod method, const RampSample& smp) {
    switch (method) {
        case StaMethod::CD: return qstar_cd(smp);
        case StaMethod::LCD: return qstar_lcd(smp);
        case StaMethod::IE: return qstar_ie(smp);
    }
    throw DomainError("qstar: unknown method");
}

double lcd_freq_sq(const RampSample& smp) {
    const double w2 = smp.omega * smp.omega;
    return w2 - 3.0 * smp.domega * smp.domega / (4.0 * w2) + smp.ddomega / (2.0 * smp.omega);
}

double cost_density(StaMethod method, const RampSample& smp, double omega_init, double e0) {
    if (!(omega_init > 0.0)) throw DomainError("cost_density: omega_init must be > 0");
    if (!(e0 > 0.0)) throw DomainError("cost_density: e0 must be > 0");
    // <H_method> - <H_0> = (omega/omega_i) <H(0)> (Q* - 1) for all three drives
    return (smp.omega / omega_init) * e0 * (qstar(method, smp) - 1.0);
}

double time_avg_cost(StaMethod method, const RampSpec& ramp, double beta_init,
                     const QuadratureConfig& quad) {
    const double e0 = initial_mean_energy(ramp.omega_start, beta_init);
    if (method == StaMethod::CD) {
        for (int i = 0; i <= kCdScanIntervals; ++i) {
            const double t = ramp.tau * static_cast<double>(i) / kCdScanIntervals;
            const RampSample smp = eval_ramp(ramp, t);
            if (!(cd_ratio(smp) < 1.0)) {
                throw TrapInversionError(
                    "counterdiabatic drive: domega^2 >= 4 omega^4 at t = " + std::to_string(t),
                    t);
            }
        }
    }
    const double integral = quadrature(
        [&](double t) { return cost_density(method, eval_ramp(ramp, t), ramp.omega_start, e0); },
        ramp.tau, quad);
    return integral / ramp.tau;
}

CostProfile sample_cost_profile(StaMethod method, const RampSpec& ramp, double beta_init,
                                int n_samples, const QuadratureConfig& quad) {
    if (n_samples < 2) throw DomainError("sample_cost_profile: n_samples must be >= 2");
    CostProfile profile;
    profile.method = method;
    profile.beta_init = beta_init;
    profile.e0 = initial_mean_energy(ramp.omega_start, beta_init);
    profile.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = ramp.tau * static_cast<double>(i) / (n_samples - 1);
        const RampSample smp = eval_ramp(ramp, t);
        profile.samples.push_back(
            CostSample{t, qstar(method, smp), cost_density(method, smp, ramp.omega_start,
                                                           profile.e0)});
    }
    profile.time_avg_cost = time_avg_cost(method, ramp, beta_init, quad);
    return profile;
}

}  // namespace staotto
