#pragma once

#include <vector>

#include "staotto/dynamics.hpp"
#include "staotto/ramp.hpp"

namespace staotto {

/// The three shortcut drivings. Every qstar/cost operation below is defined
/// for each variant.
enum class StaMethod { CD, LCD, IE };

const char* to_string(StaMethod method);

/// Mean energy (omega/2) coth(beta omega / 2) of a thermal oscillator state;
/// always above the ground-state energy omega/2. Throws DomainError for
/// non-positive inputs.
double initial_mean_energy(double omega, double beta);

/// Effective frequency Omega = omega sqrt(1 - domega^2 / (4 omega^4)) of the
/// counterdiabatic drive; defined only while domega^2 < 4 omega^4, else
/// throws TrapInversionError with the offending time.
double effective_freq_cd(const RampSample& sample);

/// omega / Omega, >= 1; equals 1 iff domega = 0.
double qstar_cd(const RampSample& sample);

/// 1 - domega^2/(4 omega^4) + ddomega/(4 omega^3); may dip below 1.
double qstar_lcd(const RampSample& sample);

/// 1 + domega^2/(8 omega^4), >= 1.
double qstar_ie(const RampSample& sample);

double qstar(StaMethod method, const RampSample& sample);

/// Modified squared frequency of the local counterdiabatic drive,
/// omega^2 - 3 domega^2/(4 omega^2) + ddomega/(2 omega). The sign is
/// reported, never raised: callers mark protocols invalid where it is <= 0.
double lcd_freq_sq(const RampSample& sample);

/// Instantaneous mean energy of the shortcut driving term,
/// (omega/omega_init) * e0 * (Q*_method - 1), where e0 is the mean energy of
/// the thermal state at the stroke start. CD and IE densities are >= 0; the
/// LCD density may be negative at intermediate times and is not clamped.
double cost_density(StaMethod method, const RampSample& sample, double omega_init, double e0);

/// Time average (1/tau) of the cost density over the stroke. For CD the
/// ramp is pre-scanned on a 4096-interval grid and the first invalid time is
/// reported via TrapInversionError.
double time_avg_cost(StaMethod method, const RampSpec& ramp, double beta_init,
                     const QuadratureConfig& quad);

struct CostSample {
    double t = 0.0;
    double qstar = 1.0;
    double cost_density = 0.0;
};

/// Sampled Q*(t) and cost profile of one shortcut drive over a stroke.
struct CostProfile {
    StaMethod method = StaMethod::CD;
    double beta_init = 0.0;
    double e0 = 0.0;
    std::vector<CostSample> samples;
    double time_avg_cost = 0.0;
};

/// Evaluates the profile on n_samples evenly spaced times (endpoints
/// included, n_samples >= 2) plus the time-averaged cost.
CostProfile sample_cost_profile(StaMethod method, const RampSpec& ramp, double beta_init,
                                int n_samples, const QuadratureConfig& quad);

}  // namespace staotto
