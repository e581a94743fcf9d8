#pragma once

#include <optional>
#include <string_view>

#include "staotto/dynamics.hpp"
#include "staotto/sta.hpp"

namespace staotto {

/// Inverse temperatures of the two reservoirs; the cold bath is the one with
/// the larger beta (beta_cold > beta_hot > 0).
struct BathPair {
    double beta_cold = 0.0;  // beta_1
    double beta_hot = 0.0;   // beta_2
};

/// Accounting mode of a cycle: the plain adiabatic and nonadiabatic
/// baselines, or one of the three shortcut drives.
enum class Method { AD, NA, CD, LCD, IE };

const char* to_string(Method method);
std::optional<Method> parse_method(std::string_view name);
/// The shortcut variant behind a Method, or nullopt for AD/NA.
std::optional<StaMethod> sta_method(Method method);

struct Numerics {
    QuadratureConfig quadrature;
    OdeConfig ode;
};

/// Full engine parameterization: frequency endpoints (omega2 > omega1 > 0),
/// baths, per-stroke duration tau (cycle time 2 tau), accounting method and
/// numerical tolerances.
struct CycleConfig {
    double omega1 = 0.0;
    double omega2 = 0.0;
    BathPair baths;
    double tau = 0.0;
    Method method = Method::AD;
    Numerics numerics;
};

/// Throws DomainError naming the offending field if the config violates its
/// invariants.
void validate_cycle_config(const CycleConfig& cfg);

/// Per-stroke accounting: adiabaticity parameter at the stroke end, work
/// performed on the medium, and the time-averaged shortcut driving cost
/// (absent when the shortcut does not apply).
struct StrokeReport {
    double qstar = 1.0;
    double work = 0.0;
    std::optional<double> avg_cost;
};

/// Works, heat, costs and figures of merit of one full cycle.
/// engine_valid <=> produced work is negative (w1 + w3 < 0) and absorbed
/// heat positive (q2 > 0). method_valid marks whether the shortcut protocol
/// itself applies (trap inversion / LCD frequency sign / IE duration bound);
/// cost and eta are absent when it does not.
struct EnginePerformance {
    double w1 = 0.0;
    double w3 = 0.0;
    double q2 = 0.0;
    std::optional<double> cost1;
    std::optional<double> cost3;
    std::optional<double> eta;
    double power = 0.0;
    double qstar1 = 1.0;
    double qstar3 = 1.0;
    bool engine_valid = false;
    bool method_valid = true;
};

/// Work of the compression stroke omega1 -> omega2 starting from the cold
/// thermal state: (1/2)(omega2 qstar - omega1) coth(beta1 omega1 / 2).
double stroke_work_compression(double omega1, double omega2, double beta1, double qstar);

/// Work of the expansion stroke omega2 -> omega1 starting from the hot
/// thermal state: (1/2)(omega1 qstar - omega2) coth(beta2 omega2 / 2).
double stroke_work_expansion(double omega1, double omega2, double beta2, double qstar);

/// Heat absorbed on the hot isochore:
/// (omega2/2)[coth(beta2 omega2/2) - qstar1 coth(beta1 omega1/2)].
double isochore_heat(double omega2, const BathPair& baths, double omega1, double qstar1);

/// Cost-aware shortcut efficiency -(w1 + w3)/(q2 + cost1 + cost3); reduces
/// to the adiabatic efficiency when both costs vanish. Returns nullopt
/// outside the engine regime (w1 + w3 >= 0 or non-positive energy input).
std::optional<double> efficiency_sta(double w1_ad, double w3_ad, double q2_ad, double cost1,
                                     double cost3);

/// Plain efficiency -(w1 + w3)/q2; nullopt outside the engine regime.
std::optional<double> efficiency_na(double w1, double w3, double q2);

/// Output power -(w1 + w3)/(2 tau) for the two-stroke cycle time.
double power(double w1, double w3, double tau);

/// Runs one cycle: AD uses Q* = 1 and zero costs; NA integrates the
/// parametric oscillator on the forward and reversed ramps; CD/LCD/IE use
/// adiabatic works and heat plus the per-stroke time-averaged driving cost
/// in the efficiency denominator. Protocol-validity failures are recorded
/// in method_valid, not raised.
EnginePerformance run_cycle(const CycleConfig& cfg);

}  // namespace staotto
