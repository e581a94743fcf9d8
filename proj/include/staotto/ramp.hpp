#pragma once

#include <functional>
#include <string>
#include <vector>

namespace staotto {

enum class RampKind {
    /// omega(t) interpolated by the smoothstep 10s^3 - 15s^4 + 6s^5, s = t/tau.
    QuinticPolynomial,
    /// omega(t) induced by a quintic scaling function b(t) through
    /// omega^2 = omega0^2/b^4 - bddot/b with omega0 = omega_start
    /// (see design_ie_frequency).
    BScaled,
};

/// Frequency protocol for one compression/expansion stroke. Units use
/// hbar = m = k_B = 1 throughout, so frequencies double as energies.
/// Immutable after construction; evaluation is pure and thread-safe.
struct RampSpec {
    double omega_start = 0.0;
    double omega_end = 0.0;
    double tau = 0.0;
    RampKind kind = RampKind::QuinticPolynomial;
};

/// One evaluation point of a ramp with exact analytic derivatives.
struct RampSample {
    double t = 0.0;
    double s = 0.0;        // t/tau in [0, 1]
    double omega = 0.0;
    double domega = 0.0;   // d omega / dt
    double ddomega = 0.0;  // d^2 omega / dt^2
};

/// Smoothstep ramp between two positive frequencies. Starts and ends with
/// vanishing first and second derivatives.
///
/// Throws DomainError unless all arguments are strictly positive.
RampSpec make_quintic_ramp(double omega_start, double omega_end, double tau);

/// Evaluates a ramp at time t in [0, tau]. Endpoint samples reproduce the
/// declared frequencies exactly. Throws DomainError outside [0, tau];
/// throws TrapInversionError if a BScaled ramp's squared frequency is not
/// positive at t.
RampSample eval_ramp(const RampSpec& ramp, double t);

/// Time-reflected protocol: omega_rev(t) = omega(tau - t). Both supported
/// kinds are closed under reflection, so this just swaps the endpoints.
RampSpec reverse_ramp(const RampSpec& ramp);

/// One flagged deviation from the stroke boundary conditions.
struct BoundaryViolation {
    std::string quantity;  // e.g. "domega(0)"
    double t = 0.0;
    double value = 0.0;
    double limit = 0.0;
};

/// Checks that omega matches the declared endpoints (within
/// tol * max(omega_start, omega_end)) and that |domega| and |ddomega|
/// at t in {0, tau} stay below tol * max(omega_start, omega_end) / tau.
/// Returns an empty vector iff all checks pass. tol must be positive.
std::vector<BoundaryViolation> check_boundary_conditions(const RampSpec& ramp, double tol);

/// Same checks against an arbitrary sampling function (for protocols not
/// representable as a RampSpec, e.g. in tests).
std::vector<BoundaryViolation> check_boundary_conditions(
    const std::function<RampSample(double)>& eval,
    double omega_start, double omega_end, double tau, double tol);

}  // namespace staotto
