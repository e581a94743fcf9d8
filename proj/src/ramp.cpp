#include "staotto/ramp.hpp"

#include <algorithm>
#include <cmath>

#include "staotto/errors.hpp"

namespace staotto {
namespace {

// Smoothstep 10s^3 - 15s^4 + 6s^5 and its s-derivatives. p(0)=0, p(1)=1,
// p' = p'' = 0 at both ends; all endpoint values are exact in floating point.
double p(double s) { return s * s * s * (10.0 + s * (-15.0 + 6.0 * s)); }
double p1(double s) { return s * s * (30.0 + s * (-60.0 + 30.0 * s)); }
double p2(double s) { return s * (60.0 + s * (-180.0 + 120.0 * s)); }
double p3(double s) { return 60.0 + s * (-360.0 + 360.0 * s); }
double p4(double s) { return -360.0 + 720.0 * s; }

RampSample eval_quintic(const RampSpec& ramp, double t, double s) {
    const double delta = ramp.omega_end - ramp.omega_start;
    const double ps = p(s);
    RampSample out;
    out.t = t;
    out.s = s;
    // convex form keeps the endpoint frequencies exact
    out.omega = ramp.omega_start * (1.0 - ps) + ramp.omega_end * ps;
    out.domega = delta * p1(s) / ramp.tau;
    out.ddomega = delta * p2(s) / (ramp.tau * ramp.tau);
    return out;
}

RampSample eval_bscaled(const RampSpec& ramp, double t, double s) {
    const double tau = ramp.tau;
    const double w0 = ramp.omega_start;
    const double w0sq = w0 * w0;
    const double gamma = std::sqrt(ramp.omega_start / ramp.omega_end);
    const double a = gamma - 1.0;

    const double b = 1.0 + a * p(s);
    const double b1 = a * p1(s) / tau;
    const double b2 = a * p2(s) / (tau * tau);
    const double b3 = a * p3(s) / (tau * tau * tau);
    const double b4 = a * p4(s) / (tau * tau * tau * tau);

    // omega^2 = w0^2 / b^4 - bddot / b, differentiated twice in t
    const double wsq = w0sq / (b * b * b * b) - b2 / b;
    if (!(wsq > 0.0)) {
        throw TrapInversionError(
            "inverse-engineered frequency: omega^2 <= 0 at t = " + std::to_string(t), t);
    }
    const double dwsq = -4.0 * w0sq * b1 / (b * b * b * b * b) - b3 / b + b2 * b1 / (b * b);
    const double ddwsq = -4.0 * w0sq * b2 / (b * b * b * b * b)
                       + 20.0 * w0sq * b1 * b1 / (b * b * b * b * b * b)
                       - b4 / b + 2.0 * b3 * b1 / (b * b) + b2 * b2 / (b * b)
                       - 2.0 * b2 * b1 * b1 / (b * b * b);

    RampSample out;
    out.t = t;
    out.s = s;
    // b's derivatives vanish identically at s = 0, 1, so the endpoint
    // frequencies are omega_start and omega_end; pin them to avoid the
    // last-ulp wobble of sqrt(w0^2/b^4).
    if (s == 0.0) {
        out.omega = ramp.omega_start;
    } else if (s == 1.0) {
        out.omega = ramp.omega_end;
    } else {
        out.omega = std::sqrt(wsq);
    }
    out.domega = dwsq / (2.0 * out.omega);
    out.ddomega = (ddwsq - 2.0 * out.domega * out.domega) / (2.0 * out.omega);
    return out;
}

}  // namespace

RampSpec make_quintic_ramp(double omega_start, double omega_end, double tau) {
    if (!(omega_start > 0.0)) throw DomainError("make_quintic_ramp: omega_start must be > 0");
    if (!(omega_end > 0.0)) throw DomainError("make_quintic_ramp: omega_end must be > 0");
    if (!(tau > 0.0)) throw DomainError("make_quintic_ramp: tau must be > 0");
    return RampSpec{omega_start, omega_end, tau, RampKind::QuinticPolynomial};
}

RampSample eval_ramp(const RampSpec& ramp, double t) {
    if (!(t >= 0.0 && t <= ramp.tau)) {
        throw DomainError("eval_ramp: t = " + std::to_string(t) + " outside [0, " +
                          std::to_string(ramp.tau) + "]");
    }
    const double s = (t == ramp.tau) ? 1.0 : t / ramp.tau;
    switch (ramp.kind) {
        case RampKind::QuinticPolynomial:
            return eval_quintic(ramp, t, s);
        case RampKind::BScaled:
            return eval_bscaled(ramp, t, s);
    }
    throw DomainError("eval_ramp: unknown ramp kind");
}

RampSpec reverse_ramp(const RampSpec& ramp) {
    RampSpec rev = ramp;
    std::swap(rev.omega_start, rev.omega_end);
    return rev;
}

std::vector<BoundaryViolation> check_boundary_conditions(
    const std::function<RampSample(double)>& eval,
    double omega_start, double omega_end, double tau, double tol) {
    if (!(tol > 0.0)) throw DomainError("check_boundary_conditions: tol must be > 0");

    const double omega_scale = std::max(omega_start, omega_end);
    const double value_limit = tol * omega_scale;
    const double deriv_limit = tol * omega_scale / tau;

    std::vector<BoundaryViolation> report;
    auto flag = [&](const char* quantity, double t, double value, double limit) {
        report.push_back(BoundaryViolation{quantity, t, value, limit});
    };

    const RampSample lo = eval(0.0);
    const RampSample hi = eval(tau);
    if (!(std::abs(lo.omega - omega_start) <= value_limit))
        flag("omega(0)", 0.0, lo.omega, value_limit);
    if (!(std::abs(hi.omega - omega_end) <= value_limit))
        flag("omega(tau)", tau, hi.omega, value_limit);
    if (!(std::abs(lo.domega) <= deriv_limit)) flag("domega(0)", 0.0, lo.domega, deriv_limit);
    if (!(std::abs(hi.domega) <= deriv_limit)) flag("domega(tau)", tau, hi.domega, deriv_limit);
    if (!(std::abs(lo.ddomega) <= deriv_limit)) flag("ddomega(0)", 0.0, lo.ddomega, deriv_limit);
    if (!(std::abs(hi.ddomega) <= deriv_limit)) flag("ddomega(tau)", tau, hi.ddomega, deriv_limit);
    return report;
}

std::vector<BoundaryViolation> check_boundary_conditions(const RampSpec& ramp, double tol) {
    return check_boundary_conditions(
        [&ramp](double t) { return eval_ramp(ramp, t); },
        ramp.omega_start, ramp.omega_end, ramp.tau, tol);
}

}  // namespace staotto
