#include "staotto/dynamics.hpp"

#include <cmath>
#include <string>

#include "staotto/errors.hpp"

namespace staotto {
namespace {

constexpr double kRichardsonTol = 1e-7;
constexpr int kDesignScanIntervals = 4096;

void validate(const QuadratureConfig& cfg) {
    if (cfg.n_panels < 2 || cfg.n_panels % 2 != 0)
        throw DomainError("quadrature: n_panels must be even and >= 2");
    if (!(cfg.rel_tol > 0.0)) throw DomainError("quadrature: rel_tol must be > 0");
    if (cfg.max_refinements < 0) throw DomainError("quadrature: max_refinements must be >= 0");
}

void validate(const OdeConfig& cfg) {
    if (cfg.n_steps < 16) throw DomainError("ode: n_steps must be >= 16");
}

// Trapezoid sum with m intervals; nodes are t_end * i/m.
double trapezoid(const std::function<double(double)>& f, double t_end, long m) {
    double sum = 0.5 * (f(0.0) + f(t_end));
    for (long i = 1; i < m; ++i) sum += f(t_end * static_cast<double>(i) / static_cast<double>(m));
    return sum * t_end / static_cast<double>(m);
}

// Adds the midpoints of the m-interval grid to refine T(m) into T(2m).
double refine_trapezoid(const std::function<double(double)>& f, double t_end, long m,
                        double coarse) {
    double sum = 0.0;
    for (long i = 0; i < m; ++i)
        sum += f(t_end * (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(m)));
    return 0.5 * coarse + sum * t_end / (2.0 * static_cast<double>(m));
}

}  // namespace

double quadrature(const std::function<double(double)>& f, double t_end,
                  const QuadratureConfig& cfg) {
    validate(cfg);
    if (!(t_end > 0.0)) throw DomainError("quadrature: t_end must be > 0");

    // Composite Simpson over m intervals, written as the Richardson
    // combination of two trapezoid levels: S(m) = (4 T(m) - T(m/2)) / 3.
    long m = cfg.n_panels;
    double t_half = trapezoid(f, t_end, m / 2);
    double t_full = refine_trapezoid(f, t_end, m / 2, t_half);
    double current = (4.0 * t_full - t_half) / 3.0;
    double previous = current;

    for (int r = 0; r < cfg.max_refinements; ++r) {
        t_half = t_full;
        t_full = refine_trapezoid(f, t_end, m, t_half);
        m *= 2;
        previous = current;
        current = (4.0 * t_full - t_half) / 3.0;
        if (std::abs(current - previous) <= cfg.rel_tol * std::abs(current)) return current;
    }
    throw QuadratureError("quadrature: no convergence after " +
                              std::to_string(cfg.max_refinements) + " refinements",
                          previous, current);
}

namespace {

struct Osc4 {
    double x, xdot, y, ydot;
};

// One RK4 step of (f, fdot) -> (fdot, -omega^2 f) for X and Y together.
Osc4 rk4_step(const Osc4& u, double h, double w2_0, double w2_mid, double w2_1) {
    auto deriv = [](const Osc4& v, double w2) {
        return Osc4{v.xdot, -w2 * v.x, v.ydot, -w2 * v.y};
    };
    auto axpy = [](const Osc4& v, double c, const Osc4& k) {
        return Osc4{v.x + c * k.x, v.xdot + c * k.xdot, v.y + c * k.y, v.ydot + c * k.ydot};
    };
    const Osc4 k1 = deriv(u, w2_0);
    const Osc4 k2 = deriv(axpy(u, 0.5 * h, k1), w2_mid);
    const Osc4 k3 = deriv(axpy(u, 0.5 * h, k2), w2_mid);
    const Osc4 k4 = deriv(axpy(u, h, k3), w2_1);
    return Osc4{u.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                u.xdot + h / 6.0 * (k1.xdot + 2.0 * k2.xdot + 2.0 * k3.xdot + k4.xdot),
                u.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
                u.ydot + h / 6.0 * (k1.ydot + 2.0 * k2.ydot + 2.0 * k3.ydot + k4.ydot)};
}

double omega_sq_at(const RampSpec& ramp, double t) {
    const RampSample smp = eval_ramp(ramp, t);
    return smp.omega * smp.omega;
}

OscillatorState integrate_oscillator_impl(const RampSpec& ramp, int n_steps,
                                          std::vector<OscillatorState>* checkpoints,
                                          int checkpoint_stride) {
    const double tau = ramp.tau;
    const long half_nodes = 2L * n_steps;
    Osc4 u{0.0, 1.0, 1.0, 0.0};
    if (checkpoints) checkpoints->push_back(OscillatorState{u.x, u.xdot, u.y, u.ydot});
    const double h = tau / static_cast<double>(n_steps);
    double w2_left = omega_sq_at(ramp, 0.0);
    for (int i = 0; i < n_steps; ++i) {
        const double w2_mid =
            omega_sq_at(ramp, tau * (2.0 * i + 1.0) / static_cast<double>(half_nodes));
        const double w2_right =
            omega_sq_at(ramp, tau * (2.0 * i + 2.0) / static_cast<double>(half_nodes));
        u = rk4_step(u, h, w2_left, w2_mid, w2_right);
        w2_left = w2_right;
        if (checkpoints && (i + 1) % checkpoint_stride == 0)
            checkpoints->push_back(OscillatorState{u.x, u.xdot, u.y, u.ydot});
    }
    return OscillatorState{u.x, u.xdot, u.y, u.ydot};
}

}  // namespace

OscillatorState integrate_parametric_oscillator(const RampSpec& ramp, int n_steps) {
    if (n_steps < 1) throw DomainError("integrate_parametric_oscillator: n_steps must be >= 1");
    return integrate_oscillator_impl(ramp, n_steps, nullptr, 0);
}

std::vector<OscillatorState> oscillator_checkpoints(const RampSpec& ramp, int n_steps_hint,
                                                    int n_checkpoints) {
    if (n_checkpoints < 2) throw DomainError("oscillator_checkpoints: need >= 2 checkpoints");
    const int segments = n_checkpoints - 1;
    const int per_segment = std::max(1, (n_steps_hint + segments - 1) / segments);
    std::vector<OscillatorState> states;
    states.reserve(n_checkpoints);
    integrate_oscillator_impl(ramp, per_segment * segments, &states, per_segment);
    return states;
}

double qstar_from_state(const OscillatorState& st, double omega_init, double omega_inst) {
    const double wi2 = omega_init * omega_init;
    const double wf2 = omega_inst * omega_inst;
    return (wi2 * (wf2 * st.x * st.x + st.xdot * st.xdot) +
            (wf2 * st.y * st.y + st.ydot * st.ydot)) /
           (2.0 * omega_init * omega_inst);
}

double qstar_na(const RampSpec& ramp, const OdeConfig& cfg) {
    validate(cfg);
    const OscillatorState coarse = integrate_parametric_oscillator(ramp, cfg.n_steps);
    const double q_coarse = qstar_from_state(coarse, ramp.omega_start, ramp.omega_end);
    if (!cfg.richardson_check) return q_coarse;

    const OscillatorState fine = integrate_parametric_oscillator(ramp, 2 * cfg.n_steps);
    const double q_fine = qstar_from_state(fine, ramp.omega_start, ramp.omega_end);
    if (std::abs(q_fine - q_coarse) > kRichardsonTol) {
        throw OdeError("qstar_na: step-doubling check failed, n_steps too small (delta = " +
                           std::to_string(std::abs(q_fine - q_coarse)) + ")",
                       q_coarse, q_fine);
    }
    return q_fine;
}

ErmakovTrace solve_ermakov(const std::function<double(double)>& omega_sq, double tau,
                           double b0, double bdot0, double omega0, const OdeConfig& cfg) {
    validate(cfg);
    if (!(b0 > 0.0)) throw DomainError("solve_ermakov: b0 must be > 0");
    if (!(tau > 0.0)) throw DomainError("solve_ermakov: tau must be > 0");

    const int n = cfg.n_steps;
    const double h = tau / static_cast<double>(n);
    const double w0sq = omega0 * omega0;
    auto rhs = [&](double w2, double b) { return w0sq / (b * b * b) - w2 * b; };

    ErmakovTrace trace;
    trace.omega0 = omega0;
    trace.t.reserve(n + 1);
    trace.b.reserve(n + 1);
    trace.bdot.reserve(n + 1);
    trace.bddot.reserve(n + 1);

    double b = b0, bd = bdot0;
    double w2_left = omega_sq(0.0);
    trace.t.push_back(0.0);
    trace.b.push_back(b);
    trace.bdot.push_back(bd);
    trace.bddot.push_back(rhs(w2_left, b));

    for (int i = 0; i < n; ++i) {
        const double t_mid = tau * (2.0 * i + 1.0) / (2.0 * static_cast<double>(n));
        const double t_right = tau * (static_cast<double>(i) + 1.0) / static_cast<double>(n);
        const double w2_mid = omega_sq(t_mid);
        const double w2_right = omega_sq(t_right);

        const double k1b = bd, k1v = rhs(w2_left, b);
        const double k2b = bd + 0.5 * h * k1v, k2v = rhs(w2_mid, b + 0.5 * h * k1b);
        const double k3b = bd + 0.5 * h * k2v, k3v = rhs(w2_mid, b + 0.5 * h * k2b);
        const double k4b = bd + h * k3v, k4v = rhs(w2_right, b + h * k3b);
        b += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        bd += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw TrapCollapseError(
                "solve_ermakov: scaling function reached b <= 0 near t = " +
                    std::to_string(t_right), t_right);
        }
        w2_left = w2_right;
        trace.t.push_back(t_right);
        trace.b.push_back(b);
        trace.bdot.push_back(bd);
        trace.bddot.push_back(rhs(w2_right, b));
    }
    return trace;
}

ErmakovTrace solve_ermakov(const RampSpec& ramp, double b0, double bdot0, double omega0,
                           const OdeConfig& cfg) {
    return solve_ermakov([&ramp](double t) { return omega_sq_at(ramp, t); }, ramp.tau, b0,
                         bdot0, omega0, cfg);
}

double max_ermakov_residual(const ErmakovTrace& trace,
                            const std::function<double(double)>& omega_sq) {
    const std::size_t n = trace.t.size();
    if (n < 5) throw DomainError("max_ermakov_residual: trace too short for the stencil");
    const double h = trace.t[1] - trace.t[0];
    const double w0sq = trace.omega0 * trace.omega0;
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double bddot_fd = (-trace.bdot[i + 2] + 8.0 * trace.bdot[i + 1] -
                                 8.0 * trace.bdot[i - 1] + trace.bdot[i - 2]) /
                                (12.0 * h);
        const double b = trace.b[i];
        const double residual = bddot_fd + omega_sq(trace.t[i]) * b - w0sq / (b * b * b);
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

RampSpec design_ie_frequency(double omega_start, double omega_end, double tau) {
    if (!(omega_start > 0.0))
        throw DomainError("design_ie_frequency: omega_start must be > 0");
    if (!(omega_end > 0.0)) throw DomainError("design_ie_frequency: omega_end must be > 0");
    if (!(tau > 0.5 / omega_end)) {
        throw TrapInversionError(
            "design_ie_frequency: trap non-inversion requires tau > 1/(2*omega_end) = " +
                std::to_string(0.5 / omega_end), tau);
    }
    const RampSpec ramp{omega_start, omega_end, tau, RampKind::BScaled};
    // eval_ramp throws with the offending t wherever omega^2 <= 0
    for (int i = 0; i <= kDesignScanIntervals; ++i) {
        eval_ramp(ramp, tau * static_cast<double>(i) / kDesignScanIntervals);
    }
    return ramp;
}

}  // namespace staotto
