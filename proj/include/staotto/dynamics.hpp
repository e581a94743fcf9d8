#pragma once

#include <functional>
#include <vector>

#include "staotto/ramp.hpp"

namespace staotto {

/// Composite-Simpson settings. Panels are doubled until two successive
/// estimates agree to rel_tol (relative), or max_refinements is exhausted.
struct QuadratureConfig {
    int n_panels = 32;  // initial panel count, even, >= 2
    double rel_tol = 1e-10;
    int max_refinements = 20;
};

enum class OdeScheme { RK4 };

/// Fixed-step integrator settings. With richardson_check on, results are
/// recomputed at twice the step count and must agree to 1e-7.
struct OdeConfig {
    int n_steps = 4096;  // >= 16
    OdeScheme scheme = OdeScheme::RK4;
    bool richardson_check = true;
};

/// Integral of f over [0, t_end] by composite Simpson with panel doubling.
/// Deterministic: nodes are t_end * i/n, summed left to right.
/// Throws QuadratureError (carrying the last two estimates) if the
/// refinement limit is reached without convergence.
double quadrature(const std::function<double(double)>& f, double t_end,
                  const QuadratureConfig& cfg);

/// Classical solutions of f'' + omega^2(t) f = 0 at one instant:
/// X starts as (0, 1), Y as (1, 0).
struct OscillatorState {
    double x = 0.0;
    double xdot = 1.0;
    double y = 1.0;
    double ydot = 0.0;
    /// X Ydot - Y Xdot; the exact flow keeps it at -1.
    double wronskian() const { return x * ydot - y * xdot; }
};

/// RK4 endpoint state of the parametric oscillator driven by the ramp.
OscillatorState integrate_parametric_oscillator(const RampSpec& ramp, int n_steps);

/// States at n_checkpoints evenly spaced times over [0, tau] (endpoints
/// included); roughly n_steps_hint RK4 steps are distributed over the grid.
std::vector<OscillatorState> oscillator_checkpoints(const RampSpec& ramp, int n_steps_hint,
                                                    int n_checkpoints);

/// Adiabaticity parameter of the evolved state relative to the instantaneous
/// frequency omega_inst, for an initial thermal ensemble at omega_init.
double qstar_from_state(const OscillatorState& state, double omega_init, double omega_inst);

/// Nonadiabatic adiabaticity parameter at the end of the stroke, >= 1.
/// With cfg.richardson_check, integrates at n_steps and 2*n_steps and
/// throws OdeError if the two disagree by more than 1e-7 (returning the
/// finer estimate otherwise).
double qstar_na(const RampSpec& ramp, const OdeConfig& cfg);

/// Solution of the Ermakov equation bddot + omega^2(t) b = omega0^2 / b^3
/// on a uniform grid. bddot holds the equation's right-hand side along the
/// integrated trajectory.
struct ErmakovTrace {
    std::vector<double> t;
    std::vector<double> b;
    std::vector<double> bdot;
    std::vector<double> bddot;
    double omega0 = 0.0;
};

/// Integrates the Ermakov equation from (b0, bdot0) over [0, tau].
/// Throws TrapCollapseError if b stops being positive and finite.
ErmakovTrace solve_ermakov(const std::function<double(double)>& omega_sq, double tau,
                           double b0, double bdot0, double omega0, const OdeConfig& cfg);
ErmakovTrace solve_ermakov(const RampSpec& ramp, double b0, double bdot0, double omega0,
                           const OdeConfig& cfg);

/// Largest Ermakov residual |bddot + omega^2 b - omega0^2/b^3| over the
/// trace's interior nodes, with bddot recomputed independently from bdot by
/// a five-point finite-difference stencil.
double max_ermakov_residual(const ErmakovTrace& trace,
                            const std::function<double(double)>& omega_sq);

/// Frequency protocol obtained by inverse engineering: b(t) is the quintic
/// interpolant between 1 and gamma = sqrt(omega_start/omega_end) with
/// vanishing first and second derivatives at the ends, and
/// omega(t) = sqrt(omega_start^2/b^4 - bddot/b).
///
/// Throws TrapInversionError if tau <= 1/(2 omega_end) (trap non-inversion
/// bound) or if the squared frequency is non-positive anywhere on a
/// 4096-interval scan (reporting the offending time).
RampSpec design_ie_frequency(double omega_start, double omega_end, double tau);

}  // namespace staotto
