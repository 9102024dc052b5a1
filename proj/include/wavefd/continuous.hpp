#pragma once

#include <functional>
#include <utility>

namespace wavefd {

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/// Continuous initial-value problem for the 1D acoustic wave equation:
/// u_tt - c^2 u_xx = s with u(.,0) = u0 and u_t(.,0) = u1.
///
/// Contract on the data: u0 and u1 vanish outside [chi1, chi2], s(.,t)
/// vanishes outside [chi1 - c t, chi2 + c t], and s(., 0) == 0.
struct CauchyProblem {
    SpaceFn u0;
    SpaceFn u1;
    SpaceTimeFn s;
    double c = 1.0;
    double chi1 = -1.0;
    double chi2 = 1.0;
};

/// Closed-form solution used as an oracle. u(x, t) vanishes outside
/// [chi1 - c t, chi2 + c t] of its problem. The analytic partials are
/// optional; the manufactured families below provide them.
struct ExactSolution {
    SpaceTimeFn u;
    int regularity_order = 0;
    SpaceTimeFn du_dx;  // may be empty
    SpaceTimeFn du_dt;  // may be empty
};

/// Right-traveling polynomial bump: u0(y) = (1 - y^2)^p on |y| < 1 with
/// y = (x - center)/half_width, u1 = -c u0', s == 0, and exact solution
/// u(x, t) = u0(x - c t). The bump is C^(p-1); p >= 5 is required so that
/// fourth-order Taylor remainders exist.
std::pair<CauchyProblem, ExactSolution> traveling_bump_problem(double center, double half_width,
                                                               int p, double c);

/// Manufactured sourced problem with zero Cauchy data: u(x, t) = t^3 b(x)
/// where b is the (1 - y^2)^p bump. The source s = u_tt - c^2 u_xx vanishes
/// at t = 0 and is supported in [chi1, chi2]. Exercises the double integral
/// of the d'Alembert evaluator.
std::pair<CauchyProblem, ExactSolution> cubic_time_source_problem(double center,
                                                                  double half_width, int p,
                                                                  double c);

/// d'Alembert evaluation of the solution at (x, t):
///   (u0(x-ct) + u0(x+ct))/2 + (1/2c) Int u1 + (1/2c) Int Int s.
/// Each integral is computed by adaptive Simpson quadrature to absolute
/// tolerance tol (inner tolerance tol/(10 max(t,1)) for the double
/// integral). Independent of any closed-form solution.
double dalembert_eval(const CauchyProblem& prob, double x, double t, double tol);

/// Interval outside which the solution vanishes at time t:
/// (chi1 - c t, chi2 + c t). Requires t >= 0.
std::pair<double, double> support_interval(const CauchyProblem& prob, double t);

/// Diagnostic continuous energy at time t:
///   1/2 Int (du/dt)^2 dx + 1/2 c^2 Int (du/dx)^2 dx
/// with both partials approximated by centered differences of step h and
/// both integrals taken over support_interval(prob, t) to tolerance tol.
double continuous_energy(const ExactSolution& sol, const CauchyProblem& prob, double t, double h,
                         double tol);

}  // namespace wavefd
