#include "wavefd/continuous.hpp"

#include <cmath>
#include <stdexcept>

#include "wavefd/quadrature.hpp"

namespace wavefd {

namespace {

// (1 - y^2)^p on |y| < 1, exactly 0.0 elsewhere.
double bump(double x, double center, double half_width, int p) {
    const double y = (x - center) / half_width;
    if (std::abs(y) >= 1.0) return 0.0;
    return std::pow(1.0 - y * y, p);
}

// d/dx of bump: p (1 - y^2)^(p-1) (-2y) / half_width.
double bump_dx(double x, double center, double half_width, int p) {
    const double y = (x - center) / half_width;
    if (std::abs(y) >= 1.0) return 0.0;
    return static_cast<double>(p) * std::pow(1.0 - y * y, p - 1) * (-2.0 * y) / half_width;
}

// d2/dx2 of bump.
double bump_dxx(double x, double center, double half_width, int p) {
    const double y = (x - center) / half_width;
    if (std::abs(y) >= 1.0) return 0.0;
    const double q = 1.0 - y * y;
    const double dp = static_cast<double>(p);
    return (dp * (dp - 1.0) * std::pow(q, p - 2) * 4.0 * y * y - dp * std::pow(q, p - 1) * 2.0) /
           (half_width * half_width);
}

void require_bump_params(double half_width, int p, double c) {
    if (!(half_width > 0.0)) throw std::invalid_argument("bump: half_width must be > 0");
    if (!(c > 0.0)) throw std::invalid_argument("bump: c must be > 0");
    if (p < 5) throw std::invalid_argument("bump: p must be >= 5 for enough smoothness");
}

}  // namespace

std::pair<CauchyProblem, ExactSolution> traveling_bump_problem(double center, double half_width,
                                                               int p, double c) {
    require_bump_params(half_width, p, c);
    CauchyProblem prob;
    prob.u0 = [=](double x) { return bump(x, center, half_width, p); };
    prob.u1 = [=](double x) { return -c * bump_dx(x, center, half_width, p); };
    prob.s = [](double, double) { return 0.0; };
    prob.c = c;
    prob.chi1 = center - half_width;
    prob.chi2 = center + half_width;

    ExactSolution sol;
    sol.u = [=](double x, double t) { return bump(x - c * t, center, half_width, p); };
    sol.regularity_order = p - 1;
    sol.du_dx = [=](double x, double t) { return bump_dx(x - c * t, center, half_width, p); };
    sol.du_dt = [=](double x, double t) { return -c * bump_dx(x - c * t, center, half_width, p); };
    return {std::move(prob), std::move(sol)};
}

std::pair<CauchyProblem, ExactSolution> cubic_time_source_problem(double center, double half_width,
                                                                  int p, double c) {
    require_bump_params(half_width, p, c);
    CauchyProblem prob;
    prob.u0 = [](double) { return 0.0; };
    prob.u1 = [](double) { return 0.0; };
    // u = t^3 b(x)  =>  s = u_tt - c^2 u_xx = 6 t b(x) - c^2 t^3 b''(x).
    prob.s = [=](double x, double t) {
        const double b = bump(x, center, half_width, p);
        const double bxx = bump_dxx(x, center, half_width, p);
        return 6.0 * t * b - c * c * t * t * t * bxx;
    };
    prob.c = c;
    prob.chi1 = center - half_width;
    prob.chi2 = center + half_width;

    ExactSolution sol;
    sol.u = [=](double x, double t) { return t * t * t * bump(x, center, half_width, p); };
    sol.regularity_order = p - 1;
    sol.du_dx = [=](double x, double t) { return t * t * t * bump_dx(x, center, half_width, p); };
    sol.du_dt = [=](double x, double t) { return 3.0 * t * t * bump(x, center, half_width, p); };
    return {std::move(prob), std::move(sol)};
}

double dalembert_eval(const CauchyProblem& prob, double x, double t, double tol) {
    if (t < 0.0) throw std::invalid_argument("dalembert_eval: t must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("dalembert_eval: tol must be > 0");
    const double c = prob.c;
    double value = 0.5 * (prob.u0(x - c * t) + prob.u0(x + c * t));
    if (t > 0.0) {
        value += adaptive_simpson(prob.u1, x - c * t, x + c * t, tol) / (2.0 * c);
        const double inner_tol = tol / (10.0 * std::max(t, 1.0));
        auto outer = [&](double sigma) {
            return adaptive_simpson([&](double y) { return prob.s(y, sigma); },
                                    x - c * (t - sigma), x + c * (t - sigma), inner_tol);
        };
        value += adaptive_simpson(outer, 0.0, t, tol) / (2.0 * c);
    }
    return value;
}

std::pair<double, double> support_interval(const CauchyProblem& prob, double t) {
    if (t < 0.0) throw std::invalid_argument("support_interval: t must be >= 0");
    return {prob.chi1 - prob.c * t, prob.chi2 + prob.c * t};
}

double continuous_energy(const ExactSolution& sol, const CauchyProblem& prob, double t, double h,
                         double tol) {
    if (t < 0.0) throw std::invalid_argument("continuous_energy: t must be >= 0");
    if (!(h > 0.0)) throw std::invalid_argument("continuous_energy: h must be > 0");
    const auto [a, b] = support_interval(prob, t);
    auto ut2 = [&](double x) {
        const double d = (sol.u(x, t + h) - sol.u(x, t - h)) / (2.0 * h);
        return d * d;
    };
    auto ux2 = [&](double x) {
        const double d = (sol.u(x + h, t) - sol.u(x - h, t)) / (2.0 * h);
        return d * d;
    };
    const double kinetic = 0.5 * adaptive_simpson(ut2, a, b, tol);
    const double potential = 0.5 * prob.c * prob.c * adaptive_simpson(ux2, a, b, tol);
    return kinetic + potential;
}

}  // namespace wavefd
