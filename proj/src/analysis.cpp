#include "wavefd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wavefd {

namespace {

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool empty() const { return hi < lo; }
};

Window window_of(const SupportSeq& f) {
    if (f.window_empty()) return {};
    return {f.lo(), f.hi()};
}

Window union_of(Window a, Window b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Window widen(Window w, std::int64_t by) {
    if (w.empty()) return w;
    return {w.lo - by, w.hi + by};
}

Window clip(Window w, std::int64_t lo, std::int64_t hi) {
    if (w.empty()) return w;
    return {std::max(w.lo, lo), std::min(w.hi, hi)};
}

template <typename Fn>
SupportSeq materialize(Window w, Fn&& value_at) {
    if (w.empty()) return SupportSeq::zero();
    std::vector<double> vals(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (std::int64_t j = w.lo; j <= w.hi; ++j)
        vals[static_cast<std::size_t>(j - w.lo)] = value_at(j);
    return SupportSeq(w.lo, std::move(vals));
}

// Sampled exact solution at time level k, windowed by the propagation
// support at that time and clipped to the grid.
SupportSeq sample_exact_level(const GridSpec& grid, const ExactSolution& exact,
                              const CauchyProblem& prob, std::int64_t k) {
    const double t = grid.t_at(k);
    const auto [a, b] = support_interval(prob, t);
    Window w;
    w.lo = static_cast<std::int64_t>(std::floor((a - grid.x_min) / grid.dx));
    w.hi = static_cast<std::int64_t>(std::ceil((b - grid.x_min) / grid.dx));
    w = clip(w, 0, grid.j_max);
    return materialize(w, [&](std::int64_t j) { return exact.u(grid.x_at(j), t); });
}

}  // namespace

ErrorField convergence_error(const DiscreteSolution& sol, const ExactSolution& exact) {
    const GridSpec& g = sol.grid;
    ErrorField field;
    field.kind = FieldKind::convergence;
    field.grid = g;
    field.levels.reserve(sol.levels.size());
    for (std::int64_t k = 0; k <= g.k_max; ++k) {
        const double t = g.t_at(k);
        const SupportSeq& uh = sol.levels[static_cast<std::size_t>(k)];
        field.levels.push_back(materialize({0, g.j_max}, [&](std::int64_t j) {
            return exact.u(g.x_at(j), t) - uh.value(j);
        }));
    }
    return field;
}

ErrorField truncation_error(const GridSpec& grid, const ExactSolution& exact,
                            const CauchyProblem& prob) {
    const double dt = grid.dt;
    const double dx = grid.dx;
    const double c = grid.c;
    const SampledInputs in = sample_inputs(prob, grid);

    ErrorField field;
    field.kind = FieldKind::truncation;
    field.grid = grid;
    field.levels.reserve(static_cast<std::size_t>(grid.k_max) + 1);

    std::vector<SupportSeq> bar(static_cast<std::size_t>(grid.k_max) + 1);
    for (std::int64_t k = 0; k <= grid.k_max; ++k)
        bar[static_cast<std::size_t>(k)] = sample_exact_level(grid, exact, prob, k);

    // Native index -1: sampling residual against u0.
    {
        const Window w =
            clip(union_of(window_of(bar[0]), window_of(in.u0h)), 0, grid.j_max);
        field.levels.push_back(
            materialize(w, [&](std::int64_t j) { return bar[0].value(j) - in.u0h.value(j); }));
    }

    // Native index 0: first-step residual against u1.
    if (grid.k_max >= 1) {
        const Window w = clip(
            union_of(union_of(widen(window_of(bar[0]), 1), window_of(bar[1])), window_of(in.u1h)),
            0, grid.j_max);
        field.levels.push_back(materialize(w, [&](std::int64_t j) {
            const double stiff0 =
                -(c * c) * (bar[0].value(j + 1) - 2.0 * bar[0].value(j) + bar[0].value(j - 1)) /
                (dx * dx);
            return (bar[1].value(j) - bar[0].value(j)) / dt + 0.5 * dt * stiff0 -
                   in.u1h.value(j);
        }));
    }

    // Native index k-1 for k in [2..k_max]: interior residual of the stepper.
    for (std::int64_t k = 2; k <= grid.k_max; ++k) {
        const SupportSeq& b2 = bar[static_cast<std::size_t>(k)];
        const SupportSeq& b1 = bar[static_cast<std::size_t>(k - 1)];
        const SupportSeq& b0 = bar[static_cast<std::size_t>(k - 2)];
        const SupportSeq& src = in.sh[static_cast<std::size_t>(k - 1)];
        const Window w = clip(
            union_of(union_of(window_of(b2), widen(window_of(b1), 1)),
                     union_of(window_of(b0), window_of(src))),
            0, grid.j_max);
        field.levels.push_back(materialize(w, [&](std::int64_t j) {
            const double stiff =
                -(c * c) * (b1.value(j + 1) - 2.0 * b1.value(j) + b1.value(j - 1)) / (dx * dx);
            return (b2.value(j) - 2.0 * b1.value(j) + b0.value(j)) / (dt * dt) + stiff -
                   src.value(j);
        }));
    }
    return field;
}

double max_norm_over_time(const ErrorField& field) {
    double best = 0.0;
    for (const SupportSeq& level : field.levels)
        best = std::max(best, norm_dx(level, field.grid.dx));
    return best;
}

RefinementReport refinement_study(const CauchyProblem& prob, const ExactSolution& exact,
                                  const GridSpec& base, int levels, FieldKind kind) {
    if (levels < 3) throw std::invalid_argument("refinement_study: levels must be >= 3");
    if (!check_cfl(base)) throw std::invalid_argument("refinement_study: base grid fails CFL");

    RefinementReport report;
    report.courant = base.courant();
    double scale = 1.0;
    for (int l = 0; l < levels; ++l, scale *= 0.5) {
        const GridSpec g = make_grid(base.x_min, base.x_max, base.t_max, base.dx * scale,
                                     base.dt * scale, base.c, base.zeta, base.xi);
        if (!check_cfl(g))
            throw std::invalid_argument("refinement_study: refined grid fails CFL");
        double norm = 0.0;
        if (kind == FieldKind::convergence) {
            const SampledInputs in = sample_inputs(prob, g);
            const DiscreteSolution sol = solve(g, in.u0h, in.u1h, in.sh);
            norm = max_norm_over_time(convergence_error(sol, exact));
        } else {
            norm = max_norm_over_time(truncation_error(g, exact, prob));
        }
        if (!std::isfinite(norm))
            throw InstabilityError("refinement_study: non-finite error norm at level " +
                                   std::to_string(l));
        report.rows.push_back({g.dx, g.dt, norm});
    }

    for (const RefinementRow& row : report.rows)
        if (!(row.max_norm > 0.0)) report.degenerate = true;
    if (report.degenerate) {
        report.fitted_order = std::nan("");
        report.fitted_constant = std::nan("");
        return report;
    }

    // Least-squares line of log(max_norm) against log(dx).
    const double n = static_cast<double>(report.rows.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const RefinementRow& row : report.rows) {
        const double x = std::log(row.dx);
        const double y = std::log(row.max_norm);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    report.fitted_order = slope;
    report.fitted_constant = std::exp(intercept);
    return report;
}

std::pair<double, double> nonzero_count_bound(const GridSpec& grid, const CauchyProblem& prob,
                                              const ErrorField& field) {
    std::int64_t max_count = 0;
    for (const SupportSeq& level : field.levels)
        max_count = std::max(max_count, nonzero_count(level));
    const double lhs = static_cast<double>(max_count) * grid.dx * grid.dx;
    const double rhs =
        (prob.chi2 - prob.chi1) + 2.0 * grid.t_max * grid.c + 2.0 * grid.c * grid.t_max / grid.zeta;
    return {lhs, rhs};
}

DiscreteSolution replay_error_scheme(const ErrorField& conv, const ErrorField& trunc) {
    const GridSpec& g = conv.grid;
    if (conv.kind != FieldKind::convergence || trunc.kind != FieldKind::truncation)
        throw std::invalid_argument("replay_error_scheme: field kinds are swapped");
    if (g.k_max < 1) throw std::invalid_argument("replay_error_scheme: needs k_max >= 1");

    const SupportSeq u1h = combine(1.0 / g.dt, conv.levels[1], 0.0, SupportSeq::zero());
    std::vector<SupportSeq> sh(static_cast<std::size_t>(g.k_max) + 1);
    for (std::int64_t m = 1; m <= g.k_max - 1; ++m)
        sh[static_cast<std::size_t>(m)] = trunc.levels[static_cast<std::size_t>(m + 1)];
    return solve(g, SupportSeq::zero(), u1h, sh);
}

}  // namespace wavefd
