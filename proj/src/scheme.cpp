#include "wavefd/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavefd {

namespace {

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // empty when hi < lo
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
SupportSeq materialize_clipped(const GridSpec& grid, Window w, Fn&& value_at) {
    w = clip(w, 0, grid.j_max);
    if (w.empty()) return SupportSeq::zero();
    std::vector<double> vals(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (std::int64_t j = w.lo; j <= w.hi; ++j)
        vals[static_cast<std::size_t>(j - w.lo)] = value_at(j);
    return SupportSeq(w.lo, std::move(vals));
}

// Level 0 is the sampled initial position, clipped to the grid.
SupportSeq initial_level(const GridSpec& grid, const SupportSeq& u0h) {
    return materialize_clipped(grid, window_of(u0h), [&](std::int64_t j) { return u0h.value(j); });
}

SupportSeq first_level(const GridSpec& grid, const SupportSeq& u0, const SupportSeq& u1h) {
    const double dt = grid.dt;
    const double dx = grid.dx;
    const double c = grid.c;
    const Window w = union_of(widen(window_of(u0), 1), window_of(u1h));
    return materialize_clipped(grid, w, [&](std::int64_t j) {
        const double vm = u0.value(j - 1);
        const double v0 = u0.value(j);
        const double vp = u0.value(j + 1);
        const double ah = -(c * c) * (vp - 2.0 * v0 + vm) / (dx * dx);
        return v0 + dt * u1h.value(j) - 0.5 * dt * dt * ah;
    });
}

SupportSeq next_level(const GridSpec& grid, const SupportSeq& prev, const SupportSeq& prev2,
                      const SupportSeq& src) {
    const double dt = grid.dt;
    const double dx = grid.dx;
    const double c = grid.c;
    const Window w =
        union_of(union_of(widen(window_of(prev), 1), window_of(prev2)), window_of(src));
    return materialize_clipped(grid, w, [&](std::int64_t j) {
        const double vm = prev.value(j - 1);
        const double v0 = prev.value(j);
        const double vp = prev.value(j + 1);
        const double ah = -(c * c) * (vp - 2.0 * v0 + vm) / (dx * dx);
        return 2.0 * v0 - prev2.value(j) + dt * dt * (src.value(j) - ah);
    });
}

void require_source_levels(const GridSpec& grid, const std::vector<SupportSeq>& sh) {
    if (static_cast<std::int64_t>(sh.size()) != grid.k_max + 1)
        throw std::invalid_argument("solve: sh must hold k_max + 1 levels, got " +
                                    std::to_string(sh.size()));
}

DiscreteSolution run_stepper(const GridSpec& grid, const SupportSeq& u0h, const SupportSeq& u1h,
                             const std::vector<SupportSeq>& sh) {
    require_source_levels(grid, sh);
    DiscreteSolution sol;
    sol.grid = grid;
    sol.levels.reserve(static_cast<std::size_t>(grid.k_max) + 1);
    sol.levels.push_back(initial_level(grid, u0h));
    if (grid.k_max >= 1) sol.levels.push_back(first_level(grid, sol.levels[0], u1h));
    for (std::int64_t k = 2; k <= grid.k_max; ++k)
        sol.levels.push_back(next_level(grid, sol.levels[static_cast<std::size_t>(k - 1)],
                                        sol.levels[static_cast<std::size_t>(k - 2)],
                                        sh[static_cast<std::size_t>(k - 1)]));
    return sol;
}

}  // namespace

GridSpec make_grid(double x_min, double x_max, double t_max, double dx, double dt, double c,
                   double zeta, double xi) {
    if (!(x_min < x_max)) throw std::invalid_argument("make_grid: requires x_min < x_max");
    if (!(t_max > 0.0)) throw std::invalid_argument("make_grid: requires t_max > 0");
    if (!(dx > 0.0)) throw std::invalid_argument("make_grid: requires dx > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("make_grid: requires dt > 0");
    if (!(c > 0.0)) throw std::invalid_argument("make_grid: requires c > 0");
    if (!(zeta > 0.0 && zeta < 1.0)) throw std::invalid_argument("make_grid: zeta must be in (0,1)");
    if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("make_grid: xi must be in (0,1)");
    if (!(zeta <= 1.0 - xi)) throw std::invalid_argument("make_grid: requires zeta <= 1 - xi");
    GridSpec g{x_min, x_max, t_max, dx, dt, c, zeta, xi, 0, 0};
    g.j_max = static_cast<std::int64_t>(std::floor((x_max - x_min) / dx));
    g.k_max = static_cast<std::int64_t>(std::floor(t_max / dt));
    return g;
}

std::int64_t time_index(const GridSpec& grid, double t) {
    if (t < 0.0 || t > grid.t_max)
        throw std::invalid_argument("time_index: t outside [0, t_max]");
    const auto k = static_cast<std::int64_t>(std::floor(t / grid.dt));
    return std::clamp<std::int64_t>(k, 0, grid.k_max);
}

std::int64_t space_index(const GridSpec& grid, double x) {
    if (x < grid.x_min || x > grid.x_max)
        throw std::invalid_argument("space_index: x outside [x_min, x_max]");
    const auto j = static_cast<std::int64_t>(std::floor((x - grid.x_min) / grid.dx));
    return std::clamp<std::int64_t>(j, 0, grid.j_max);
}

bool check_cfl(const GridSpec& grid) {
    const double r = grid.courant();
    return grid.zeta <= r && r <= 1.0 - grid.xi;
}

SampledInputs sample_inputs(const CauchyProblem& prob, const GridSpec& grid) {
    auto index_window = [&](double a, double b) {
        Window w;
        w.lo = static_cast<std::int64_t>(std::floor((a - grid.x_min) / grid.dx));
        w.hi = static_cast<std::int64_t>(std::ceil((b - grid.x_min) / grid.dx));
        return clip(w, 0, grid.j_max);
    };
    auto sample = [&](Window w, auto&& fn) {
        if (w.empty()) return SupportSeq::zero();
        std::vector<double> vals(static_cast<std::size_t>(w.hi - w.lo + 1));
        for (std::int64_t j = w.lo; j <= w.hi; ++j)
            vals[static_cast<std::size_t>(j - w.lo)] = fn(grid.x_at(j));
        return SupportSeq(w.lo, std::move(vals));
    };

    SampledInputs in;
    const Window w0 = index_window(prob.chi1, prob.chi2);
    in.u0h = sample(w0, [&](double x) { return prob.u0(x); });
    in.u1h = sample(w0, [&](double x) { return prob.u1(x); });
    in.sh.reserve(static_cast<std::size_t>(grid.k_max) + 1);
    for (std::int64_t k = 0; k <= grid.k_max; ++k) {
        const double t = grid.t_at(k);
        const auto [a, b] = support_interval(prob, t);
        in.sh.push_back(sample(index_window(a, b), [&](double x) { return prob.s(x, t); }));
    }
    return in;
}

DiscreteSolution solve(const GridSpec& grid, const SupportSeq& u0h, const SupportSeq& u1h,
                       const std::vector<SupportSeq>& sh) {
    if (!check_cfl(grid)) {
        throw std::invalid_argument(
            "solve: CFL condition violated: require zeta <= c*dt/dx <= 1 - xi, got c*dt/dx = " +
            std::to_string(grid.courant()));
    }
    return run_stepper(grid, u0h, u1h, sh);
}

DiscreteSolution solve_unchecked(const GridSpec& grid, const SupportSeq& u0h,
                                 const SupportSeq& u1h, const std::vector<SupportSeq>& sh) {
    return run_stepper(grid, u0h, u1h, sh);
}

SupportSeq solve_rolling(const GridSpec& grid, const SupportSeq& u0h, const SupportSeq& u1h,
                         const std::vector<SupportSeq>& sh) {
    if (!check_cfl(grid)) {
        throw std::invalid_argument(
            "solve_rolling: CFL condition violated: require zeta <= c*dt/dx <= 1 - xi, got "
            "c*dt/dx = " +
            std::to_string(grid.courant()));
    }
    require_source_levels(grid, sh);
    SupportSeq prev2 = initial_level(grid, u0h);
    if (grid.k_max == 0) return prev2;
    SupportSeq prev = first_level(grid, prev2, u1h);
    for (std::int64_t k = 2; k <= grid.k_max; ++k) {
        SupportSeq next = next_level(grid, prev, prev2, sh[static_cast<std::size_t>(k - 1)]);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

std::pair<std::int64_t, std::int64_t> support_cone(const GridSpec& grid,
                                                   std::pair<std::int64_t, std::int64_t> bounds0,
                                                   std::int64_t k) {
    if (k < 0) throw std::invalid_argument("support_cone: k must be >= 0");
    const auto step = static_cast<std::int64_t>(std::ceil(grid.courant()));
    return {bounds0.first - k * step, bounds0.second + k * step};
}

}  // namespace wavefd
