#include "wavefd/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace wavefd {

namespace {

const SupportSeq& level(const DiscreteSolution& sol, std::int64_t k) {
    return sol.levels[static_cast<std::size_t>(k)];
}

void require_half_step(const DiscreteSolution& sol, std::int64_t k) {
    if (k < 0 || k > sol.grid.k_max - 1)
        throw std::out_of_range("energy: k must be in [0, k_max - 1]");
}

}  // namespace

double discrete_energy(const DiscreteSolution& sol, std::int64_t k) {
    require_half_step(sol, k);
    const GridSpec& g = sol.grid;
    const SupportSeq diff =
        combine(1.0 / g.dt, level(sol, k + 1), -1.0 / g.dt, level(sol, k));
    const double kinetic = 0.5 * dot_dx(diff, diff, g.dx);
    const SupportSeq stiff = apply_stiffness(level(sol, k), g.c, g.dx);
    const double potential = 0.5 * dot_dx(stiff, level(sol, k + 1), g.dx);
    return kinetic + potential;
}

EnergyTrace compute_energy_trace(const DiscreteSolution& sol) {
    EnergyTrace trace;
    trace.grid = sol.grid;
    trace.values.reserve(static_cast<std::size_t>(sol.grid.k_max));
    for (std::int64_t k = 0; k < sol.grid.k_max; ++k)
        trace.values.push_back(discrete_energy(sol, k));
    return trace;
}

double energy_increment_residual(const DiscreteSolution& sol, const std::vector<SupportSeq>& sh,
                                 std::int64_t k) {
    if (k < 1 || k > sol.grid.k_max - 1)
        throw std::out_of_range("energy_increment_residual: k must be in [1, k_max - 1]");
    const GridSpec& g = sol.grid;
    const double delta = discrete_energy(sol, k) - discrete_energy(sol, k - 1);
    const SupportSeq du = combine(1.0, level(sol, k + 1), -1.0, level(sol, k - 1));
    const double work = 0.5 * dot_dx(du, sh.at(static_cast<std::size_t>(k)), g.dx);
    return std::abs(delta - work);
}

double energy_lower_bound_gap(const DiscreteSolution& sol, std::int64_t k) {
    require_half_step(sol, k);
    const GridSpec& g = sol.grid;
    const double r = g.courant();
    const SupportSeq diff =
        combine(1.0 / g.dt, level(sol, k + 1), -1.0 / g.dt, level(sol, k));
    const double velocity_sq = dot_dx(diff, diff, g.dx);
    return discrete_energy(sol, k) - 0.5 * (1.0 - r * r) * velocity_sq;
}

std::pair<double, double> stability_bound_check(const DiscreteSolution& sol,
                                                const std::vector<SupportSeq>& sh, double t) {
    const GridSpec& g = sol.grid;
    if (t < g.dt || t > g.t_max)
        throw std::invalid_argument("stability_bound_check: t must be in [dt, t_max]");
    const std::int64_t k = time_index(g, t) - 1;
    const double e_k = discrete_energy(sol, k);
    const double e_0 = discrete_energy(sol, 0);
    if (e_k < 0.0 || e_0 < 0.0)
        throw std::domain_error("stability_bound_check: negative energy (CFL violation upstream)");
    // Constant kept in the literal form sqrt(2) / (2 sqrt(2 xi - xi^2)).
    const double constant = std::sqrt(2.0) / (2.0 * std::sqrt(2.0 * g.xi - g.xi * g.xi));
    double source_sum = 0.0;
    for (std::int64_t j = 1; j <= k; ++j)
        source_sum += norm_dx(sh.at(static_cast<std::size_t>(j)), g.dx);
    return {std::sqrt(e_k), std::sqrt(e_0) + constant * g.dt * source_sum};
}

}  // namespace wavefd
