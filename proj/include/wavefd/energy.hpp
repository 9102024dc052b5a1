#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wavefd/scheme.hpp"

namespace wavefd {

/// Half-step discrete energies E^(k+1/2) for k = 0..k_max-1.
struct EnergyTrace {
    GridSpec grid;
    std::vector<double> values;
};

/// Discrete energy between steps k and k+1:
///   1/2 ||(u^(k+1) - u^k)/dt||_dx^2 + 1/2 <K u^k, u^(k+1)>_dx
/// with K the apply_stiffness operator. Valid for k in [0, k_max-1].
double discrete_energy(const DiscreteSolution& sol, std::int64_t k);

EnergyTrace compute_energy_trace(const DiscreteSolution& sol);

/// Residual of the per-step energy identity
///   E^(k+1/2) - E^(k-1/2) = 1/2 <u^(k+1) - u^(k-1), sh[k]>_dx,
/// returned as an absolute value. Valid for k in [1, k_max-1]. For exact
/// arithmetic the residual is zero; in doubles it stays below
/// 1e-10 * (1 + |E^(k+1/2)| + |E^(k-1/2)|).
double energy_increment_residual(const DiscreteSolution& sol, const std::vector<SupportSeq>& sh,
                                 std::int64_t k);

/// E^(k+1/2) minus its kinetic underestimate
///   1/2 (1 - r^2) ||(u^(k+1) - u^k)/dt||_dx^2,   r = c dt / dx.
/// Nonnegative (up to round-off) whenever the CFL condition holds, which
/// also makes the energy itself nonnegative.
double energy_lower_bound_gap(const DiscreteSolution& sol, std::int64_t k);

/// Both sides of the stability overestimate at time t (with k = floor(t/dt) - 1):
///   sqrt(E^(k+1/2)) <= sqrt(E^(1/2))
///                      + sqrt(2)/(2 sqrt(2 xi - xi^2)) * dt * sum_{j=1}^{k} ||sh[j]||_dx.
/// Requires dt <= t <= t_max and nonnegative energies (CFL regime).
std::pair<double, double> stability_bound_check(const DiscreteSolution& sol,
                                                const std::vector<SupportSeq>& sh, double t);

}  // namespace wavefd
