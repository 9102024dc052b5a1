#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wavefd/continuous.hpp"
#include "wavefd/support_seq.hpp"

namespace wavefd {

/// Uniform space-time grid over [x_min, x_max] x [0, t_max] together with
/// the CFL band [zeta, 1 - xi] for the Courant number c dt / dx.
/// j_max = floor((x_max - x_min)/dx), k_max = floor(t_max/dt); both floors
/// are taken verbatim, with no epsilon adjustment at exact multiples.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    double t_max = 1.0;
    double dx = 0.1;
    double dt = 0.05;
    double c = 1.0;
    double zeta = 0.3;
    double xi = 0.2;
    std::int64_t j_max = 0;
    std::int64_t k_max = 0;

    double courant() const { return c * dt / dx; }
    double x_at(std::int64_t j) const { return x_min + static_cast<double>(j) * dx; }
    double t_at(std::int64_t k) const { return static_cast<double>(k) * dt; }
};

/// Validates the numeric constraints and fills in j_max / k_max.
GridSpec make_grid(double x_min, double x_max, double t_max, double dx, double dt, double c,
                   double zeta, double xi);

/// floor(t/dt) clamped to [0, k_max]. Rejects t outside [0, t_max].
std::int64_t time_index(const GridSpec& grid, double t);

/// floor((x - x_min)/dx) clamped to [0, j_max]. Rejects x outside the domain.
std::int64_t space_index(const GridSpec& grid, double x);

/// True iff zeta <= c dt / dx <= 1 - xi.
bool check_cfl(const GridSpec& grid);

/// Discrete Cauchy data sampled at the grid nodes.
struct SampledInputs {
    SupportSeq u0h;
    SupportSeq u1h;
    std::vector<SupportSeq> sh;  // one level per k in [0..k_max]
};

/// Samples u0, u1, s at the grid nodes. Support windows are derived from
/// [chi1, chi2] (widened by the propagation cone for s) and clipped to
/// [0..j_max]; entries sampled there may still be zero.
SampledInputs sample_inputs(const CauchyProblem& prob, const GridSpec& grid);

/// Full space-time history of the three-point scheme: levels[k] is u_h^k.
/// Indices j = -1 and j = j_max + 1 (and beyond) read as exactly 0 through
/// the SupportSeq window contract; the stepper never writes outside
/// [0..j_max].
struct DiscreteSolution {
    GridSpec grid;
    std::vector<SupportSeq> levels;
};

/// Runs the explicit stepper:
///   u^0 = u0h
///   u^1 = u^0 + dt u1h - (dt^2/2) K u^0
///   u^k = 2 u^(k-1) - u^(k-2) + dt^2 (sh[k-1] - K u^(k-1))   for k >= 2
/// with K the apply_stiffness operator. Rejects grids that fail check_cfl
/// and source histories whose length is not k_max + 1.
DiscreteSolution solve(const GridSpec& grid, const SupportSeq& u0h, const SupportSeq& u1h,
                       const std::vector<SupportSeq>& sh);

/// Same stepper without the CFL gate. Exists only so instability can be
/// demonstrated; everything else goes through solve.
DiscreteSolution solve_unchecked(const GridSpec& grid, const SupportSeq& u0h,
                                 const SupportSeq& u1h, const std::vector<SupportSeq>& sh);

/// Memory-light variant keeping a rolling two-level window; returns only
/// the final level, bit-identical to solve(...).levels.back(). Not usable
/// for the analyses, which need the full history.
SupportSeq solve_rolling(const GridSpec& grid, const SupportSeq& u0h, const SupportSeq& u1h,
                         const std::vector<SupportSeq>& sh);

/// Index window outside which level k is predicted to be exactly zero:
/// the level-0 bounds widened by k * ceil(c dt / dx) on each side.
std::pair<std::int64_t, std::int64_t> support_cone(const GridSpec& grid,
                                                   std::pair<std::int64_t, std::int64_t> bounds0,
                                                   std::int64_t k);

}  // namespace wavefd
