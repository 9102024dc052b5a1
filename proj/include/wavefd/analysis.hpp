#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wavefd/continuous.hpp"
#include "wavefd/scheme.hpp"

namespace wavefd {

/// Signals a run whose error norms came out non-finite.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { convergence, truncation };

/// Per-level error sequences. For kind == convergence, levels[k] holds
/// exact_sample - computed at time index k in [0..k_max]. For kind ==
/// truncation the native time indexing runs from -1 to k_max - 1 and is
/// stored shifted by +1: levels[m + 1] holds the error of native index m
/// (this is the only place the shift appears).
struct ErrorField {
    FieldKind kind = FieldKind::convergence;
    GridSpec grid;
    std::vector<SupportSeq> levels;
};

/// Pointwise difference between the sampled exact solution and the
/// computed one, per time level.
ErrorField convergence_error(const DiscreteSolution& sol, const ExactSolution& exact);

/// Residuals of the scheme applied to the sampled exact solution:
/// native index m >= 1 holds the interior residual at step m + 1, index 0
/// the first-step residual against u1, index -1 the sampling residual
/// against u0. Sampling of u0/u1/s matches sample_inputs.
ErrorField truncation_error(const GridSpec& grid, const ExactSolution& exact,
                            const CauchyProblem& prob);

/// Max over stored levels of the dx-weighted norm.
double max_norm_over_time(const ErrorField& field);

struct RefinementRow {
    double dx = 0.0;
    double dt = 0.0;
    double max_norm = 0.0;
};

/// Log-log fit of max_norm against dx across a fixed-Courant refinement
/// family. fitted_constant is exp of the fit intercept. degenerate is set
/// (and the fit left as NaN) when a level has exactly zero error.
struct RefinementReport {
    std::vector<RefinementRow> rows;
    double fitted_order = 0.0;
    double fitted_constant = 0.0;
    double courant = 0.0;
    bool degenerate = false;
};

/// Runs levels refinement levels with dx and dt both halved per level
/// (Courant ratio pinned), solving and measuring the requested error kind.
/// Requires levels >= 3 and a base grid that satisfies the CFL condition.
/// Throws InstabilityError if any level yields a non-finite norm.
RefinementReport refinement_study(const CauchyProblem& prob, const ExactSolution& exact,
                                  const GridSpec& base, int levels, FieldKind kind);

/// (max over levels of nonzero count) * dx^2 on the left, and the
/// grid-independent budget (chi2 - chi1) + 2 t_max c + 2 c t_max / zeta on
/// the right. The left side stays below the right whenever the Courant
/// number keeps its lower bound zeta.
std::pair<double, double> nonzero_count_bound(const GridSpec& grid, const CauchyProblem& prob,
                                              const ErrorField& field);

/// Re-runs the scheme with the convergence error's own inputs: zero initial
/// position, first-level error over dt as initial velocity, and the
/// truncation levels as source. The result reproduces the convergence error
/// itself; disagreement indicates a broken stepper or error field.
DiscreteSolution replay_error_scheme(const ErrorField& conv, const ErrorField& trunc);

}  // namespace wavefd
