"""Three-point finite-difference scheme for the 1D acoustic wave equation.

Thin wrapper over the C++ core: sequence algebra with finite support
windows, the explicit stepper with its CFL gate, discrete-energy
diagnostics, refinement studies, and the d'Alembert quadrature oracle.
"""

from ._core import (
    CauchyProblem,
    DiscreteSolution,
    ErrorField,
    ExactSolution,
    FieldKind,
    GridSpec,
    InstabilityError,
    QuadratureError,
    RefinementReport,
    RefinementRow,
    SampledInputs,
    SupportSeq,
    apply_stiffness,
    check_cfl,
    combine,
    continuous_energy,
    convergence_error,
    cubic_time_source_problem,
    dalembert_eval,
    discrete_energy,
    dot,
    dot_dx,
    energy_increment_residual,
    energy_lower_bound_gap,
    energy_trace,
    make_grid,
    max_norm_over_time,
    nonzero_bounds,
    nonzero_count,
    nonzero_count_bound,
    norm_dx,
    refinement_study,
    replay_error_scheme,
    sample_inputs,
    shift,
    solve,
    solve_unchecked,
    space_index,
    stability_bound_check,
    support_cone,
    support_interval,
    time_index,
    traveling_bump_problem,
    truncation_error,
)

__all__ = [
    "CauchyProblem",
    "DiscreteSolution",
    "ErrorField",
    "ExactSolution",
    "FieldKind",
    "GridSpec",
    "InstabilityError",
    "QuadratureError",
    "RefinementReport",
    "RefinementRow",
    "SampledInputs",
    "SupportSeq",
    "apply_stiffness",
    "check_cfl",
    "combine",
    "continuous_energy",
    "convergence_error",
    "cubic_time_source_problem",
    "dalembert_eval",
    "discrete_energy",
    "dot",
    "dot_dx",
    "energy_increment_residual",
    "energy_lower_bound_gap",
    "energy_trace",
    "make_grid",
    "max_norm_over_time",
    "nonzero_bounds",
    "nonzero_count",
    "nonzero_count_bound",
    "norm_dx",
    "refinement_study",
    "replay_error_scheme",
    "sample_inputs",
    "shift",
    "solve",
    "solve_unchecked",
    "space_index",
    "stability_bound_check",
    "support_cone",
    "support_interval",
    "time_index",
    "traveling_bump_problem",
    "truncation_error",
]
