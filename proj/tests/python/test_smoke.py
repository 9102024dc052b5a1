"""Smoke tests for the python bindings: one end-to-end pass over the main
operations, not a re-run of the C++ suites."""

import math

import pytest

import wavefd


def test_sequence_algebra():
    f = wavefd.SupportSeq(0, [1.0, 2.0, 3.0])
    g = wavefd.combine(2.0, f, -1.0, wavefd.SupportSeq.unit(1))
    assert g.value(0) == 2.0
    assert g.value(1) == 3.0
    assert g.value(5) == 0.0
    assert wavefd.dot(f, f) == 14.0
    assert wavefd.norm_dx(wavefd.SupportSeq.unit(0), 1.0) == 1.0
    stiff = wavefd.apply_stiffness(wavefd.SupportSeq.unit(0), 1.0, 1.0)
    assert (stiff.value(-1), stiff.value(0), stiff.value(1)) == (-1.0, 2.0, -1.0)


def test_grid_and_cfl():
    grid = wavefd.make_grid(-4.0, 4.0, 2.0, 0.1, 0.05, 1.0, 0.3, 0.2)
    assert grid.courant() == pytest.approx(0.5)
    assert wavefd.check_cfl(grid)
    assert wavefd.time_index(grid, 1.25) == 25
    with pytest.raises(ValueError):
        wavefd.make_grid(4.0, -4.0, 2.0, 0.1, 0.05, 1.0, 0.3, 0.2)


def test_solve_conserves_energy_and_cone():
    prob, exact = wavefd.traveling_bump_problem(0.0, 1.0, 6, 1.0)
    grid = wavefd.make_grid(-4.0, 4.0, 2.0, 0.1, 0.05, 1.0, 0.3, 0.2)
    inputs = wavefd.sample_inputs(prob, grid)
    sol = wavefd.solve(grid, inputs.u0h, inputs.u1h, inputs.sh)
    trace = wavefd.energy_trace(sol)
    drift = max(abs(e - trace[0]) for e in trace)
    assert drift <= 1e-10 * grid.k_max * (1.0 + abs(trace[0]))

    bounds0 = (inputs.u0h.lo, inputs.u0h.hi)
    for k, level in enumerate(sol.levels):
        lo, hi = wavefd.support_cone(grid, bounds0, k)
        nz = wavefd.nonzero_bounds(level)
        if nz is not None:
            assert lo <= nz[0] and nz[1] <= hi


def test_refinement_order_near_two():
    prob, exact = wavefd.traveling_bump_problem(0.0, 1.0, 6, 1.0)
    base = wavefd.make_grid(-4.0, 4.0, 2.0, 0.2, 0.1, 1.0, 0.3, 0.2)
    report = wavefd.refinement_study(prob, exact, base, 3, wavefd.FieldKind.convergence)
    assert not report.degenerate
    assert 1.5 <= report.fitted_order <= 2.5


def test_dalembert_matches_closed_form():
    prob, exact = wavefd.traveling_bump_problem(0.0, 1.0, 6, 1.0)
    for x, t in [(-0.5, 0.0), (0.4, 0.7), (1.5, 1.2)]:
        assert wavefd.dalembert_eval(prob, x, t, 1e-8) == pytest.approx(
            exact.u(x, t), abs=1e-7
        )


def test_python_callables_make_a_problem():
    half = 0.5

    def u0(x):
        y = x / half
        return (1.0 - y * y) ** 6 if abs(y) < 1.0 else 0.0

    prob = wavefd.CauchyProblem(
        u0=u0,
        u1=lambda x: 0.0,
        s=lambda x, t: 0.0,
        c=1.0,
        chi1=-half,
        chi2=half,
    )
    grid = wavefd.make_grid(-4.0, 4.0, 1.0, 0.1, 0.05, 1.0, 0.3, 0.2)
    inputs = wavefd.sample_inputs(prob, grid)
    sol = wavefd.solve(grid, inputs.u0h, inputs.u1h, inputs.sh)
    assert len(sol.levels) == grid.k_max + 1
    assert math.isfinite(wavefd.discrete_energy(sol, 0))
