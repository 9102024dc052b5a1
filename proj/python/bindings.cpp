#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavefd/analysis.hpp"
#include "wavefd/continuous.hpp"
#include "wavefd/energy.hpp"
#include "wavefd/quadrature.hpp"
#include "wavefd/scheme.hpp"
#include "wavefd/support_seq.hpp"

namespace py = pybind11;
using namespace wavefd;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-point finite-difference scheme for the 1D acoustic wave equation";

    py::class_<SupportSeq>(m, "SupportSeq")
        .def(py::init<>())
        .def(py::init<std::int64_t, std::vector<double>>(), py::arg("lo"), py::arg("values"))
        .def_static("zero", &SupportSeq::zero)
        .def_static("unit", &SupportSeq::unit, py::arg("i"))
        .def_property_readonly("lo", &SupportSeq::lo)
        .def_property_readonly("hi", &SupportSeq::hi)
        .def("value", &SupportSeq::value, py::arg("i"))
        .def("values", &SupportSeq::values)
        .def("__len__", &SupportSeq::window_size);

    m.def("combine", &combine, py::arg("alpha"), py::arg("f"), py::arg("beta"), py::arg("g"));
    m.def("shift", &shift, py::arg("f"), py::arg("k"));
    m.def("dot", &dot, py::arg("f"), py::arg("g"));
    m.def("dot_dx", &dot_dx, py::arg("f"), py::arg("g"), py::arg("dx"));
    m.def("norm_dx", &norm_dx, py::arg("f"), py::arg("dx"));
    m.def("apply_stiffness", &apply_stiffness, py::arg("v"), py::arg("c"), py::arg("dx"));
    m.def("nonzero_count", &nonzero_count, py::arg("f"));
    m.def("nonzero_bounds", &nonzero_bounds, py::arg("f"));

    py::class_<CauchyProblem>(m, "CauchyProblem")
        .def(py::init([](SpaceFn u0, SpaceFn u1, SpaceTimeFn s, double c, double chi1,
                         double chi2) {
                 CauchyProblem p;
                 p.u0 = std::move(u0);
                 p.u1 = std::move(u1);
                 p.s = std::move(s);
                 p.c = c;
                 p.chi1 = chi1;
                 p.chi2 = chi2;
                 return p;
             }),
             py::arg("u0"), py::arg("u1"), py::arg("s"), py::arg("c"), py::arg("chi1"),
             py::arg("chi2"))
        .def_readonly("c", &CauchyProblem::c)
        .def_readonly("chi1", &CauchyProblem::chi1)
        .def_readonly("chi2", &CauchyProblem::chi2)
        .def("u0", [](const CauchyProblem& p, double x) { return p.u0(x); })
        .def("u1", [](const CauchyProblem& p, double x) { return p.u1(x); })
        .def("s", [](const CauchyProblem& p, double x, double t) { return p.s(x, t); });

    py::class_<ExactSolution>(m, "ExactSolution")
        .def_readonly("regularity_order", &ExactSolution::regularity_order)
        .def("u", [](const ExactSolution& s, double x, double t) { return s.u(x, t); });

    m.def("traveling_bump_problem", &traveling_bump_problem, py::arg("center"),
          py::arg("half_width"), py::arg("p"), py::arg("c"));
    m.def("cubic_time_source_problem", &cubic_time_source_problem, py::arg("center"),
          py::arg("half_width"), py::arg("p"), py::arg("c"));
    m.def("dalembert_eval", &dalembert_eval, py::arg("prob"), py::arg("x"), py::arg("t"),
          py::arg("tol"));
    m.def("support_interval", &support_interval, py::arg("prob"), py::arg("t"));
    m.def("continuous_energy", &continuous_energy, py::arg("sol"), py::arg("prob"), py::arg("t"),
          py::arg("h"), py::arg("tol"));

    py::class_<GridSpec>(m, "GridSpec")
        .def_readonly("x_min", &GridSpec::x_min)
        .def_readonly("x_max", &GridSpec::x_max)
        .def_readonly("t_max", &GridSpec::t_max)
        .def_readonly("dx", &GridSpec::dx)
        .def_readonly("dt", &GridSpec::dt)
        .def_readonly("c", &GridSpec::c)
        .def_readonly("zeta", &GridSpec::zeta)
        .def_readonly("xi", &GridSpec::xi)
        .def_readonly("j_max", &GridSpec::j_max)
        .def_readonly("k_max", &GridSpec::k_max)
        .def("courant", &GridSpec::courant)
        .def("x_at", &GridSpec::x_at, py::arg("j"))
        .def("t_at", &GridSpec::t_at, py::arg("k"));

    m.def("make_grid", &make_grid, py::arg("x_min"), py::arg("x_max"), py::arg("t_max"),
          py::arg("dx"), py::arg("dt"), py::arg("c"), py::arg("zeta"), py::arg("xi"));
    m.def("time_index", &time_index, py::arg("grid"), py::arg("t"));
    m.def("space_index", &space_index, py::arg("grid"), py::arg("x"));
    m.def("check_cfl", &check_cfl, py::arg("grid"));

    py::class_<SampledInputs>(m, "SampledInputs")
        .def_readonly("u0h", &SampledInputs::u0h)
        .def_readonly("u1h", &SampledInputs::u1h)
        .def_readonly("sh", &SampledInputs::sh);

    m.def("sample_inputs", &sample_inputs, py::arg("prob"), py::arg("grid"));

    py::class_<DiscreteSolution>(m, "DiscreteSolution")
        .def_readonly("grid", &DiscreteSolution::grid)
        .def_readonly("levels", &DiscreteSolution::levels);

    m.def("solve", &solve, py::arg("grid"), py::arg("u0h"), py::arg("u1h"), py::arg("sh"));
    m.def("solve_unchecked", &solve_unchecked, py::arg("grid"), py::arg("u0h"), py::arg("u1h"),
          py::arg("sh"));
    m.def("support_cone", &support_cone, py::arg("grid"), py::arg("bounds0"), py::arg("k"));

    m.def("discrete_energy", &discrete_energy, py::arg("sol"), py::arg("k"));
    m.def(
        "energy_trace",
        [](const DiscreteSolution& sol) { return compute_energy_trace(sol).values; },
        py::arg("sol"));
    m.def("energy_increment_residual", &energy_increment_residual, py::arg("sol"), py::arg("sh"),
          py::arg("k"));
    m.def("energy_lower_bound_gap", &energy_lower_bound_gap, py::arg("sol"), py::arg("k"));
    m.def("stability_bound_check", &stability_bound_check, py::arg("sol"), py::arg("sh"),
          py::arg("t"));

    py::enum_<FieldKind>(m, "FieldKind")
        .value("convergence", FieldKind::convergence)
        .value("truncation", FieldKind::truncation);

    py::class_<ErrorField>(m, "ErrorField")
        .def_readonly("kind", &ErrorField::kind)
        .def_readonly("grid", &ErrorField::grid)
        .def_readonly("levels", &ErrorField::levels);

    m.def("convergence_error", &convergence_error, py::arg("sol"), py::arg("exact"));
    m.def("truncation_error", &truncation_error, py::arg("grid"), py::arg("exact"),
          py::arg("prob"));
    m.def("max_norm_over_time", &max_norm_over_time, py::arg("field"));

    py::class_<RefinementRow>(m, "RefinementRow")
        .def_readonly("dx", &RefinementRow::dx)
        .def_readonly("dt", &RefinementRow::dt)
        .def_readonly("max_norm", &RefinementRow::max_norm);

    py::class_<RefinementReport>(m, "RefinementReport")
        .def_readonly("rows", &RefinementReport::rows)
        .def_readonly("fitted_order", &RefinementReport::fitted_order)
        .def_readonly("fitted_constant", &RefinementReport::fitted_constant)
        .def_readonly("courant", &RefinementReport::courant)
        .def_readonly("degenerate", &RefinementReport::degenerate);

    m.def("refinement_study", &refinement_study, py::arg("prob"), py::arg("exact"),
          py::arg("base"), py::arg("levels"), py::arg("kind"));
    m.def("nonzero_count_bound", &nonzero_count_bound, py::arg("grid"), py::arg("prob"),
          py::arg("field"));
    m.def("replay_error_scheme", &replay_error_scheme, py::arg("conv"), py::arg("trunc"));

    py::register_exception<QuadratureError>(m, "QuadratureError");
    py::register_exception<InstabilityError>(m, "InstabilityError");
}
