#include "wavefd/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <vector>

#include "wavefd/analysis.hpp"
#include "wavefd/continuous.hpp"
#include "wavefd/energy.hpp"
#include "wavefd/scheme.hpp"

namespace wavefd {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kBlowupFactor = 1e3;

struct Setup {
    CauchyProblem prob;
    ExactSolution exact;
    GridSpec grid;
};

Setup make_setup(const RunConfig& cfg) {
    auto [prob, exact] = traveling_bump_problem(cfg.problem_center, cfg.problem_half_width,
                                                cfg.problem_p, cfg.problem_c);
    GridSpec grid = make_grid(cfg.grid_x_min, cfg.grid_x_max, cfg.grid_t_max, cfg.grid_dx,
                              cfg.grid_dt, cfg.problem_c, cfg.grid_zeta, cfg.grid_xi);
    return {std::move(prob), std::move(exact), grid};
}

std::string output_path(const RunConfig& cfg) {
    return cfg.output_path.empty() ? cfg.experiment + ".csv" : cfg.output_path;
}

std::ofstream open_csv(const RunConfig& cfg) {
    const std::string path = output_path(cfg);
    std::ofstream out(path, std::ios::binary);  // binary keeps line endings byte-stable
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

void write_meta(std::ofstream& out, const RunConfig& cfg, const GridSpec& grid,
                const std::string& checks) {
    out << "# experiment=" << cfg.experiment << "\n";
    out << "# problem=" << cfg.problem_kind << " center=" << fmt_real(cfg.problem_center)
        << " half_width=" << fmt_real(cfg.problem_half_width) << " p=" << cfg.problem_p
        << " c=" << fmt_real(cfg.problem_c) << "\n";
    out << "# grid=x_min=" << fmt_real(grid.x_min) << " x_max=" << fmt_real(grid.x_max)
        << " t_max=" << fmt_real(grid.t_max) << " dx=" << fmt_real(grid.dx)
        << " dt=" << fmt_real(grid.dt) << " zeta=" << fmt_real(grid.zeta)
        << " xi=" << fmt_real(grid.xi) << " j_max=" << grid.j_max << " k_max=" << grid.k_max
        << "\n";
    out << "# courant=" << fmt_real(grid.courant()) << "\n";
    out << "# checks=" << checks << "\n";
}

std::pair<std::int64_t, std::int64_t> initial_bounds(const SampledInputs& in) {
    std::int64_t lo = 0, hi = -1;
    auto fold = [&](const SupportSeq& f) {
        if (f.window_empty()) return;
        if (hi < lo) {
            lo = f.lo();
            hi = f.hi();
        } else {
            lo = std::min(lo, f.lo());
            hi = std::max(hi, f.hi());
        }
    };
    fold(in.u0h);
    fold(in.u1h);
    if (!in.sh.empty()) fold(in.sh.front());
    return {lo, hi};
}

// Seeded source history for the stability run: uniform values on the part of
// the propagation cone far enough from the domain edges that the run never
// touches them (the energy identities assume an untouched boundary).
std::vector<SupportSeq> random_source(const GridSpec& grid, const CauchyProblem& prob,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<SupportSeq> sh(static_cast<std::size_t>(grid.k_max) + 1);
    for (std::int64_t k = 1; k <= grid.k_max - 1; ++k) {
        const auto [a, b] = support_interval(prob, grid.t_at(k));
        std::int64_t lo = static_cast<std::int64_t>(std::floor((a - grid.x_min) / grid.dx));
        std::int64_t hi = static_cast<std::int64_t>(std::ceil((b - grid.x_min) / grid.dx));
        const std::int64_t margin = grid.k_max - k;
        lo = std::max(lo, margin);
        hi = std::min(hi, grid.j_max - margin);
        if (hi < lo) continue;
        std::vector<double> vals(static_cast<std::size_t>(hi - lo + 1));
        for (double& v : vals) v = uni(rng);
        sh[static_cast<std::size_t>(k)] = SupportSeq(lo, std::move(vals));
    }
    return sh;
}

ExitCode run_solve(const RunConfig& cfg, const Setup& s, std::ostream& log) {
    const SampledInputs in = sample_inputs(s.prob, s.grid);
    const DiscreteSolution sol = solve(s.grid, in.u0h, in.u1h, in.sh);
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid, "three-point stepper snapshots; boundary indices pinned to zero");
    out << "k,j,x,t,u\n";
    for (std::int64_t k = 0; k <= s.grid.k_max; ++k) {
        const SupportSeq& level = sol.levels[static_cast<std::size_t>(k)];
        for (std::int64_t j = 0; j <= s.grid.j_max; ++j) {
            const double u = level.value(j);
            if (!std::isfinite(u)) {
                log << "non-finite value at k=" << k << " j=" << j << "\n";
                return ExitCode::instability;
            }
            out << k << "," << j << "," << fmt_real(s.grid.x_at(j)) << ","
                << fmt_real(s.grid.t_at(k)) << "," << fmt_real(u) << "\n";
        }
    }
    log << "wrote " << output_path(cfg) << " (" << (s.grid.k_max + 1) << " levels x "
        << (s.grid.j_max + 1) << " points)\n";
    return ExitCode::ok;
}

ExitCode run_refinement(const RunConfig& cfg, const Setup& s, FieldKind kind, std::ostream& log) {
    const char* checks = kind == FieldKind::convergence
                             ? "convergence order fit at fixed courant ratio"
                             : "truncation order fit at fixed courant ratio";
    RefinementReport report;
    try {
        report = refinement_study(s.prob, s.exact, s.grid, cfg.levels, kind);
    } catch (const InstabilityError& e) {
        log << e.what() << "\n";
        return ExitCode::instability;
    }
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid, checks);
    out << "# levels=" << cfg.levels << "\n";
    out << "level,dx,dt,courant,max_norm\n";
    for (std::size_t l = 0; l < report.rows.size(); ++l) {
        const RefinementRow& row = report.rows[l];
        out << l << "," << fmt_real(row.dx) << "," << fmt_real(row.dt) << ","
            << fmt_real(report.courant) << "," << fmt_real(row.max_norm) << "\n";
    }
    out << "# fitted_order=" << fmt_real(report.fitted_order) << "\n";
    out << "# fitted_constant=" << fmt_real(report.fitted_constant) << "\n";
    if (report.degenerate) out << "# degenerate=1\n";
    if (report.degenerate)
        log << "degenerate refinement (zero error at some level); no order fitted\n";
    else
        log << "fitted_order=" << fmt_real(report.fitted_order)
            << " fitted_constant=" << fmt_real(report.fitted_constant) << "\n";
    log << "wrote " << output_path(cfg) << "\n";
    return ExitCode::ok;
}

ExitCode run_energy(const RunConfig& cfg, const Setup& s, std::ostream& log) {
    const SampledInputs in = sample_inputs(s.prob, s.grid);
    const DiscreteSolution sol = solve(s.grid, in.u0h, in.u1h, in.sh);
    const EnergyTrace trace = compute_energy_trace(sol);
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid,
               "discrete energy trace; per-step increment identity; kinetic lower bound");
    out << "k,t,E,increment_residual,lower_bound_gap\n";
    bool ok = true;
    for (std::int64_t k = 0; k < s.grid.k_max; ++k) {
        const double e = trace.values[static_cast<std::size_t>(k)];
        const double gap = energy_lower_bound_gap(sol, k);
        std::string residual_cell;
        if (k >= 1) {
            const double residual = energy_increment_residual(sol, in.sh, k);
            const double scale = 1.0 + std::abs(e) + std::abs(trace.values[static_cast<std::size_t>(k - 1)]);
            if (residual > kIdentityTol * scale) ok = false;
            residual_cell = fmt_real(residual);
        }
        const double gap_scale = 1.0 + std::abs(e) + std::abs(e - gap);
        if (gap < -kIdentityTol * gap_scale) ok = false;
        if (!std::isfinite(e)) {
            log << "non-finite energy at k=" << k << "\n";
            return ExitCode::instability;
        }
        out << k << "," << fmt_real((static_cast<double>(k) + 0.5) * s.grid.dt) << ","
            << fmt_real(e) << "," << residual_cell << "," << fmt_real(gap) << "\n";
    }
    log << "wrote " << output_path(cfg) << "\n";
    if (!ok) {
        log << "energy identity or lower bound violated beyond tolerance\n";
        return ExitCode::check_failed;
    }
    return ExitCode::ok;
}

ExitCode run_stability(const RunConfig& cfg, const Setup& s, std::ostream& log) {
    const SampledInputs in = sample_inputs(s.prob, s.grid);
    const std::vector<SupportSeq> sh = random_source(s.grid, s.prob, cfg.seed);
    const DiscreteSolution sol = solve(s.grid, in.u0h, in.u1h, sh);
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid,
               "sourced energy overestimate: sqrt(E) against initial energy plus source norms");
    out << "# seed=" << cfg.seed << "\n";
    out << "k,t,lhs_sqrtE,rhs_bound\n";
    bool ok = true;
    for (std::int64_t m = 1; m <= s.grid.k_max; ++m) {
        // k_max * dt can land one ulp past t_max; clamp to stay in range.
        const double t = std::min(s.grid.t_at(m), s.grid.t_max);
        const std::int64_t k = time_index(s.grid, t) - 1;
        const auto [lhs, rhs] = stability_bound_check(sol, sh, t);
        if (lhs > rhs + kIdentityTol * (1.0 + lhs + rhs)) ok = false;
        out << k << "," << fmt_real(t) << "," << fmt_real(lhs) << "," << fmt_real(rhs) << "\n";
    }
    log << "wrote " << output_path(cfg) << "\n";
    if (!ok) {
        log << "stability bound violated beyond tolerance\n";
        return ExitCode::check_failed;
    }
    return ExitCode::ok;
}

ExitCode run_cfl_demo(const RunConfig& cfg, const Setup& s, std::ostream& log) {
    const SampledInputs in = sample_inputs(s.prob, s.grid);
    const DiscreteSolution sol = solve_unchecked(s.grid, in.u0h, in.u1h, in.sh);
    const EnergyTrace trace = compute_energy_trace(sol);
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid, "unchecked run outside the CFL band; energy growth watch");
    out << "k,t,E,increment_residual,lower_bound_gap\n";
    const double e0 = trace.values.empty() ? 0.0 : trace.values.front();
    bool blew_up = false;
    for (std::int64_t k = 0; k < s.grid.k_max; ++k) {
        const double e = trace.values[static_cast<std::size_t>(k)];
        std::string residual_cell;
        if (k >= 1) residual_cell = fmt_real(energy_increment_residual(sol, in.sh, k));
        out << k << "," << fmt_real((static_cast<double>(k) + 0.5) * s.grid.dt) << ","
            << fmt_real(e) << "," << residual_cell << ","
            << fmt_real(energy_lower_bound_gap(sol, k)) << "\n";
        if (!std::isfinite(e) || std::abs(e) > kBlowupFactor * (1.0 + std::abs(e0)))
            blew_up = true;
    }
    log << "wrote " << output_path(cfg) << "\n";
    log << "courant=" << fmt_real(s.grid.courant()) << (check_cfl(s.grid) ? " (inside" : " (outside")
        << " the CFL band)\n";
    if (blew_up) {
        log << "instability detected: energy grew past " << fmt_real(kBlowupFactor)
            << " x (1 + initial energy)\n";
        return ExitCode::instability;
    }
    log << "no instability detected\n";
    return ExitCode::ok;
}

ExitCode run_cone_check(const RunConfig& cfg, const Setup& s, std::ostream& log) {
    const SampledInputs in = sample_inputs(s.prob, s.grid);
    const DiscreteSolution sol = solve(s.grid, in.u0h, in.u1h, in.sh);
    const auto bounds0 = initial_bounds(in);
    auto out = open_csv(cfg);
    write_meta(out, cfg, s.grid, "per-level nullity outside the predicted propagation cone");
    out << "k,predicted_lo,predicted_hi,actual_lo,actual_hi,violations\n";
    std::int64_t total_violations = 0;
    for (std::int64_t k = 0; k <= s.grid.k_max; ++k) {
        const auto [plo, phi] = support_cone(s.grid, bounds0, k);
        const SupportSeq& level = sol.levels[static_cast<std::size_t>(k)];
        std::int64_t violations = 0;
        for (std::int64_t j = level.lo(); j <= level.hi(); ++j)
            if (level.value(j) != 0.0 && (j < plo || j > phi)) ++violations;
        const auto actual = nonzero_bounds(level);
        const std::int64_t alo = actual ? actual->first : 0;
        const std::int64_t ahi = actual ? actual->second : -1;
        out << k << "," << plo << "," << phi << "," << alo << "," << ahi << "," << violations
            << "\n";
        total_violations += violations;
    }
    log << "wrote " << output_path(cfg) << "\n";
    if (total_violations > 0) {
        log << total_violations << " values outside the predicted cone\n";
        return ExitCode::check_failed;
    }
    log << "no values outside the predicted cone\n";
    return ExitCode::ok;
}

}  // namespace

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ExitCode run_experiment(const RunConfig& cfg, std::ostream& log) {
    try {
        validate(cfg);
        const Setup s = make_setup(cfg);
        if (cfg.experiment != "cfl-demo" && !check_cfl(s.grid)) {
            log << "CFL condition rejected: require zeta <= c*dt/dx <= 1 - xi, got c*dt/dx = "
                << fmt_real(s.grid.courant()) << " with zeta = " << fmt_real(s.grid.zeta)
                << ", 1 - xi = " << fmt_real(1.0 - s.grid.xi) << "\n";
            return ExitCode::cfl_rejected;
        }
        if (cfg.experiment == "solve") return run_solve(cfg, s, log);
        if (cfg.experiment == "converge") return run_refinement(cfg, s, FieldKind::convergence, log);
        if (cfg.experiment == "consist") return run_refinement(cfg, s, FieldKind::truncation, log);
        if (cfg.experiment == "energy") return run_energy(cfg, s, log);
        if (cfg.experiment == "stability") return run_stability(cfg, s, log);
        if (cfg.experiment == "cfl-demo") return run_cfl_demo(cfg, s, log);
        if (cfg.experiment == "cone-check") return run_cone_check(cfg, s, log);
        log << "unknown experiment '" << cfg.experiment << "'\n";
        return ExitCode::config_error;
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
        return ExitCode::config_error;
    } catch (const std::invalid_argument& e) {
        log << "invalid configuration: " << e.what() << "\n";
        return ExitCode::config_error;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return ExitCode::internal;
    }
}

}  // namespace wavefd
