#include "wavefd/run_config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wavefd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& reason) {
    throw ConfigError(path + ":" + std::to_string(line) + ": " + reason);
}

double parse_real(const std::string& path, int line, const std::string& key,
                  const std::string& raw) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(path, line, key + ": expected a real number, got '" + raw + "'");
    }
}

std::int64_t parse_int(const std::string& path, int line, const std::string& key,
                       const std::string& raw) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(path, line, key + ": expected an integer, got '" + raw + "'");
    }
}

}  // namespace

bool is_known_experiment(const std::string& name) {
    static const std::set<std::string> known = {"solve",     "converge", "consist",   "energy",
                                                "stability", "cfl-demo", "cone-check"};
    return known.count(name) > 0;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");

    using Setter = std::function<void(int, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"problem.kind",
         [&](int line, const std::string& v) {
             if (v != "traveling_bump")
                 fail(path, line, "problem.kind: unknown kind '" + v + "'");
             cfg.problem_kind = v;
         }},
        {"problem.center",
         [&](int line, const std::string& v) {
             cfg.problem_center = parse_real(path, line, "problem.center", v);
         }},
        {"problem.half_width",
         [&](int line, const std::string& v) {
             cfg.problem_half_width = parse_real(path, line, "problem.half_width", v);
             if (!(cfg.problem_half_width > 0.0))
                 fail(path, line, "problem.half_width: must be > 0");
         }},
        {"problem.p",
         [&](int line, const std::string& v) {
             cfg.problem_p = static_cast<int>(parse_int(path, line, "problem.p", v));
             if (cfg.problem_p < 5) fail(path, line, "problem.p: must be >= 5");
         }},
        {"problem.c",
         [&](int line, const std::string& v) {
             cfg.problem_c = parse_real(path, line, "problem.c", v);
             if (!(cfg.problem_c > 0.0)) fail(path, line, "problem.c: must be > 0");
         }},
        {"grid.x_min",
         [&](int line, const std::string& v) {
             cfg.grid_x_min = parse_real(path, line, "grid.x_min", v);
         }},
        {"grid.x_max",
         [&](int line, const std::string& v) {
             cfg.grid_x_max = parse_real(path, line, "grid.x_max", v);
         }},
        {"grid.t_max",
         [&](int line, const std::string& v) {
             cfg.grid_t_max = parse_real(path, line, "grid.t_max", v);
             if (!(cfg.grid_t_max > 0.0)) fail(path, line, "grid.t_max: must be > 0");
         }},
        {"grid.dx",
         [&](int line, const std::string& v) {
             cfg.grid_dx = parse_real(path, line, "grid.dx", v);
             if (!(cfg.grid_dx > 0.0)) fail(path, line, "grid.dx: must be > 0");
         }},
        {"grid.dt",
         [&](int line, const std::string& v) {
             cfg.grid_dt = parse_real(path, line, "grid.dt", v);
             if (!(cfg.grid_dt > 0.0)) fail(path, line, "grid.dt: must be > 0");
         }},
        {"grid.zeta",
         [&](int line, const std::string& v) {
             cfg.grid_zeta = parse_real(path, line, "grid.zeta", v);
             if (!(cfg.grid_zeta > 0.0 && cfg.grid_zeta < 1.0))
                 fail(path, line, "grid.zeta: must be in (0, 1)");
         }},
        {"grid.xi",
         [&](int line, const std::string& v) {
             cfg.grid_xi = parse_real(path, line, "grid.xi", v);
             if (!(cfg.grid_xi > 0.0 && cfg.grid_xi < 1.0))
                 fail(path, line, "grid.xi: must be in (0, 1)");
         }},
        {"experiment",
         [&](int line, const std::string& v) {
             if (!is_known_experiment(v)) fail(path, line, "experiment: unknown name '" + v + "'");
             if (!cfg.experiment.empty() && cfg.experiment != v)
                 fail(path, line,
                      "experiment: '" + v + "' conflicts with the requested '" + cfg.experiment +
                          "'");
             cfg.experiment = v;
         }},
        {"levels",
         [&](int line, const std::string& v) {
             cfg.levels = static_cast<int>(parse_int(path, line, "levels", v));
             if (cfg.levels < 3) fail(path, line, "levels: must be >= 3");
         }},
        {"seed",
         [&](int line, const std::string& v) {
             const std::int64_t s = parse_int(path, line, "seed", v);
             if (s < 0) fail(path, line, "seed: must be >= 0");
             cfg.seed = static_cast<std::uint64_t>(s);
         }},
        {"output_path",
         [&](int line, const std::string& v) {
             if (v.empty()) fail(path, line, "output_path: must not be empty");
             cfg.output_path = v;
         }},
    };

    std::set<std::string> seen;
    std::string raw_line;
    int line = 0;
    while (std::getline(in, raw_line)) {
        ++line;
        std::string text = raw_line;
        if (const auto hash = text.find('#'); hash != std::string::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) fail(path, line, "expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) fail(path, line, "unknown key '" + key + "'");
        if (!seen.insert(key).second) fail(path, line, "duplicate key '" + key + "'");
        it->second(line, value);
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.problem_kind != "traveling_bump")
        throw ConfigError("problem.kind: unknown kind '" + cfg.problem_kind + "'");
    if (!(cfg.grid_x_min < cfg.grid_x_max))
        throw ConfigError("grid.x_min/grid.x_max: requires x_min < x_max");
    if (!(cfg.grid_zeta <= 1.0 - cfg.grid_xi))
        throw ConfigError("grid.zeta/grid.xi: requires zeta <= 1 - xi");
    if (cfg.experiment.empty() || !is_known_experiment(cfg.experiment))
        throw ConfigError("experiment: none selected");
}

std::string config_key_reference() {
    std::ostringstream out;
    out << "Config keys (flat 'key = value' lines, '#' comments):\n"
        << "  problem.kind        problem family; only 'traveling_bump' (default)\n"
        << "  problem.center      bump center (default 0.0)\n"
        << "  problem.half_width  bump half width, > 0 (default 1.0)\n"
        << "  problem.p           bump exponent, integer >= 5 (default 6)\n"
        << "  problem.c           propagation velocity, > 0 (default 1.0)\n"
        << "  grid.x_min          left domain edge (default -4.0)\n"
        << "  grid.x_max          right domain edge, > x_min (default 4.0)\n"
        << "  grid.t_max          final time, > 0 (default 2.0)\n"
        << "  grid.dx             space step, > 0 (default 0.1)\n"
        << "  grid.dt             time step, > 0 (default 0.05)\n"
        << "  grid.zeta           lower Courant bound, in (0,1) (default 0.3)\n"
        << "  grid.xi             upper-margin parameter, in (0,1), zeta <= 1-xi (default 0.2)\n"
        << "  experiment          solve|converge|consist|energy|stability|cfl-demo|cone-check;\n"
        << "                      optional, must match the subcommand when present\n"
        << "  levels              refinement levels for converge/consist, >= 3 (default 4)\n"
        << "  seed                RNG seed for the stability source, >= 0 (default 1)\n"
        << "  output_path         CSV destination (default '<experiment>.csv')\n";
    return out.str();
}

}  // namespace wavefd
