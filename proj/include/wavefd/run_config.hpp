#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wavefd {

/// Raised on malformed or invalid configuration; the message carries
/// "<path>:<line>: <reason>" whenever a specific line is at fault.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One experiment run: problem family, grid, experiment selector, and
/// output controls. Field names double as the config-file keys (dotted
/// prefixes for the problem and grid groups).
struct RunConfig {
    // problem.*
    std::string problem_kind = "traveling_bump";
    double problem_center = 0.0;
    double problem_half_width = 1.0;
    int problem_p = 6;
    double problem_c = 1.0;
    // grid.*
    double grid_x_min = -4.0;
    double grid_x_max = 4.0;
    double grid_t_max = 2.0;
    double grid_dx = 0.1;
    double grid_dt = 0.05;
    double grid_zeta = 0.3;
    double grid_xi = 0.2;
    // top-level keys
    std::string experiment;  // solve|converge|consist|energy|stability|cfl-demo|cone-check
    int levels = 4;
    std::uint64_t seed = 1;
    std::string output_path;
};

/// Parses a flat "key = value" file (one pair per line, '#' comments) onto
/// cfg. Unknown keys, duplicate keys, bad values, and per-key numeric
/// constraint violations are reported with their line number.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Cross-field validation (domain ordering, CFL band shape, problem kind).
void validate(const RunConfig& cfg);

/// The help text listing every config key with its meaning and constraint.
std::string config_key_reference();

bool is_known_experiment(const std::string& name);

}  // namespace wavefd
