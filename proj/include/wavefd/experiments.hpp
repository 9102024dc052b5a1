#pragma once

#include <iosfwd>
#include <string>

#include "wavefd/run_config.hpp"

namespace wavefd {

/// Process exit categories shared by the CLI and the experiment drivers.
enum class ExitCode : int {
    ok = 0,
    internal = 1,
    config_error = 2,
    cfl_rejected = 3,
    instability = 4,
    check_failed = 5,
};

/// Runs the experiment named by cfg.experiment, writes its CSV artifact,
/// and logs a short human-readable summary. Output is byte-stable for a
/// fixed config and seed.
ExitCode run_experiment(const RunConfig& cfg, std::ostream& log);

/// 17-significant-digit rendering; round-trips 64-bit reals exactly.
std::string fmt_real(double v);

}  // namespace wavefd
