#include <cstring>
#include <iostream>
#include <string>

#include "wavefd/experiments.hpp"
#include "wavefd/run_config.hpp"

namespace {

void print_usage(std::ostream& out) {
    out << "wavefd — explicit three-point scheme for the 1D acoustic wave equation\n"
        << "\n"
        << "Usage: wavefd <experiment> [--config <path>] [--out <path>]\n"
        << "                           [--levels <n>] [--seed <n>]\n"
        << "       wavefd --help\n"
        << "\n"
        << "Experiments:\n"
        << "  solve       run the stepper and dump space-time snapshots\n"
        << "  converge    refinement study of the solution error; fits its order\n"
        << "  consist     refinement study of the scheme residual; fits its order\n"
        << "  energy      discrete energy trace with the per-step identity and\n"
        << "              kinetic lower bound\n"
        << "  stability   sourced run (seeded source) checking the energy\n"
        << "              overestimate at every grid time\n"
        << "  cfl-demo    unchecked run for grids outside the CFL band; reports\n"
        << "              instability when the energy blows up\n"
        << "  cone-check  verify nullity outside the predicted propagation cone\n"
        << "\n"
        << "Flags override config-file values; defaults apply otherwise.\n"
        << "\n"
        << wavefd::config_key_reference() << "\n"
        << "Exit codes: 0 ok, 1 internal error, 2 config error, 3 CFL rejected,\n"
        << "            4 instability detected, 5 property check failed\n";
}

}  // namespace

int main(int argc, char** argv) {
    using wavefd::ExitCode;
    if (argc < 2) {
        print_usage(std::cerr);
        return static_cast<int>(ExitCode::config_error);
    }
    const std::string verb = argv[1];
    if (verb == "--help" || verb == "-h" || verb == "help") {
        print_usage(std::cout);
        return static_cast<int>(ExitCode::ok);
    }
    if (!wavefd::is_known_experiment(verb)) {
        std::cerr << "unknown experiment '" << verb << "'\n\n";
        print_usage(std::cerr);
        return static_cast<int>(ExitCode::config_error);
    }

    std::string config_path;
    std::string out_path;
    std::string levels_arg;
    std::string seed_arg;
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* name) -> std::string {
            if (i + 1 >= argc) {
                std::cerr << name << " requires a value\n";
                std::exit(static_cast<int>(ExitCode::config_error));
            }
            return argv[++i];
        };
        if (arg == "--config") {
            config_path = next("--config");
        } else if (arg == "--out") {
            out_path = next("--out");
        } else if (arg == "--levels") {
            levels_arg = next("--levels");
        } else if (arg == "--seed") {
            seed_arg = next("--seed");
        } else if (arg == "--help" || arg == "-h") {
            print_usage(std::cout);
            return static_cast<int>(ExitCode::ok);
        } else {
            std::cerr << "unknown flag '" << arg << "'\n";
            return static_cast<int>(ExitCode::config_error);
        }
    }

    wavefd::RunConfig cfg;
    cfg.experiment = verb;
    try {
        if (!config_path.empty()) wavefd::apply_config_file(cfg, config_path);
        if (!out_path.empty()) cfg.output_path = out_path;
        if (!levels_arg.empty()) {
            cfg.levels = std::stoi(levels_arg);
            if (cfg.levels < 3) throw wavefd::ConfigError("--levels: must be >= 3");
        }
        if (!seed_arg.empty()) cfg.seed = std::stoull(seed_arg);
    } catch (const wavefd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::config_error);
    } catch (const std::exception& e) {
        std::cerr << "config error: bad flag value (" << e.what() << ")\n";
        return static_cast<int>(ExitCode::config_error);
    }

    const ExitCode code = wavefd::run_experiment(cfg, std::cout);
    return static_cast<int>(code);
}
