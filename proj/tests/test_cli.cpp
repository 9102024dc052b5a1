#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("WAVEFD_CLI");
    return env ? env : "./wavefd";
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / "wavefd_cli_test_log.txt";
    const std::string cmd = cli_path() + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("--help exits cleanly and documents the config keys") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    for (const char* key : {"problem.half_width", "grid.dx", "grid.zeta", "output_path", "seed"})
        CHECK(r.output.find(key) != std::string::npos);
}

TEST_CASE("unknown experiment and malformed flags are config errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("solve --levels").exit_code == 2);
    CHECK(run_cli("converge --levels 2").exit_code == 2);
}

TEST_CASE("config parse errors carry the line number") {
    const fs::path cfg = write_config("bad_key.conf", "grid.dx = 0.1\nnope = 3\n");
    const RunResult r = run_cli("solve --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find(cfg.filename().string() + ":2") != std::string::npos);
    CHECK(r.output.find("unknown key") != std::string::npos);

    const fs::path dup = write_config("dup_key.conf", "grid.dx = 0.1\ngrid.dx = 0.2\n");
    const RunResult rd = run_cli("solve --config " + dup.string());
    CHECK(rd.exit_code == 2);
    CHECK(rd.output.find(":2") != std::string::npos);

    const fs::path bad_val = write_config("bad_val.conf", "grid.dx = fast\n");
    const RunResult rv = run_cli("solve --config " + bad_val.string());
    CHECK(rv.exit_code == 2);
    CHECK(rv.output.find(":1") != std::string::npos);

    const fs::path conflict = write_config("conflict.conf", "experiment = energy\n");
    CHECK(run_cli("solve --config " + conflict.string()).exit_code == 2);
}

TEST_CASE("converge writes the refinement CSV with a fitted order near 2") {
    const fs::path out = fs::temp_directory_path() / "cli_converge.csv";
    const RunResult r = run_cli("converge --levels 4 --out " + out.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("level,dx,dt,courant,max_norm") != std::string::npos);
    int data_rows = 0;
    std::istringstream lines(csv);
    std::string line;
    double fitted = 0.0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos &&
            line[0] != 'l')
            ++data_rows;
        if (line.rfind("# fitted_order=", 0) == 0)
            fitted = std::stod(line.substr(std::string("# fitted_order=").size()));
    }
    CHECK(data_rows == 4);
    CHECK(fitted >= 1.8);
    CHECK(fitted <= 2.2);
}

TEST_CASE("CSV output is byte-stable across identical runs") {
    const fs::path out1 = fs::temp_directory_path() / "cli_energy_1.csv";
    const fs::path out2 = fs::temp_directory_path() / "cli_energy_2.csv";
    CHECK(run_cli("energy --out " + out1.string()).exit_code == 0);
    CHECK(run_cli("energy --out " + out2.string()).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));

    const fs::path st1 = fs::temp_directory_path() / "cli_stab_1.csv";
    const fs::path st2 = fs::temp_directory_path() / "cli_stab_2.csv";
    CHECK(run_cli("stability --seed 9 --out " + st1.string()).exit_code == 0);
    CHECK(run_cli("stability --seed 9 --out " + st2.string()).exit_code == 0);
    CHECK(slurp(st1) == slurp(st2));
}

TEST_CASE("CFL-violating grids are rejected with the dedicated exit code") {
    const fs::path cfg = write_config("cfl_reject.conf", "grid.dt = 0.09\n");  // r = 0.9 > 0.8
    const RunResult r = run_cli("converge --config " + cfg.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("CFL") != std::string::npos);
}

TEST_CASE("cfl-demo reports instability above the band") {
    const fs::path cfg = write_config(
        "cfl_demo.conf", "grid.dx = 0.015625\ngrid.dt = 0.0171875\ngrid.t_max = 4.0\n");
    const fs::path out = fs::temp_directory_path() / "cli_cfl_demo.csv";
    const RunResult r = run_cli("cfl-demo --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("instability detected") != std::string::npos);

    // Inside the band the same experiment finds nothing.
    const RunResult calm = run_cli("cfl-demo --out " + out.string());
    CHECK(calm.exit_code == 0);
    CHECK(calm.output.find("no instability") != std::string::npos);
}

TEST_CASE("solve on an out-of-domain bump writes an all-zero snapshot table") {
    const fs::path cfg = write_config("far_bump.conf", "problem.center = 100.0\n");
    const fs::path out = fs::temp_directory_path() / "cli_far_solve.csv";
    const RunResult r = run_cli("solve --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    std::istringstream lines(slurp(out));
    std::string line;
    bool header_seen = false;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("k,j,x,t,u", 0) == 0) {
            header_seen = true;
            continue;
        }
        if (!header_seen || line.empty() || line[0] == '#') continue;
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "0");
    }
    CHECK(header_seen);
    CHECK(rows > 0);
}

TEST_CASE("cone-check passes on the default problem") {
    const fs::path out = fs::temp_directory_path() / "cli_cone.csv";
    const RunResult r = run_cli("cone-check --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no values outside the predicted cone") != std::string::npos);
    CHECK(slurp(out).find("k,predicted_lo,predicted_hi,actual_lo,actual_hi,violations") !=
          std::string::npos);
}
