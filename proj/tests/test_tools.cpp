#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "config.hpp"

using namespace affine2d;
using affine2d::tools::RunConfig;

namespace {

std::string write_temp(const std::string& body)
{
    static int counter = 0;
    std::string path = "/tmp/affine2d_cfg_" + std::to_string(counter++) + ".cfg";
    std::ofstream f(path);
    f << body;
    return path;
}

// run the CLI binary (path via AFFINE2D_CLI) and return the exit code
int run_cli(const std::string& args)
{
    const char* bin = std::getenv("AFFINE2D_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " > /tmp/affine2d_cli_out.txt 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string cli_output()
{
    std::ifstream f("/tmp/affine2d_cli_out.txt");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("config: full file round trip")
{
    std::string path = write_temp(
        "# sample configuration\n"
        "model.kind = anharmonicAlphaBeta\n"
        "model.mu = 2.0\n"
        "model.stiffness = 0.5\n"
        "model.hbar = 1.0\n"
        "chart = alphaBeta\n"
        "state.q3 = 1.5\n"
        "state.q4 = 0.5\n"
        "integrator.scheme = rk4\n"
        "integrator.dt = 0.001\n"
        "integrator.steps = 500\n"
        "grid.n = 1000\n"
        "quantum.n_max = 3\n"
        "convention = integer\n"
        "output.format = json\n"
        "seed = 777\n"
        "samples = 64\n");
    RunConfig cfg = tools::load_config(path);
    CHECK(cfg.model_kind == "anharmonicAlphaBeta");
    CHECK(cfg.mu == 2.0);
    CHECK(cfg.stiffness == 0.5);
    CHECK(cfg.chart == "alphaBeta");
    CHECK(cfg.q[2] == 1.5);
    CHECK(cfg.dt == 0.001);
    CHECK(cfg.steps == 500);
    CHECK(cfg.grid_n == 1000);
    CHECK(cfg.seed == 777);
    CHECK(cfg.output_format == "json");
}

TEST_CASE("config: strictness")
{
    CHECK_THROWS_AS(tools::load_config(write_temp("mystery.key = 1\n")), domain_error);
    CHECK_THROWS_AS(tools::load_config(write_temp("model.mu = banana\n")), domain_error);
    CHECK_THROWS_AS(tools::load_config(write_temp("model.mu = -2\n")), domain_error);
    CHECK_THROWS_AS(tools::load_config(write_temp("integrator.steps = 0\n")), domain_error);
    CHECK_THROWS_AS(tools::load_config(write_temp("output.format = xml\n")), domain_error);
    CHECK_THROWS_AS(tools::load_config(write_temp("model.mu 2\n")), domain_error);
}

TEST_CASE("config: overrides")
{
    RunConfig cfg;
    tools::apply_override(cfg, "model.kind", "free");
    tools::apply_override(cfg, "model.mu", "3.5");
    CHECK(cfg.model_kind == "free");
    CHECK(cfg.mu == 3.5);
    CHECK_THROWS_AS(tools::apply_override(cfg, "nope", "1"), domain_error);
}

TEST_CASE("cli: decompose output and exit-code contract")
{
    CHECK(run_cli("decompose 1 0 0 1") == 0);
    CHECK(cli_output().find("d1=1") != std::string::npos);

    CHECK(run_cli("decompose 2 0 0 1") == 0);
    CHECK(cli_output().find("d1=2") != std::string::npos);

    CHECK(run_cli("decompose 1 0 0 0") == 2);
    CHECK(cli_output().find("singular") != std::string::npos);
}

TEST_CASE("cli: unsupported model/source pairs exit 4")
{
    CHECK(run_cli("spectrum --model free --source analytic") == 4);
    CHECK(run_cli("actions --model collapseGuard --point 1 1 1 0.5") == 4);
}

TEST_CASE("cli: truncated trajectory exits 3 and reports the reason")
{
    CHECK(run_cli("simulate --model free --set chart=polarRTheta"
                  " --set state.q3=1.0 --set state.q4=0.4 --set state.p4=-0.5"
                  " --set integrator.dt=0.01 --set integrator.steps=2000"
                  " --output /tmp/affine2d_trunc.csv")
          == 3);
    CHECK(cli_output().find("termination_reason") != std::string::npos);
}

TEST_CASE("cli: chart-check passes and is byte-deterministic for a fixed seed")
{
    CHECK(run_cli("chart-check --samples 200 --seed 31") == 0);
    const std::string first = cli_output();
    CHECK(run_cli("chart-check --samples 200 --seed 31") == 0);
    CHECK(cli_output() == first);
}

TEST_CASE("cli: simulate summary reports small harmonic drift")
{
    CHECK(run_cli("simulate --model harmonic --set chart=cartesian"
                  " --set integrator.scheme=stormerVerlet --set integrator.steps=20000"
                  " --set state.p1=0.4 --set state.p2=-0.2"
                  " --output /tmp/affine2d_traj.csv --summary /tmp/affine2d_sum.json")
          == 0);
    std::ifstream f("/tmp/affine2d_sum.json");
    std::string summary{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    CHECK(summary.find("\"truncated\": false") != std::string::npos);
    CHECK(summary.find("relative_drift") != std::string::npos);

    std::ifstream csv("/tmp/affine2d_traj.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,q1,q2,q3,q4,p1,p2,p3,p4,H,p_phi,p_psi");
}

TEST_CASE("cli: free elliptic run carries K and L columns that stay constant")
{
    CHECK(run_cli("simulate --model free --set chart=elliptic"
                  " --set state.q3=0.8 --set state.q4=0.7"
                  " --set state.p1=0.2 --set state.p2=-0.1 --set state.p3=0.15"
                  " --set integrator.dt=0.0005 --set integrator.steps=500"
                  " --output /tmp/affine2d_ell.csv --summary /tmp/affine2d_ell.json")
          == 0);
    std::ifstream csv("/tmp/affine2d_ell.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header.find(",K,L") != std::string::npos);
    std::ifstream f("/tmp/affine2d_ell.json");
    std::string summary{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    CHECK(summary.find("\"name\": \"K\"") != std::string::npos);
}

TEST_CASE("cli: collapse guard at the undeformed equilibrium stays put")
{
    CHECK(run_cli("simulate --model collapseGuard --set chart=cartesian"
                  " --set integrator.steps=200 --output /tmp/affine2d_eq.csv")
          == 0);
    std::ifstream csv("/tmp/affine2d_eq.csv");
    std::string header, first, line, last;
    std::getline(csv, header);
    std::getline(csv, first);
    while (std::getline(csv, line))
        last = line;
    // all coordinate columns constant: compare q/p fields of first and last rows
    const auto cut = [](const std::string& row) {
        return row.substr(row.find(','));  // drop the time column
    };
    CHECK(cut(first) == cut(last));
}

TEST_CASE("cli: spectrum compare stays within the oracle tolerance")
{
    CHECK(run_cli("spectrum --model harmonic --source compare"
                  " --set quantum.n_max=1 --set quantum.m_max=1 --set quantum.l_max=1"
                  " --output /tmp/affine2d_spec.csv")
          == 0);
    std::ifstream csv("/tmp/affine2d_spec.csv");
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n_a,n_b,m,l,E_analytic,E_oracle,rel_error");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        const auto pos = line.rfind(',');
        CHECK(std::stod(line.substr(pos + 1)) < 1e-6);
    }
    CHECK(rows == 4 * 9);
}
