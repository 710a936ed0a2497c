#ifndef AFFINE2D_TOOLS_CONFIG_HPP
#define AFFINE2D_TOOLS_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>

#include "affine2d/charts.hpp"
#include "affine2d/dynamics.hpp"
#include "affine2d/models.hpp"

namespace affine2d::tools {

/// Flat key-value run configuration (dotted section keys, '#' comments).
/// Parsing is strict: unknown keys and out-of-range values are rejected
/// before any computation.
struct RunConfig {
    std::string model_kind = "harmonic";
    double mu = 1.0;
    double stiffness = 1.0;
    double hbar = 1.0;

    std::string chart = "cartesian";
    std::array<double, 4> q{1, 0, 0, 1};
    std::array<double, 4> p{0, 0, 0, 0};

    std::string scheme = "rk4";
    double dt = 0;  ///< 0 selects the default step (harmonic period / 1000)
    long steps = 1000;

    int grid_n = 2000;
    int n_max = 2;
    int m_max = 2;
    int l_max = 2;
    std::string convention = "integer";

    std::string output_path;  ///< empty = stdout
    std::string output_format = "csv";
    std::uint64_t seed = 12345;
    long samples = 1000;

    PotentialModel model() const;
    PhaseState initial_state() const;
    Integrator integrator() const;
    double time_step() const;

    void validate() const;
};

/// Parse a config file into defaults; throws domain_error with the offending
/// key/value on any violation.
RunConfig load_config(const std::string& path);

/// Apply one "key=value" override (same key space as the file).
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

} // namespace affine2d::tools

#endif
