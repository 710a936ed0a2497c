#ifndef AFFINE2D_DYNAMICS_HPP
#define AFFINE2D_DYNAMICS_HPP

/*
 * Hamilton's equations for the catalog models, fixed-step trajectory
 * integration, and drift monitoring of the constants of motion.
 *
 * Integrators: Stoermer-Verlet (leapfrog) on the flat cartesian chart, where
 * the kinetic metric is constant, and classic RK4 on curvilinear charts.
 * Trajectories that leave the admissible domain are truncated with an
 * explicit termination record rather than failing.
 */

#include <string>
#include <vector>

#include "affine2d/models.hpp"

namespace affine2d {

enum class Integrator { stormerVerlet, rk4 };

const char* integrator_name(Integrator s);
Integrator integrator_from_name(const std::string& name);

struct PhaseDerivative {
    Eigen::Vector4d dq = Eigen::Vector4d::Zero();
    Eigen::Vector4d dp = Eigen::Vector4d::Zero();
};

/// (dq/dt, dp/dt) = (dH/dp, -dH/dq) with analytic partials: the metric
/// derivative route for the kinetic part, the chart-chained closed-form
/// gradient for the potential.
PhaseDerivative equations_of_motion(const PotentialModel& m, const PhaseState& s);

struct TimedState {
    double t = 0;
    PhaseState state;
};

struct Trajectory {
    std::vector<TimedState> states;
    PotentialModel model;
    double dt = 0;
    Integrator scheme = Integrator::rk4;
    bool truncated = false;
    std::string termination_reason;
};

/// Default step: 1/1000 of the harmonic period 2 pi / omega at the model's
/// (mu, C).
double default_time_step(const PhysicalParams& params);

/// Integrate steps fixed steps from s0.  The trajectory holds steps+1 states
/// unless it exits the admissible domain, in which case it is truncated and
/// carries the termination reason.
Trajectory integrate(const PotentialModel& m, const PhaseState& s0, double dt,
                     int steps, Integrator scheme);

struct DriftEntry {
    std::string name;
    double initial = 0;
    double max_abs_deviation = 0;  ///< max_t |X(t) - X(0)|
    double relative_drift = 0;     ///< secular trend, normalized (see below)
};

/// Per-invariant drift over a trajectory.  max_abs_deviation captures the
/// bounded oscillation of symplectic schemes; relative_drift is the secular
/// component, |mean over the last fifth - mean over the first fifth| divided
/// by max(|initial|, |H(0)|).
struct DriftReport {
    std::vector<DriftEntry> entries;
};

DriftReport invariant_drift(const Trajectory& t);

} // namespace affine2d

#endif
