#include "affine2d/dynamics.hpp"

#include <cmath>

namespace affine2d {

const char* integrator_name(Integrator s)
{
    return s == Integrator::stormerVerlet ? "stormerVerlet" : "rk4";
}

Integrator integrator_from_name(const std::string& name)
{
    if (name == "stormerVerlet")
        return Integrator::stormerVerlet;
    if (name == "rk4")
        return Integrator::rk4;
    throw unsupported_error("unknown integrator: " + name);
}

PhaseDerivative equations_of_motion(const PotentialModel& m, const PhaseState& s)
{
    const double mu = m.params.mu;
    Eigen::Matrix4d gi = inverse_metric_at(s.point);
    PhaseDerivative d;
    d.dq = gi * s.p / mu;

    // dT/dq_k = -(1/2mu) p^T G^-1 (dG/dq_k) G^-1 p; angle directions vanish.
    Eigen::Vector4d gip = gi * s.p;
    Eigen::Vector4d dT = Eigen::Vector4d::Zero();
    for (int k = 2; k < 4; ++k)
        dT[k] = -0.5 / mu * gip.dot(metric_partial(s.point, k) * gip);

    d.dp = -dT - potential_gradient(m, s.point);
    return d;
}

double default_time_step(const PhysicalParams& params)
{
    return 2.0 * M_PI / params.omega() / 1000.0;
}

namespace {

bool state_admissible(const PotentialModel& m, const PhaseState& s, std::string& why)
{
    why = domain_violation(s.point);
    if (!why.empty())
        return false;
    if (!s.p.allFinite() || !Eigen::Vector4d::Map(s.point.q.data()).allFinite()) {
        why = "non-finite state";
        return false;
    }
    try {
        (void)potential_value(m, s.point);
    } catch (const domain_error& e) {
        why = e.what();
        return false;
    }
    return true;
}

PhaseState rk4_step(const PotentialModel& m, const PhaseState& s, double dt)
{
    auto advance = [&](const PhaseState& base, const PhaseDerivative& d, double h) {
        PhaseState out = base;
        for (int i = 0; i < 4; ++i)
            out.point[i] += h * d.dq[i];
        out.p += h * d.dp;
        return out;
    };
    PhaseDerivative k1 = equations_of_motion(m, s);
    PhaseDerivative k2 = equations_of_motion(m, advance(s, k1, 0.5 * dt));
    PhaseDerivative k3 = equations_of_motion(m, advance(s, k2, 0.5 * dt));
    PhaseDerivative k4 = equations_of_motion(m, advance(s, k3, dt));
    PhaseState out = s;
    for (int i = 0; i < 4; ++i)
        out.point[i] += dt / 6.0 * (k1.dq[i] + 2 * k2.dq[i] + 2 * k3.dq[i] + k4.dq[i]);
    out.p += dt / 6.0 * (k1.dp + 2 * k2.dp + 2 * k3.dp + k4.dp);
    return out;
}

} // namespace

Trajectory integrate(const PotentialModel& m, const PhaseState& s0, double dt,
                     int steps, Integrator scheme)
{
    if (!(dt > 0))
        throw domain_error("integrate: dt must be positive");
    if (scheme == Integrator::stormerVerlet && s0.point.chart != Chart::cartesian)
        throw unsupported_error("stormerVerlet requires the constant-metric cartesian chart; "
                                "use rk4 on curvilinear charts");

    Trajectory traj;
    traj.model = m;
    traj.dt = dt;
    traj.scheme = scheme;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);

    std::string why;
    if (!state_admissible(m, s0, why))
        throw domain_error("integrate: initial state inadmissible: " + why);
    traj.states.push_back({0.0, s0});

    const double mu = m.params.mu;
    PhaseState s = s0;
    for (int n = 1; n <= steps; ++n) {
        try {
            if (scheme == Integrator::stormerVerlet) {
                // kick-drift-kick leapfrog; exact for the free flat case
                Eigen::Vector4d ph = s.p - 0.5 * dt * potential_gradient(m, s.point);
                for (int i = 0; i < 4; ++i)
                    s.point[i] += dt * ph[i] / mu;
                s.p = ph - 0.5 * dt * potential_gradient(m, s.point);
            } else {
                s = rk4_step(m, s, dt);
            }
        } catch (const domain_error& e) {
            // a stage evaluation crossed a singular wall mid-step
            traj.truncated = true;
            traj.termination_reason = "left admissible domain at step " + std::to_string(n)
                                      + ": " + e.what();
            break;
        }
        if (!state_admissible(m, s, why)) {
            traj.truncated = true;
            traj.termination_reason = "left admissible domain at step " + std::to_string(n)
                                      + ": " + why;
            break;
        }
        traj.states.push_back({n * dt, s});
    }
    return traj;
}

DriftReport invariant_drift(const Trajectory& traj)
{
    DriftReport report;
    if (traj.states.empty())
        return report;

    const PhaseState& s0 = traj.states.front().state;
    auto fns = constants_of_motion_functions(traj.model, s0.point.chart);
    bool has_H = false;
    for (auto& [name, fn] : fns)
        has_H |= (name == "H");
    if (!has_H) {
        const PotentialModel m = traj.model;
        fns.emplace_back("H", [m](const PhaseState& s) { return hamiltonian(m, s); });
    }

    const double energy_scale = std::abs(hamiltonian(traj.model, s0));
    const std::size_t n = traj.states.size();
    const std::size_t window = std::max<std::size_t>(1, n / 5);

    for (auto& [name, fn] : fns) {
        DriftEntry entry;
        entry.name = name;
        entry.initial = fn(s0);
        double head = 0, tail = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = fn(traj.states[i].state);
            entry.max_abs_deviation = std::max(entry.max_abs_deviation,
                                               std::abs(v - entry.initial));
            if (i < window)
                head += v;
            if (i >= n - window)
                tail += v;
        }
        const double scale = std::max({std::abs(entry.initial), energy_scale, 1e-300});
        entry.relative_drift = std::abs(tail - head) / window / scale;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace affine2d
