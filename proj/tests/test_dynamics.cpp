#include <doctest.h>

#include <cmath>

#include "affine2d/dynamics.hpp"
#include "affine2d/random.hpp"

using namespace affine2d;

namespace {

PhaseState random_state(SplitMix64& rng, Chart chart)
{
    const double d2 = rng.uniform(0.3, 1.0);
    const double d1 = d2 + rng.uniform(0.2, 1.2);
    PhaseState s;
    s.point = {Chart::twoPolar,
               {rng.uniform(0, 2 * M_PI), rng.uniform(0, 2 * M_PI), d1, d2}};
    s.p = {rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6),
           rng.uniform(-0.6, 0.6)};
    return transform_state(s, chart, 1.0);
}

} // namespace

TEST_CASE("equations of motion: free and harmonic flat flow")
{
    PotentialModel free_model{PotentialKind::free, {2, 1, 1}};
    PhaseState s{{Chart::cartesian, {0.3, -0.2, 0.9, 1.4}}, {0.5, -1, 2, 0.25}};
    PhaseDerivative d = equations_of_motion(free_model, s);
    CHECK((d.dq - s.p / 2.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(d.dp.cwiseAbs().maxCoeff() < 1e-15);

    PotentialModel harmonic{PotentialKind::harmonic, {1, 1.7, 1}};
    PhaseDerivative dh = equations_of_motion(harmonic, s);
    Eigen::Vector4d q{s.point[0], s.point[1], s.point[2], s.point[3]};
    CHECK((dh.dp + 1.7 * q).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("equations of motion match finite-difference gradients of H")
{
    SplitMix64 rng(31);
    const Chart charts[] = {Chart::cartesian, Chart::alphaBeta, Chart::polarRTheta,
                            Chart::twoPolar, Chart::rhoEpsilon, Chart::exponentialAB,
                            Chart::elliptic};
    const PotentialKind kinds[] = {PotentialKind::free, PotentialKind::harmonic,
                                   PotentialKind::anharmonicAlphaBeta,
                                   PotentialKind::collapseGuard};
    for (PotentialKind kind : kinds) {
        PotentialModel m{kind, {1.2, 0.9, 1}};
        for (Chart chart : charts) {
            for (int i = 0; i < 5; ++i) {
                PhaseState s = random_state(rng, chart);
                PhaseDerivative d = equations_of_motion(m, s);
                for (int k = 0; k < 4; ++k) {
                    const double hq = 1e-6 * std::max(0.3, std::abs(s.point[k]));
                    PhaseState sp = s, sm = s;
                    sp.point[k] += hq;
                    sm.point[k] -= hq;
                    const double dH_dq = (hamiltonian(m, sp) - hamiltonian(m, sm)) / (2 * hq);
                    CHECK(std::abs(d.dp[k] + dH_dq) < 1e-7 * std::max(1.0, std::abs(dH_dq)));

                    const double hp = 1e-6 * std::max(0.3, std::abs(s.p[k]));
                    sp = s;
                    sm = s;
                    sp.p[k] += hp;
                    sm.p[k] -= hp;
                    const double dH_dp = (hamiltonian(m, sp) - hamiltonian(m, sm)) / (2 * hp);
                    CHECK(std::abs(d.dq[k] - dH_dp) < 1e-7 * std::max(1.0, std::abs(dH_dp)));
                }
            }
        }
    }
}

TEST_CASE("stormer-verlet: free flat motion is exactly linear")
{
    PotentialModel free_model{PotentialKind::free, {1, 1, 1}};
    PhaseState s0{{Chart::cartesian, {1, 0, 0, 1}}, {0.25, -0.5, 0.125, 0.0625}};
    Trajectory traj = integrate(free_model, s0, 0.25, 64, Integrator::stormerVerlet);
    REQUIRE(traj.states.size() == 65);
    for (const auto& ts : traj.states)
        for (int k = 0; k < 4; ++k)
            CHECK(ts.state.point[k] == doctest::Approx(s0.point[k] + ts.t * s0.p[k]));
}

TEST_CASE("stormer-verlet requires the cartesian chart")
{
    PotentialModel m{PotentialKind::harmonic, {1, 1, 1}};
    PhaseState s{{Chart::alphaBeta, {0, 0, 1.5, 0.5}}, {0, 0, 0, 0}};
    CHECK_THROWS_AS(integrate(m, s, 0.01, 10, Integrator::stormerVerlet),
                    unsupported_error);
}

TEST_CASE("rk4: harmonic orbit returns after one full period")
{
    PotentialModel m{PotentialKind::harmonic, {1, 1, 1}};
    const double period = 2 * M_PI / m.params.omega();
    PhaseState s0{{Chart::cartesian, {0.7, -0.3, 0.4, 1.1}}, {0.2, 0.5, -0.1, 0.3}};
    Trajectory traj = integrate(m, s0, period / 1000, 1000, Integrator::rk4);
    const PhaseState& end = traj.states.back().state;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(end.point[k] - s0.point[k]) < 1e-6);
        CHECK(std::abs(end.p[k] - s0.p[k]) < 1e-6);
    }

    // quarter-period cross-check against the closed-form oscillator solution
    Trajectory quarter = integrate(m, s0, period / 4000, 1000, Integrator::rk4);
    const double t = quarter.states.back().t;
    const double w = m.params.omega();
    for (int k = 0; k < 4; ++k) {
        const double expected = s0.point[k] * std::cos(w * t)
                                + s0.p[k] / (m.params.mu * w) * std::sin(w * t);
        CHECK(quarter.states.back().state.point[k] == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("collapse guard: equilibrium at the undeformed configuration stays fixed")
{
    PotentialModel guard{PotentialKind::collapseGuard, {1, 1, 1}};
    PhaseState s0{{Chart::cartesian, {1, 0, 0, 1}}, {0, 0, 0, 0}};
    Trajectory traj = integrate(guard, s0, 0.01, 500, Integrator::rk4);
    const PhaseState& end = traj.states.back().state;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(end.point[k] - s0.point[k]) < 1e-13);
        CHECK(std::abs(end.p[k]) < 1e-13);
    }
}

TEST_CASE("domain exit truncates the trajectory with a reason")
{
    // free polar motion with negative p_theta runs into the theta = 0 wall
    PotentialModel free_model{PotentialKind::free, {1, 1, 1}};
    PhaseState s0{{Chart::polarRTheta, {0, 0, 1.0, 0.4}}, {0, 0, 0, -0.5}};
    Trajectory traj = integrate(free_model, s0, 0.01, 2000, Integrator::rk4);
    CHECK(traj.truncated);
    CHECK(traj.states.size() < 2001);
    CHECK(traj.termination_reason.find("theta") != std::string::npos);
}

TEST_CASE("time reversal: rk4 retraces its path when momenta are negated")
{
    PotentialModel m{PotentialKind::anharmonicAlphaBeta, {1, 1, 1}};
    PhaseState s0{{Chart::alphaBeta, {0.2, 0.8, 1.4, 0.6}}, {0.3, -0.2, 0.15, 0.25}};
    const double dt = 2 * M_PI / m.params.omega() / 4000;
    Trajectory fwd = integrate(m, s0, dt, 500, Integrator::rk4);
    PhaseState turn = fwd.states.back().state;
    turn.p = -turn.p;
    Trajectory bwd = integrate(m, turn, dt, 500, Integrator::rk4);
    const PhaseState& end = bwd.states.back().state;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(end.point[k] - s0.point[k]) < 1e-8);
        CHECK(std::abs(end.p[k] + s0.p[k]) < 1e-8);
    }
}

TEST_CASE("drift report: symplectic energy boundedness and exact cyclic momenta")
{
    PotentialModel m{PotentialKind::harmonic, {1, 1, 1}};
    const double period = 2 * M_PI / m.params.omega();
    PhaseState s0{{Chart::cartesian, {0.9, 0.1, -0.4, 1.2}}, {0.3, -0.7, 0.2, 0.1}};
    Trajectory traj = integrate(m, s0, period / 500, 20000, Integrator::stormerVerlet);
    DriftReport report = invariant_drift(traj);

    bool saw_h = false, saw_p = false;
    for (const auto& e : report.entries) {
        if (e.name == "H") {
            saw_h = true;
            CHECK(e.relative_drift < 1e-6);           // no secular component
            CHECK(e.max_abs_deviation < 1e-3);        // bounded oscillation
            CHECK(e.max_abs_deviation > 1e-8);        // ... that is genuinely present
        }
        if (e.name == "p_phi" || e.name == "p_psi") {
            saw_p = true;
            CHECK(e.max_abs_deviation < 1e-12);
        }
    }
    CHECK(saw_h);
    CHECK(saw_p);
}

TEST_CASE("drift report: cyclic momenta under rk4 in a curvilinear chart")
{
    SplitMix64 rng(33);
    PotentialModel m{PotentialKind::anharmonicRTheta, {1, 1, 1}};
    PhaseState s0 = random_state(rng, Chart::polarRTheta);
    const double dt = 2 * M_PI / m.params.omega() / 2000;
    Trajectory traj = integrate(m, s0, dt, 5000, Integrator::rk4);
    REQUIRE_FALSE(traj.truncated);
    DriftReport report = invariant_drift(traj);
    for (const auto& e : report.entries) {
        if (e.name == "p_phi" || e.name == "p_psi")
            CHECK(e.max_abs_deviation < 1e-8);
        if (e.name == "h_theta" || e.name == "H")
            CHECK(e.relative_drift < 1e-8);
    }
}

TEST_CASE("drift report: K and L on free elliptic trajectories")
{
    SplitMix64 rng(34);
    PotentialModel m{PotentialKind::free, {1, 1, 1}};
    PhaseState s0 = random_state(rng, Chart::elliptic);
    Trajectory traj = integrate(m, s0, 5e-4, 4000, Integrator::rk4);
    REQUIRE_FALSE(traj.truncated);
    DriftReport report = invariant_drift(traj);
    for (const auto& e : report.entries)
        if (e.name == "K" || e.name == "L")
            CHECK(e.max_abs_deviation
                  < 1e-6 * std::max(1.0, std::abs(e.initial)));
}

TEST_CASE("integrate rejects bad inputs")
{
    PotentialModel m{PotentialKind::harmonic, {1, 1, 1}};
    PhaseState s{{Chart::cartesian, {1, 0, 0, 1}}, {0, 0, 0, 0}};
    CHECK_THROWS_AS(integrate(m, s, -0.1, 10, Integrator::rk4), domain_error);
    PhaseState bad{{Chart::polarRTheta, {0, 0, -1.0, 0.3}}, {0, 0, 0, 0}};
    CHECK_THROWS_AS(integrate(m, bad, 0.1, 10, Integrator::rk4), domain_error);
}
