#include <doctest.h>

#include <cmath>

#include "affine2d/charts.hpp"
#include "affine2d/random.hpp"

using namespace affine2d;

namespace {

const Chart kAllCharts[] = {Chart::cartesian,   Chart::twoPolar,      Chart::alphaBeta,
                            Chart::polarRTheta, Chart::rhoEpsilon,    Chart::exponentialAB,
                            Chart::elliptic};

// canonical-domain sample, admissible in every chart
ChartPoint random_two_polar(SplitMix64& rng)
{
    const double d2 = rng.uniform(0.15, 1.2);
    const double d1 = d2 + rng.uniform(0.1, 1.5);
    return {Chart::twoPolar, {rng.uniform(0, 2 * M_PI), rng.uniform(0, 2 * M_PI), d1, d2}};
}

Eigen::Vector4d random_tangent(SplitMix64& rng)
{
    return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

} // namespace

TEST_CASE("two-polar decomposition: canonical examples")
{
    TwoPolarCoords id = two_polar_decompose({1, 0, 0, 1});
    CHECK(id.phi == doctest::Approx(0));
    CHECK(id.psi == doctest::Approx(0));
    CHECK(id.d1 == doctest::Approx(1));
    CHECK(id.d2 == doctest::Approx(1));

    TwoPolarCoords diag = two_polar_decompose({2, 0, 0, 1});
    CHECK(diag.phi == doctest::Approx(0));
    CHECK(diag.psi == doctest::Approx(0));
    CHECK(diag.d1 == doctest::Approx(2));
    CHECK(diag.d2 == doctest::Approx(1));
}

TEST_CASE("two-polar decomposition: errors and reflection mode")
{
    CHECK_THROWS_AS(two_polar_decompose({1, 0, 0, 0}), domain_error);
    CHECK_THROWS_AS(two_polar_decompose({1, 0, 0, -1}), domain_error);

    TwoPolarCoords mirror = two_polar_decompose({1, 0, 0, -1}, {true});
    CHECK(mirror.d1 > 0);
    CHECK(mirror.d2 < 0);
    ConfigurationMatrix back = two_polar_compose(mirror);
    CHECK(back.x == doctest::Approx(1).epsilon(1e-14));
    CHECK(back.u == doctest::Approx(-1).epsilon(1e-14));
}

TEST_CASE("two-polar decomposition: degenerate d1 = d2 fixes psi = 0")
{
    const double a = 0.7;
    ConfigurationMatrix rot{std::cos(a), -std::sin(a), std::sin(a), std::cos(a)};
    TwoPolarCoords c = two_polar_decompose(rot);
    CHECK(c.psi == doctest::Approx(0));
    CHECK(c.phi == doctest::Approx(a));
    CHECK(c.d1 == doctest::Approx(1));
    CHECK(c.d2 == doctest::Approx(1));
}

TEST_CASE("two-polar compose: pure rotation")
{
    ConfigurationMatrix m = two_polar_compose({M_PI / 2, 0, 1, 1});
    CHECK(m.x == doctest::Approx(0).epsilon(1e-15));
    CHECK(m.y == doctest::Approx(-1));
    CHECK(m.z == doctest::Approx(1));
    CHECK(m.u == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("decompose/compose round trip on random GL+ matrices")
{
    SplitMix64 rng(2024);
    int done = 0;
    while (done < 100) {
        ConfigurationMatrix m{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                              rng.uniform(-2, 2)};
        if (m.det() < 1e-8)
            continue;
        ++done;
        ConfigurationMatrix back = two_polar_compose(two_polar_decompose(m));
        const double scale = m.as_vector().cwiseAbs().maxCoeff();
        CHECK((back.as_vector() - m.as_vector()).cwiseAbs().maxCoeff() < 1e-12 * scale);
    }
}

TEST_CASE("transform: worked examples")
{
    ChartPoint tp{Chart::twoPolar, {0, 0, 1, 1}};
    ChartPoint ab = transform(tp, Chart::alphaBeta);
    CHECK(ab[0] == doctest::Approx(0));
    CHECK(ab[1] == doctest::Approx(0));
    CHECK(ab[2] == doctest::Approx(std::sqrt(2.0)));
    CHECK(ab[3] == doctest::Approx(0).epsilon(1e-15));

    ChartPoint ab2{Chart::alphaBeta, {0.3, 0.4, std::sqrt(2.0), 0}};
    ChartPoint polar = transform(ab2, Chart::polarRTheta);
    CHECK(polar[2] == doctest::Approx(2));          // r = alpha^2 + beta^2
    CHECK(polar[3] == doctest::Approx(0));          // theta = 0

    ChartPoint expp{Chart::exponentialAB, {0, 0, 0, 0}};
    ChartPoint tp2 = transform(expp, Chart::twoPolar);
    CHECK(tp2[2] == doctest::Approx(1));
    CHECK(tp2[3] == doctest::Approx(1));
}

TEST_CASE("transform: implied R^4 point is chart-independent")
{
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        ChartPoint tp = random_two_polar(rng);
        Eigen::Vector4d ref = to_configuration(tp).as_vector();
        for (Chart c : kAllCharts) {
            ChartPoint q = transform(tp, c);
            CHECK((to_configuration(q).as_vector() - ref).cwiseAbs().maxCoeff()
                  < 1e-12 * ref.cwiseAbs().maxCoeff());
        }
    }
}

TEST_CASE("transform: round trips return the source coordinates")
{
    SplitMix64 rng(8);
    for (int i = 0; i < 50; ++i) {
        ChartPoint tp = random_two_polar(rng);
        for (Chart c : kAllCharts) {
            ChartPoint there = transform(tp, c);
            ChartPoint back = transform(there, Chart::twoPolar);
            CHECK(back[2] == doctest::Approx(tp[2]).epsilon(1e-10));
            CHECK(back[3] == doctest::Approx(tp[3]).epsilon(1e-10));
            if (c == Chart::cartesian) {
                // through the cartesian hub the angles return on the
                // canonical branch: equal up to the discrete gauge
                // (phi, psi) -> (phi + pi, psi + pi)
                const double dphi = std::remainder(back[0] - tp[0], 2 * M_PI);
                const double dpsi = std::remainder(back[1] - tp[1], 2 * M_PI);
                const bool same = std::abs(dphi) < 1e-10 && std::abs(dpsi) < 1e-10;
                const bool gauge = std::abs(std::abs(dphi) - M_PI) < 1e-10
                                   && std::abs(std::abs(dpsi) - M_PI) < 1e-10;
                CHECK((same || gauge));
            } else {
                CHECK(back[0] == doctest::Approx(tp[0]).epsilon(1e-10));
                CHECK(back[1] == doctest::Approx(tp[1]).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("transform: branch violations name the constraint")
{
    ChartPoint neg_beta{Chart::alphaBeta, {0, 0, 1.0, -0.5}};
    CHECK_THROWS_WITH_AS(transform(neg_beta, Chart::polarRTheta),
                         doctest::Contains("beta < 0"), domain_error);
    ChartPoint beta_gt_alpha{Chart::alphaBeta, {0, 0, 0.5, 1.0}};
    CHECK_THROWS_AS(transform(beta_gt_alpha, Chart::exponentialAB), domain_error);
    CHECK_THROWS_AS(transform(neg_beta, Chart::elliptic), domain_error);
}

TEST_CASE("metric: cartesian is the identity; alphaBeta matches the arc element")
{
    MetricTensor mc = metric_at({Chart::cartesian, {0.3, -2, 5, 0.1}});
    CHECK(mc.g.isApprox(Eigen::Matrix4d::Identity()));

    ChartPoint ab{Chart::alphaBeta, {1.2, 0.5, 1.0, 1.0}};
    MetricTensor g = metric_at(ab);
    CHECK(g.g.isApprox(Eigen::Matrix4d::Identity(), 1e-14));

    ChartPoint ab2{Chart::alphaBeta, {0, 0, 1.7, 0.4}};
    MetricTensor g2 = metric_at(ab2);
    CHECK(g2.g(0, 0) == doctest::Approx(1.7 * 1.7));
    CHECK(g2.g(1, 1) == doctest::Approx(0.4 * 0.4));
    CHECK(g2.g(2, 2) == doctest::Approx(1));
    CHECK(g2.g(3, 3) == doctest::Approx(1));
    CHECK(g2.g == g2.g.transpose());
}

TEST_CASE("metric: singular loci raise domain errors")
{
    CHECK_THROWS_AS(metric_at({Chart::alphaBeta, {0, 0, 1.0, 0.0}}), domain_error);
    CHECK_THROWS_AS(metric_at({Chart::alphaBeta, {0, 0, 0.0, 1.0}}), domain_error);
    CHECK_THROWS_AS(metric_at({Chart::polarRTheta, {0, 0, 0.0, 1.0}}), domain_error);
    CHECK_THROWS_AS(metric_at({Chart::polarRTheta, {0, 0, 1.0, 0.0}}), domain_error);
    CHECK_THROWS_AS(metric_at({Chart::twoPolar, {0, 0, 1.0, 1.0}}), domain_error);
    CHECK_THROWS_AS(inverse_metric_at({Chart::exponentialAB, {0, 0, 0.5, 0.0}}), domain_error);
}

TEST_CASE("inverse metric is the closed-form inverse")
{
    SplitMix64 rng(11);
    for (int i = 0; i < 20; ++i) {
        ChartPoint tp = random_two_polar(rng);
        for (Chart c : kAllCharts) {
            ChartPoint q = transform(tp, c);
            Eigen::Matrix4d prod = metric_at(q).g * inverse_metric_at(q);
            CHECK((prod - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("kinetic energy: worked examples")
{
    CHECK(kinetic_energy({Chart::cartesian, {0, 0, 0, 0}}, {1, 0, 0, 0}, 2.0)
          == doctest::Approx(1.0));
    // degenerate deformation point: the quadratic form is still defined
    CHECK(kinetic_energy({Chart::twoPolar, {0.2, 1.1, 1, 1}}, {1, 0, 0, 0}, 1.0)
          == doctest::Approx(1.0));
}

TEST_CASE("kinetic energy agrees across charts")
{
    SplitMix64 rng(12);
    for (int i = 0; i < 100; ++i) {
        ChartPoint tp = random_two_polar(rng);
        Eigen::Vector4d v = random_tangent(rng);
        const double ref = kinetic_energy(tp, v, 1.3);
        for (Chart c : kAllCharts) {
            ChartPoint q = transform(tp, c);
            Eigen::Vector4d vc = push_tangent(tp, v, c);
            CHECK(kinetic_energy(q, vc, 1.3) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("metric pushforward: v^T G v equals the Cartesian norm of the FD-pushed tangent")
{
    SplitMix64 rng(13);
    for (int i = 0; i < 60; ++i) {
        ChartPoint tp = random_two_polar(rng);
        Eigen::Vector4d v = random_tangent(rng);
        const double t_ref = kinetic_energy(tp, v, 1.0);
        for (Chart c : kAllCharts) {
            ChartPoint q = transform(tp, c);
            Eigen::Vector4d vc = push_tangent(tp, v, c);
            Eigen::Matrix4d jfd;
            for (int j = 0; j < 4; ++j) {
                const double h = 1e-3 * std::clamp(std::abs(q[j]), 0.1, 1.0);
                auto at = [&](double s) {
                    ChartPoint qq = q;
                    qq[j] += s;
                    return to_configuration(qq).as_vector();
                };
                jfd.col(j) = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
            }
            const double t_fd = 0.5 * (jfd * vc).squaredNorm();
            CHECK(std::abs(t_fd - kinetic_energy(q, vc, 1.0)) < 1e-10 * std::abs(t_ref));
        }
    }
}

TEST_CASE("metric partial derivatives match finite differences")
{
    SplitMix64 rng(14);
    for (int i = 0; i < 20; ++i) {
        ChartPoint tp = random_two_polar(rng);
        for (Chart c : kAllCharts) {
            ChartPoint q = transform(tp, c);
            for (int k = 2; k < 4; ++k) {
                const double h = 1e-6 * std::max(0.1, std::abs(q[k]));
                ChartPoint qp = q, qm = q;
                qp[k] += h;
                qm[k] -= h;
                Eigen::Matrix4d fd;
                try {
                    fd = (metric_at(qp).g - metric_at(qm).g) / (2 * h);
                } catch (const domain_error&) {
                    continue;  // stepped onto a singular locus
                }
                CHECK((fd - metric_partial(q, k)).cwiseAbs().maxCoeff() < 1e-6);
            }
        }
    }
}

TEST_CASE("polar arc element: the three alternative expressions coincide")
{
    SplitMix64 rng(15);
    for (int i = 0; i < 50; ++i) {
        const double r = rng.uniform(0.2, 4.0);
        const double th = rng.uniform(0.1, M_PI - 0.1);
        const double dr = rng.uniform(-1, 1), dth = rng.uniform(-1, 1);
        const double dphi = rng.uniform(-1, 1), dpsi = rng.uniform(-1, 1);

        const double e1 = 0.25 / r * dr * dr + 0.25 * r * dth * dth + r * dphi * dphi
                          - 2 * r * std::cos(th) * dphi * dpsi + r * dpsi * dpsi;

        const double rho = std::sqrt(r);
        const double drho = 0.5 * dr / rho;
        const double dPhi = 2 * dphi, dPsi = 2 * dpsi;
        const double e2 = drho * drho
                          + 0.25 * rho * rho
                                * (dth * dth + dPhi * dPhi
                                   - 2 * std::cos(th) * dPhi * dPsi + dPsi * dPsi);

        const double e3 = 0.25 / r
                          * (dr * dr
                             + r * r
                                   * (dth * dth + dPhi * dPhi
                                      - 2 * std::cos(th) * dPhi * dPsi + dPsi * dPsi));

        CHECK(e2 == doctest::Approx(e1).epsilon(1e-12));
        CHECK(e3 == doctest::Approx(e1).epsilon(1e-12));

        // and the stored polarRTheta metric reproduces the same value
        Eigen::Vector4d v{dphi, dpsi, dr, dth};
        CHECK(2 * kinetic_energy({Chart::polarRTheta, {0.4, 1.0, r, th}}, v, 1.0)
              == doctest::Approx(e1).epsilon(1e-12));
    }
}

TEST_CASE("domain bookkeeping: canonical components")
{
    CHECK(in_domain({Chart::twoPolar, {0, 0, 1.5, 0.5}}));
    CHECK_FALSE(in_domain({Chart::twoPolar, {0, 0, 0.5, 0.5}}));
    CHECK_FALSE(in_domain({Chart::polarRTheta, {0, 0, 1.0, -0.1}}));
    CHECK_FALSE(in_domain({Chart::alphaBeta, {0, 0, 1.0, -0.2}}));
    CHECK(in_domain({Chart::cartesian, {0, 0, 0, 0}}));
}
