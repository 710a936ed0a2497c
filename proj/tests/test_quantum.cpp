#include <doctest.h>

#include <cmath>
#include <vector>

#include "affine2d/quadrature.hpp"
#include "affine2d/quantum.hpp"
#include "affine2d/random.hpp"

using namespace affine2d;

namespace {

const PhysicalParams kUnit{1, 1, 1};

// independent term-by-term summation at extended precision
long double confluent_sum_oracle(int n, long double b, long double x)
{
    long double sum = 0;
    for (int k = 0; k <= n; ++k) {
        long double term = 1;
        for (int i = 0; i < k; ++i)
            term *= (-(long double)(n - i)) / (b + i) * x / (i + 1);
        sum += term;
    }
    return sum;
}

long double gauss_sum_oracle(int n, long double a2, long double b, long double x)
{
    long double sum = 0;
    for (int k = 0; k <= n; ++k) {
        long double term = 1;
        for (int i = 0; i < k; ++i)
            term *= (-(long double)(n - i)) * (a2 + i) / (b + i) * x / (i + 1);
        sum += term;
    }
    return sum;
}

std::vector<HalfInt> projections(HalfInt j)
{
    std::vector<HalfInt> out;
    for (int t = -j.twice; t <= j.twice; t += 2)
        out.push_back(HalfInt::from_twice(t));
    return out;
}

} // namespace

TEST_CASE("confluent polynomial: worked examples and summation oracle")
{
    CHECK(confluent_poly(0, 0.5, 3.7) == doctest::Approx(1.0));
    CHECK(confluent_poly(1, 1.0, 2.0) == doctest::Approx(-1.0));
    CHECK(confluent_poly(3, 2.5, 1.7)
          == doctest::Approx((double)confluent_sum_oracle(3, 2.5L, 1.7L)).epsilon(1e-13));

    SplitMix64 rng(51);
    for (int i = 0; i < 50; ++i) {
        const int n = static_cast<int>(rng.uniform(0, 8));
        const double b = rng.uniform(0.3, 5.0);
        const double x = rng.uniform(0, 6.0);
        CHECK(confluent_poly(n, b, x)
              == doctest::Approx((double)confluent_sum_oracle(n, b, x)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(confluent_poly(3, -1.0, 1.0), domain_error);
}

TEST_CASE("gauss polynomial: worked examples and summation oracle")
{
    CHECK(gauss_poly(0, 2.0, 1.5, 0.3) == doctest::Approx(1.0));
    CHECK(gauss_poly(1, 3.0, 2.0, 0.5) == doctest::Approx(0.25));

    SplitMix64 rng(52);
    for (int i = 0; i < 50; ++i) {
        const int n = static_cast<int>(rng.uniform(0, 8));
        const double a2 = rng.uniform(-3, 6);
        const double b = rng.uniform(0.3, 5.0);
        const double x = rng.uniform(0, 1.0);
        CHECK(gauss_poly(n, a2, b, x)
              == doctest::Approx((double)gauss_sum_oracle(n, a2, b, x)).epsilon(1e-11));
    }
}

TEST_CASE("wigner d: identity rotation and the spin-1/2 element")
{
    for (int j2 = 0; j2 <= 5; ++j2) {
        HalfInt j = HalfInt::from_twice(j2);
        for (HalfInt m : projections(j))
            for (HalfInt l : projections(j)) {
                const double expect = (m == l) ? 1.0 : 0.0;
                CHECK(wigner_small_d(j, m, l, 0.0) == doctest::Approx(expect));
            }
    }
    HalfInt half = HalfInt::from_twice(1);
    for (double th : {0.0, 0.37, 1.2, 2.9})
        CHECK(wigner_small_d(half, half, half, th) == doctest::Approx(std::cos(0.5 * th)));
    CHECK_THROWS_AS(wigner_small_d(HalfInt(1), HalfInt::from_twice(1), HalfInt(0), 0.3),
                    domain_error);
    CHECK_THROWS_AS(wigner_small_d(HalfInt(1), HalfInt(2), HalfInt(0), 0.3), domain_error);
}

TEST_CASE("wigner d: rows are unit vectors")
{
    SplitMix64 rng(53);
    for (int i = 0; i < 100; ++i) {
        const double th = rng.uniform(0, M_PI);
        for (int j2 = 0; j2 <= 5; ++j2) {
            HalfInt j = HalfInt::from_twice(j2);
            for (HalfInt m : projections(j)) {
                double sum = 0;
                for (HalfInt l : projections(j)) {
                    const double d = wigner_small_d(j, m, l, th);
                    sum += d * d;
                }
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("wigner d satisfies the discretized nutation eigenequation")
{
    for (int j2 = 0; j2 <= 5; ++j2) {
        HalfInt j = HalfInt::from_twice(j2);
        for (HalfInt m : projections(j))
            for (HalfInt l : projections(j))
                CHECK(nutation_residual(j, m, l, 1.0, 1.0) < 1e-6);
    }
    // and with non-unit scales the eigenvalue (2 hbar^2/mu) j(j+1) still fits
    CHECK(nutation_residual(HalfInt::from_twice(3), HalfInt::from_twice(1),
                            HalfInt::from_twice(-1), 2.0, 0.5)
          < 1e-6);
}

TEST_CASE("harmonic levels: closed form and the max identity")
{
    CHECK(energy_harmonic({0, 0, 0, 0}, kUnit).energy == doctest::Approx(2.0));
    CHECK(energy_harmonic({0, 0, 2, 0}, kUnit).energy == doctest::Approx(4.0));
    CHECK(energy_harmonic({1, 0, 1, -1}, kUnit).energy == doctest::Approx(5.0));

    for (int m = -10; m <= 10; ++m)
        for (int l = -10; l <= 10; ++l) {
            CHECK(0.5 * (std::abs(m - l) + std::abs(m + l))
                  == doctest::Approx(std::max(std::abs(m), std::abs(l))));
            for (int n = 0; n <= 3; ++n) {
                QuantumNumbers q{n, 0, m, l};
                CHECK(energy_harmonic(q, kUnit).energy
                      == doctest::Approx(2 * n + 2 + std::max(std::abs(m), std::abs(l))));
            }
        }
}

TEST_CASE("anharmonic levels: substitution example and sign degeneracy")
{
    // 16 C mu / hbar^2 = 9
    const PhysicalParams p{1, 9.0 / 16.0, 1};
    CHECK(energy_anharmonic_ab({0, 0, 0, 0}, p).energy
          == doctest::Approx(3.5 * p.hbar * p.omega()));

    SplitMix64 rng(54);
    for (int i = 0; i < 30; ++i) {
        QuantumNumbers q{static_cast<int>(rng.uniform(0, 4)), static_cast<int>(rng.uniform(0, 4)),
                         static_cast<int>(rng.uniform(-4, 5)), static_cast<int>(rng.uniform(-4, 5))};
        QuantumNumbers flipped{q.n_a, q.n_b, -q.m, -q.l};
        CHECK(energy_anharmonic_ab(q, kUnit).energy
              == doctest::Approx(energy_anharmonic_ab(flipped, kUnit).energy));
    }
}

TEST_CASE("polar anharmonic levels coincide with the alpha-beta formula")
{
    for (int n_a = 0; n_a <= 3; ++n_a)
        for (int n_b = 0; n_b <= 3; ++n_b)
            for (int m = -2; m <= 2; ++m)
                for (int l = -2; l <= 2; ++l) {
                    QuantumNumbers q{n_a, n_b, m, l};
                    CHECK(energy_anharmonic_rtheta(q, kUnit).energy
                          == doctest::Approx(energy_anharmonic_ab(q, kUnit).energy));
                }
}

TEST_CASE("anharmonic levels: C -> 0 structural limit")
{
    const PhysicalParams tiny{1, 1e-20, 1};
    for (int n = 0; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            for (int l = -3; l <= 3; ++l) {
                QuantumNumbers q{n, 0, m, l};
                const double scaled = energy_anharmonic_ab(q, tiny).energy
                                      / (0.5 * tiny.hbar * tiny.omega());
                CHECK(scaled
                      == doctest::Approx(4 * n + 4 + std::abs(m + l) + std::abs(m - l))
                             .epsilon(1e-7));
            }
}

TEST_CASE("effective quantum numbers control the anharmonic level")
{
    // (n, m, l) = (1, 1, 1) and (0, 3, 2): both have 4n + |m+l| = 6 ... check
    QuantumNumbers a{1, 0, 1, 1};   // 4n + |m+l| = 6, |m-l| = 0
    QuantumNumbers b{0, 1, 3, 3};   // 4n + |m+l| = 10 -- different class
    auto na = anharmonic_effective_numbers(a);
    CHECK(na.first == 6);
    CHECK(na.second == 0);
    // equal classes => equal energies
    QuantumNumbers c{0, 1, 1, 1};
    CHECK(anharmonic_effective_numbers(c) == na);
    CHECK(energy_anharmonic_ab(a, kUnit).energy
          == doctest::Approx(energy_anharmonic_ab(c, kUnit).energy));
    CHECK(energy_anharmonic_ab(b, kUnit).energy
          != doctest::Approx(energy_anharmonic_ab(a, kUnit).energy));
}

TEST_CASE("e_theta: nonnegative over the scanned catalog range")
{
    for (int nt = 0; nt <= 5; ++nt)
        for (int m = -5; m <= 5; ++m)
            for (int l = -5; l <= 5; ++l)
                CHECK(e_theta_closed_form(nt, m, l, kUnit) >= 0);
}

TEST_CASE("e_theta feeds the radial law back to the total spectrum")
{
    for (int nt = 0; nt <= 3; ++nt)
        for (int nr = 0; nr <= 3; ++nr)
            for (int m = -2; m <= 2; ++m)
                for (int l = -2; l <= 2; ++l) {
                    const double e_th = e_theta_closed_form(nt, m, l, kUnit);
                    QuantumNumbers q{nr, nt, m, l};
                    CHECK(energy_from_e_theta(nr, e_th, kUnit)
                          == doctest::Approx(energy_anharmonic_rtheta(q, kUnit).energy)
                                 .epsilon(1e-12));
                }
}

TEST_CASE("wavefunctions: Gaussian ground state when the centrifugal index vanishes")
{
    QuantumNumbers q{0, 0, 2, 2};  // m = l: sigma = 0
    const double kappa = kUnit.kappa();
    const double at1 = wavefunction(q, kUnit, PotentialKind::harmonic, WaveVariable::alpha, 1.0);
    for (double x : {0.3, 0.9, 1.7, 2.4}) {
        const double expected = at1 * std::exp(-0.5 * kappa * (x * x - 1.0));
        CHECK(wavefunction(q, kUnit, PotentialKind::harmonic, WaveVariable::alpha, x)
              == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("wavefunctions: node counts equal the radial quantum numbers")
{
    for (int n = 0; n <= 4; ++n) {
        CHECK(wavefunction_node_count({n, 0, 1, 0}, kUnit, PotentialKind::harmonic,
                                      WaveVariable::alpha)
              == n);
        CHECK(wavefunction_node_count({0, n, 1, 0}, kUnit, PotentialKind::harmonic,
                                      WaveVariable::beta)
              == n);
        CHECK(wavefunction_node_count({n, 0, 0, 1}, kUnit,
                                      PotentialKind::anharmonicAlphaBeta, WaveVariable::alpha)
              == n);
        CHECK(wavefunction_node_count({n, 1, 0, 1}, kUnit, PotentialKind::anharmonicRTheta,
                                      WaveVariable::r)
              == n);
        CHECK(wavefunction_node_count({0, n, 0, 1}, kUnit, PotentialKind::anharmonicRTheta,
                                      WaveVariable::theta)
              == n);
    }
}

TEST_CASE("wavefunctions: unit norm under the slice measure")
{
    const WaveVariable vars[] = {WaveVariable::alpha, WaveVariable::beta};
    for (WaveVariable var : vars)
        for (int n = 0; n <= 3; ++n) {
            QuantumNumbers q{n, n, 1, -1};
            const double norm = wavefunction_norm(q, kUnit, PotentialKind::harmonic, var);
            auto [lo, hi] = wavefunction_domain(q, kUnit, PotentialKind::harmonic, var);
            // independent quadrature with a different panel layout
            double total = 0;
            const int panels = 13;
            for (int i = 0; i < panels; ++i) {
                const double a = lo + (hi - lo) * i / panels;
                const double b = lo + (hi - lo) * (i + 1) / panels;
                total += integrate_gl(
                    [&](double x) {
                        const double f = wavefunction(q, kUnit, PotentialKind::harmonic,
                                                      var, x)
                                         / norm;
                        return f * f * x;
                    },
                    a, b, 80);
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
        }
}

TEST_CASE("wavefunctions: orthogonality of distinct radial states")
{
    struct Case {
        PotentialKind model;
        WaveVariable var;
        std::function<double(double)> weight;
    };
    const Case cases[] = {
        {PotentialKind::harmonic, WaveVariable::alpha, [](double x) { return x; }},
        {PotentialKind::anharmonicAlphaBeta, WaveVariable::alpha, [](double x) { return x; }},
        {PotentialKind::anharmonicRTheta, WaveVariable::r, [](double x) { return x; }},
        {PotentialKind::anharmonicRTheta, WaveVariable::theta,
         [](double x) { return std::sin(x); }},
    };
    for (const auto& c : cases)
        for (int n1 = 0; n1 < 4; ++n1)
            for (int n2 = n1 + 1; n2 < 4; ++n2) {
                auto qn = [&](int n) {
                    // the varying index is the slice's own quantum number
                    if (c.var == WaveVariable::theta)
                        return QuantumNumbers{0, n, 1, 0};
                    if (c.var == WaveVariable::r)
                        return QuantumNumbers{n, 1, 1, 0};
                    return QuantumNumbers{n, 0, 1, 0};
                };
                QuantumNumbers qa = qn(n1), qb = qn(n2);
                auto [lo, hi] = wavefunction_domain(qa, kUnit, c.model, c.var);
                auto [lo2, hi2] = wavefunction_domain(qb, kUnit, c.model, c.var);
                const double a = std::min(lo, lo2), b = std::max(hi, hi2);
                double overlap = 0;
                const int panels = 10;
                for (int i = 0; i < panels; ++i) {
                    const double x0 = a + (b - a) * i / panels;
                    const double x1 = a + (b - a) * (i + 1) / panels;
                    overlap += integrate_gl(
                        [&](double x) {
                            return wavefunction_normalized(qa, kUnit, c.model, c.var, x)
                                   * wavefunction_normalized(qb, kUnit, c.model, c.var, x)
                                   * c.weight(x);
                        },
                        x0, x1, 80);
                }
                CHECK(std::abs(overlap) < 1e-7);
            }
}

TEST_CASE("wave factor structure: exponents and polynomial degree")
{
    QuantumNumbers q{2, 1, 3, 0};
    WaveFactor fa = wavefunction_factor(q, kUnit, PotentialKind::harmonic, WaveVariable::alpha);
    CHECK(fa.exponent_origin == doctest::Approx(1.5));  // |m-l|/2
    CHECK(fa.degree == 2);

    WaveFactor fb = wavefunction_factor(q, kUnit, PotentialKind::anharmonicAlphaBeta,
                                        WaveVariable::beta);
    CHECK(fb.exponent_origin == doctest::Approx(1.5));  // |m+l|/2
    CHECK(fb.degree == 1);

    WaveFactor fc = wavefunction_factor(q, kUnit, PotentialKind::anharmonicAlphaBeta,
                                        WaveVariable::alpha);
    CHECK(fc.exponent_origin == doctest::Approx(0.5 * std::sqrt(9.0 + 16.0)));  // chi

    WaveFactor ft = wavefunction_factor(q, kUnit, PotentialKind::anharmonicRTheta,
                                        WaveVariable::theta);
    CHECK(ft.exponent_origin == doctest::Approx(1.5));
    CHECK(ft.exponent_far == doctest::Approx(0.5 * std::sqrt(25.0)));
    CHECK(ft.degree == 1);

    // r factor: -1/2 + eps with eps tied to e_theta
    WaveFactor fr = wavefunction_factor(q, kUnit, PotentialKind::anharmonicRTheta,
                                        WaveVariable::r);
    const double e_th = e_theta_closed_form(q.n_b, q.m, q.l, kUnit);
    CHECK(fr.exponent_origin == doctest::Approx(-0.5 + 0.5 * std::sqrt(1 + 2 * e_th)));
    CHECK(fr.degree == 2);
}

TEST_CASE("rigid-top levels")
{
    TopLevel sph = spherical_top_level(HalfInt(1), 1.0, 1.0);
    CHECK(sph.energy == doctest::Approx(1.0));
    CHECK(sph.degeneracy == 9);

    TopLevel half = spherical_top_level(HalfInt::from_twice(1), 2.0, 1.0);
    CHECK(half.energy == doctest::Approx(0.75 / 4.0));  // (hbar^2/2I) * 3/4
    CHECK(half.degeneracy == 4);

    // symmetric top with I = K reduces to the spherical energy
    TopLevel sym = symmetric_top_level(HalfInt(2), HalfInt(1), 1.3, 1.3, 1.0);
    CHECK(sym.energy == doctest::Approx(spherical_top_level(HalfInt(2), 1.3, 1.0).energy));
    CHECK(sym.degeneracy == 2 * 5);

    TopLevel sym0 = symmetric_top_level(HalfInt(2), HalfInt(0), 1.3, 0.8, 1.0);
    CHECK(sym0.degeneracy == 5);
    CHECK_THROWS_AS(symmetric_top_level(HalfInt(1), HalfInt(2), 1, 1, 1), domain_error);
}
