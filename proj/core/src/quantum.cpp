#include "affine2d/quantum.hpp"

#include <cmath>
#include <vector>

#include "affine2d/quadrature.hpp"

namespace affine2d {

HalfInt HalfInt::from_double(double v)
{
    const double t = 2 * v;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9)
        throw domain_error("HalfInt: value is neither integer nor half-integer");
    return from_twice(static_cast<int>(r));
}

double confluent_poly(int n, double b, double x)
{
    if (n < 0)
        throw domain_error("confluent_poly: n must be nonnegative");
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        const double denom = b + k;
        if (denom == 0)
            throw domain_error("confluent_poly: Pochhammer (b)_k vanishes inside the sum");
        term *= static_cast<double>(-(n - k)) / denom * x / (k + 1);
        sum += term;
    }
    return sum;
}

double gauss_poly(int n, double a2, double b, double x)
{
    if (n < 0)
        throw domain_error("gauss_poly: n must be nonnegative");
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        const double denom = b + k;
        if (denom == 0)
            throw domain_error("gauss_poly: Pochhammer (b)_k vanishes inside the sum");
        term *= static_cast<double>(-(n - k)) * (a2 + k) / denom * x / (k + 1);
        sum += term;
    }
    return sum;
}

namespace {

double factorial(int n)
{
    static std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1;
        for (int i = 1; i <= 170; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > 170)
        throw domain_error("factorial argument out of range");
    return table[static_cast<std::size_t>(n)];
}

} // namespace

double wigner_small_d(HalfInt j, HalfInt m, HalfInt l, double theta)
{
    // all of j+-m, j+-l must be nonnegative integers
    const int jm = (j.twice + m.twice) / 2, jmm = (j.twice - m.twice) / 2;
    const int jl = (j.twice + l.twice) / 2, jml = (j.twice - l.twice) / 2;
    if ((j.twice + m.twice) % 2 != 0 || (j.twice + l.twice) % 2 != 0)
        throw domain_error("wigner_small_d: m, l must differ from j by integers");
    if (jm < 0 || jmm < 0 || jl < 0 || jml < 0)
        throw domain_error("wigner_small_d: |m|, |l| must not exceed j");

    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const double pref = std::sqrt(factorial(jm) * factorial(jmm) * factorial(jl)
                                  * factorial(jml));
    // m - l is an integer; the sum index shifts by it
    const int ml = (m.twice - l.twice) / 2;
    const int s_min = std::max(0, -ml);
    const int s_max = std::min(jl, jmm);

    double sum = 0;
    for (int k = s_min; k <= s_max; ++k) {
        const int pc = jl + jmm - 2 * k;  // cos power
        const int ps = ml + 2 * k;        // sin power (ml + k >= 0 in range)
        const double denom = factorial(jl - k) * factorial(k) * factorial(ml + k)
                             * factorial(jmm - k);
        const double sign = ((ml + k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::pow(c, pc) * std::pow(s, ps) / denom;
    }
    return pref * sum;
}

double nutation_eigenfunction(HalfInt j, HalfInt m, HalfInt l, double theta)
{
    return wigner_small_d(j, m, -l, theta);
}

double nutation_residual(HalfInt j, HalfInt m, HalfInt l, double mu, double hbar)
{
    const double jj = j.value() * (j.value() + 1);
    const double e_theta = 2 * hbar * hbar / mu * jj;
    const double mv = m.value(), lv = l.value();
    auto f = [&](double th) { return nutation_eigenfunction(j, m, l, th); };

    const double h = 1e-4;
    double worst = 0;
    const int n_grid = 73;
    for (int i = 1; i <= n_grid; ++i) {
        const double th = 0.15 + (M_PI - 0.3) * i / (n_grid + 1.0);
        const double f0 = f(th), fp = f(th + h), fm = f(th - h);
        const double d1 = (fp - fm) / (2 * h);
        const double d2 = (fp - 2 * f0 + fm) / (h * h);
        const double st = std::sin(th), ct = std::cos(th);
        const double centrifugal = (mv * mv + 2 * mv * lv * ct + lv * lv) / (st * st);
        const double residual = d2 + ct / st * d1 - centrifugal * f0
                                + 0.5 * mu / (hbar * hbar) * e_theta * f0;
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

SpectrumEntry energy_harmonic(const QuantumNumbers& q, const PhysicalParams& p)
{
    if (q.n_a < 0 || q.n_b < 0)
        throw domain_error("quantum numbers n_a, n_b must be nonnegative");
    const double e = 0.5 * p.hbar * p.omega()
                     * (4 * q.n() + 4 + std::abs(q.m - q.l) + std::abs(q.m + q.l));
    return {q, e, PotentialKind::harmonic, Provenance::analytic};
}

namespace {

double chi_anharmonic(int m, int l, const PhysicalParams& p)
{
    const double d = m - l;
    return 0.5 * std::sqrt(d * d + 16 * p.stiffness * p.mu / (p.hbar * p.hbar));
}

} // namespace

SpectrumEntry energy_anharmonic_ab(const QuantumNumbers& q, const PhysicalParams& p)
{
    if (q.n_a < 0 || q.n_b < 0)
        throw domain_error("quantum numbers n_a, n_b must be nonnegative");
    const double e = 0.5 * p.hbar * p.omega()
                     * (4 * q.n() + 4 + std::abs(q.m + q.l) + 2 * chi_anharmonic(q.m, q.l, p));
    return {q, e, PotentialKind::anharmonicAlphaBeta, Provenance::analytic};
}

SpectrumEntry energy_anharmonic_rtheta(const QuantumNumbers& q, const PhysicalParams& p)
{
    SpectrumEntry e = energy_anharmonic_ab(q, p);
    e.model = PotentialKind::anharmonicRTheta;
    return e;
}

std::pair<int, int> anharmonic_effective_numbers(const QuantumNumbers& q)
{
    return {4 * q.n() + std::abs(q.m + q.l), std::abs(q.m - q.l)};
}

double energy_alpha_slice(PotentialKind model, int n_alpha, int m, int l,
                          const PhysicalParams& p)
{
    double s;
    switch (model) {
    case PotentialKind::harmonic:
        s = 0.5 * std::abs(m - l);
        break;
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        s = chi_anharmonic(m, l, p);
        break;
    default:
        throw unsupported_error("no alpha-slice level for this model");
    }
    return 0.5 * p.hbar * p.omega() * (4 * n_alpha + 2 + 2 * s);
}

double energy_beta_slice(PotentialKind model, int n_beta, int m, int l,
                         const PhysicalParams& p)
{
    switch (model) {
    case PotentialKind::harmonic:
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        return 0.5 * p.hbar * p.omega() * (4 * n_beta + 2 + std::abs(m + l));
    default:
        throw unsupported_error("no beta-slice level for this model");
    }
}

double e_theta_closed_form(int n_theta, int m, int l, const PhysicalParams& p)
{
    const double chi = chi_anharmonic(m, l, p);
    const double s = 4 * n_theta + 2 + std::abs(m + l) + 2 * chi;
    return p.hbar * p.hbar / (8 * p.mu) * (s * s - 4);
}

double energy_from_e_theta(int n_r, double e_theta, const PhysicalParams& p)
{
    const double root = std::sqrt(1 + 2 * p.mu * e_theta / (p.hbar * p.hbar));
    return p.hbar * p.omega() * (2 * n_r + 1 + root);
}

namespace {

struct WaveSpec {
    std::function<double(double)> f;  // unnormalized factor
    std::function<double(double)> w;  // measure weight
    double x_lo, x_hi;                // integration / scan domain
};

WaveSpec make_wave(const QuantumNumbers& q, const PhysicalParams& p, PotentialKind model,
                   WaveVariable var)
{
    p.validate();
    if (q.n_a < 0 || q.n_b < 0)
        throw domain_error("quantum numbers n_a, n_b must be nonnegative");
    const double kappa = p.kappa();
    // Gaussian-envelope cutoff: e^{-kappa x^2 / 2} < 1e-14
    const double x_max = std::sqrt(2 * 14 * std::log(10.0) / kappa);

    switch (var) {
    case WaveVariable::alpha: {
        double s;
        if (model == PotentialKind::harmonic)
            s = 0.5 * std::abs(q.m - q.l);
        else if (model == PotentialKind::anharmonicAlphaBeta
                 || model == PotentialKind::anharmonicRTheta)
            s = chi_anharmonic(q.m, q.l, p);
        else
            throw unsupported_error("no alpha wavefunction for this model");
        const int n = q.n_a;
        const double pref = std::pow(kappa, 0.25 + 0.5 * s);
        auto f = [=](double x) {
            if (x < 0)
                throw domain_error("alpha factor domain is x >= 0");
            return std::pow(x, s) * pref * std::exp(-0.5 * kappa * x * x)
                   * confluent_poly(n, 1 + s, kappa * x * x);
        };
        return {f, [](double x) { return x; }, 0, x_max};
    }
    case WaveVariable::beta: {
        if (model != PotentialKind::harmonic && model != PotentialKind::anharmonicAlphaBeta
            && model != PotentialKind::anharmonicRTheta)
            throw unsupported_error("no beta wavefunction for this model");
        const double g = 0.5 * std::abs(q.m + q.l);
        const int n = q.n_b;
        const double pref = std::pow(kappa, 0.25 + 0.5 * g);
        auto f = [=](double x) {
            if (x < 0)
                throw domain_error("beta factor domain is x >= 0");
            return std::pow(x, g) * pref * std::exp(-0.5 * kappa * x * x)
                   * confluent_poly(n, 1 + g, kappa * x * x);
        };
        return {f, [](double x) { return x; }, 0, x_max};
    }
    case WaveVariable::r: {
        if (model != PotentialKind::anharmonicRTheta)
            throw unsupported_error("the r factor belongs to the polar anharmonic model");
        const double e_th = e_theta_closed_form(q.n_b, q.m, q.l, p);
        const double eps = 0.5 * std::sqrt(1 + 2 * p.mu * e_th / (p.hbar * p.hbar));
        const int n = q.n_a;
        const double pref = std::pow(kappa, 0.5 + eps);
        auto f = [=](double x) {
            if (x <= 0)
                throw domain_error("r factor domain is x > 0");
            return std::pow(x, -0.5 + eps) * pref * std::exp(-0.5 * kappa * x)
                   * confluent_poly(n, 1 + 2 * eps, kappa * x);
        };
        // e^{-kappa r / 2} envelope in r, not r^2
        const double r_max = 2 * 14 * std::log(10.0) / kappa + 4 * (2 * n + 2 * eps) / kappa;
        return {f, [](double x) { return x; }, 0, r_max};
    }
    case WaveVariable::theta: {
        if (model != PotentialKind::anharmonicRTheta)
            throw unsupported_error("the theta factor belongs to the polar anharmonic model");
        const double chi = chi_anharmonic(q.m, q.l, p);
        const double g = 0.5 * std::abs(q.m + q.l);
        const int n = q.n_b;
        auto f = [=](double x) {
            const double c = std::cos(0.5 * x), s = std::sin(0.5 * x);
            return std::pow(c, chi) * std::pow(s, g)
                   * gauss_poly(n, 1 + n + g + chi, 1 + chi, c * c);
        };
        return {f, [](double x) { return std::sin(x); }, 0, M_PI};
    }
    }
    throw unsupported_error("unknown wave variable");
}

} // namespace

double wavefunction(const QuantumNumbers& q, const PhysicalParams& p, PotentialKind model,
                    WaveVariable var, double x)
{
    return make_wave(q, p, model, var).f(x);
}

WaveFactor wavefunction_factor(const QuantumNumbers& q, const PhysicalParams& p,
                               PotentialKind model, WaveVariable var)
{
    (void)make_wave(q, p, model, var);  // run the shared validation
    WaveFactor out;
    out.variable = var;
    out.params = p;
    const bool anh = (model != PotentialKind::harmonic);
    switch (var) {
    case WaveVariable::alpha:
        out.exponent_origin = anh ? chi_anharmonic(q.m, q.l, p) : 0.5 * std::abs(q.m - q.l);
        out.degree = q.n_a;
        return out;
    case WaveVariable::beta:
        out.exponent_origin = 0.5 * std::abs(q.m + q.l);
        out.degree = q.n_b;
        return out;
    case WaveVariable::r: {
        const double e_th = e_theta_closed_form(q.n_b, q.m, q.l, p);
        out.exponent_origin = -0.5 + 0.5 * std::sqrt(1 + 2 * p.mu * e_th / (p.hbar * p.hbar));
        out.degree = q.n_a;
        return out;
    }
    case WaveVariable::theta:
        out.exponent_origin = 0.5 * std::abs(q.m + q.l);
        out.exponent_far = chi_anharmonic(q.m, q.l, p);
        out.degree = q.n_b;
        return out;
    }
    throw unsupported_error("unknown wave variable");
}

double wavefunction_norm(const QuantumNumbers& q, const PhysicalParams& p,
                         PotentialKind model, WaveVariable var)
{
    WaveSpec spec = make_wave(q, p, model, var);
    auto integrand = [&](double x) {
        const double v = spec.f(x);
        return v * v * spec.w(x);
    };
    // panelled Gauss-Legendre: the integrand is smooth but spread unevenly
    const int panels = 8;
    double total = 0;
    for (int i = 0; i < panels; ++i) {
        const double a = spec.x_lo + (spec.x_hi - spec.x_lo) * i / panels;
        const double b = spec.x_lo + (spec.x_hi - spec.x_lo) * (i + 1) / panels;
        total += integrate_gl(integrand, a, b, 96);
    }
    return std::sqrt(total);
}

double wavefunction_normalized(const QuantumNumbers& q, const PhysicalParams& p,
                               PotentialKind model, WaveVariable var, double x)
{
    return wavefunction(q, p, model, var, x) / wavefunction_norm(q, p, model, var);
}

std::pair<double, double> wavefunction_domain(const QuantumNumbers& q,
                                              const PhysicalParams& p,
                                              PotentialKind model, WaveVariable var)
{
    WaveSpec spec = make_wave(q, p, model, var);
    return {spec.x_lo, spec.x_hi};
}

int wavefunction_node_count(const QuantumNumbers& q, const PhysicalParams& p,
                            PotentialKind model, WaveVariable var)
{
    WaveSpec spec = make_wave(q, p, model, var);
    const int n_scan = 4000;
    int nodes = 0;
    double prev = 0;
    bool have_prev = false;
    for (int i = 1; i < n_scan; ++i) {
        const double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / n_scan;
        const double v = spec.f(x);
        if (v == 0)
            continue;
        if (have_prev && (v > 0) != (prev > 0))
            ++nodes;
        prev = v;
        have_prev = true;
    }
    return nodes;
}

TopLevel spherical_top_level(HalfInt j, double inertia, double hbar)
{
    if (j.twice < 0 || inertia <= 0)
        throw domain_error("spherical_top_level: j >= 0 and I > 0 required");
    const double jj = j.value() * (j.value() + 1);
    const int two_j_plus_1 = j.twice + 1;
    return {hbar * hbar / (2 * inertia) * jj, two_j_plus_1 * two_j_plus_1};
}

TopLevel symmetric_top_level(HalfInt j, HalfInt l, double inertia_i, double inertia_k,
                             double hbar)
{
    if (j.twice < 0 || inertia_i <= 0 || inertia_k <= 0)
        throw domain_error("symmetric_top_level: j >= 0 and I, K > 0 required");
    if (std::abs(l.twice) > j.twice || (j.twice + l.twice) % 2 != 0)
        throw domain_error("symmetric_top_level: l must satisfy |l| <= j, j - l integer");
    const double jj = j.value() * (j.value() + 1);
    const double lv = l.value();
    const double e = hbar * hbar / (2 * inertia_i) * jj
                     + hbar * hbar * (0.5 / inertia_i - 0.5 / inertia_k) * lv * lv;
    const int two_j_plus_1 = j.twice + 1;
    return {e, l.twice == 0 ? two_j_plus_1 : 2 * two_j_plus_1};
}

} // namespace affine2d
