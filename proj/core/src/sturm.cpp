#include "affine2d/sturm.hpp"

#include <cmath>
#include <string>

namespace affine2d {

namespace {

double gaussian_cutoff(double kappa)
{
    // e^{-kappa x^2 / 2} < 1e-14
    return std::ceil(std::sqrt(2 * 14 * std::log(10.0) / kappa)) + 1.0;
}

struct Tridiag {
    Eigen::VectorXd diag;
    Eigen::VectorXd off;  // off[i] couples i and i+1
};

// Symmetrized generalized discretization W^-1/2 A W^-1/2 on the staggered
// grid, using the regularized closures when the problem carries them.
Tridiag discretize(const SLProblem& prob, int n)
{
    const auto& fp = prob.regularized() ? prob.p_reg : prob.p;
    const auto& fq = prob.regularized() ? prob.q_reg : prob.q;
    const auto& fw = prob.regularized() ? prob.w_reg : prob.w;
    const double h = (prob.x_hi - prob.x_lo) / n;
    Eigen::VectorXd w(n), a_diag(n), a_off(n - 1);
    for (int i = 0; i < n; ++i) {
        const double x = prob.x_lo + (i + 0.5) * h;
        w[i] = fw(x);
        double diag = fq(x);
        const double p_left = fp(prob.x_lo + i * h);
        const double p_right = fp(prob.x_lo + (i + 1) * h);
        if (i > 0)
            diag += p_left / (h * h);
        else if (prob.left == Endpoint::dirichlet)
            diag += 2 * p_left / (h * h);  // ghost reflection f(-1) = -f(0)
        if (i < n - 1)
            diag += p_right / (h * h);
        else if (prob.right == Endpoint::dirichlet)
            diag += 2 * p_right / (h * h);
        a_diag[i] = diag;
        if (i < n - 1)
            a_off[i] = -p_right / (h * h);
    }
    Tridiag t;
    t.diag.resize(n);
    t.off.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        if (!(w[i] > 0))
            throw solver_error("discretize: weight w(x) must be positive on the open domain");
        t.diag[i] = a_diag[i] / w[i];
    }
    for (int i = 0; i < n - 1; ++i)
        t.off[i] = a_off[i] / std::sqrt(w[i] * w[i + 1]);
    return t;
}

// Number of eigenvalues of the symmetric tridiagonal matrix below sigma
// (negative count of the LDL^T pivots).
int sturm_count(const Tridiag& t, double sigma)
{
    const int n = static_cast<int>(t.diag.size());
    int count = 0;
    double d = t.diag[0] - sigma;
    if (d < 0)
        ++count;
    for (int i = 1; i < n; ++i) {
        if (d == 0)
            d = 1e-300;
        d = (t.diag[i] - sigma) - t.off[i - 1] * t.off[i - 1] / d;
        if (d < 0)
            ++count;
    }
    return count;
}

std::vector<double> lowest_by_bisection(const Tridiag& t, int k)
{
    const int n = static_cast<int>(t.diag.size());
    if (k > n)
        throw solver_error("lowest_eigenvalues: more eigenvalues requested than grid points");
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0)
                         + (i < n - 1 ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    if (sturm_count(t, hi) < k)
        throw solver_error("lowest_eigenvalues: Gershgorin bracket failed (count("
                           + std::to_string(hi) + ") < k)");

    std::vector<double> out(k);
    for (int target = 1; target <= k; ++target) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 120 && (b - a) > 1e-14 * std::max(1.0, std::abs(a)); ++iter) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(t, mid) >= target)
                b = mid;
            else
                a = mid;
        }
        out[static_cast<std::size_t>(target - 1)] = 0.5 * (a + b);
    }
    return out;
}

// Solve (T - shift) y = b by tridiagonal LU with partial pivoting (dgttrf-style).
Eigen::VectorXd shifted_solve(const Tridiag& t, double shift, Eigen::VectorXd b)
{
    const int n = static_cast<int>(t.diag.size());
    Eigen::VectorXd d(n), u = Eigen::VectorXd::Zero(n), u2 = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        d[i] = t.diag[i] - shift;
    for (int i = 0; i < n - 1; ++i)
        u[i] = t.off[i];

    for (int i = 0; i < n - 1; ++i) {
        double low = t.off[i];  // subdiagonal entry of the working matrix
        if (std::abs(d[i]) < std::abs(low)) {
            // swap rows i, i+1
            std::swap(d[i], low);          // d[i] = off, low = old diag
            const double old_d1 = d[i + 1];
            const double old_u1 = (i + 1 < n - 1) ? u[i + 1] : 0.0;
            u2[i] = old_u1;
            const double f = low / d[i];
            d[i + 1] = u[i] - f * old_d1;
            u[i] = old_d1;
            if (i + 1 < n - 1)
                u[i + 1] = -f * old_u1;
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= f * b[i];
        } else {
            const double piv = (d[i] == 0) ? 1e-300 : d[i];
            const double f = low / piv;
            d[i + 1] -= f * u[i];
            b[i + 1] -= f * b[i];
        }
    }
    Eigen::VectorXd y(n);
    for (int i = n - 1; i >= 0; --i) {
        double rhs = b[i];
        if (i + 1 < n)
            rhs -= u[i] * y[i + 1];
        if (i + 2 < n)
            rhs -= u2[i] * y[i + 2];
        y[i] = rhs / ((d[i] == 0) ? 1e-300 : d[i]);
    }
    return y;
}

// One eigenvector by inverse iteration at a converged eigenvalue.
Eigen::VectorXd inverse_iteration(const Tridiag& t, double lambda)
{
    const int n = static_cast<int>(t.diag.size());
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    for (int i = 0; i < n; ++i)
        x[i] *= 1.0 + 0.1 * std::sin(1.0 + i);
    const double shift = lambda + 1e-11 * std::max(1.0, std::abs(lambda));
    for (int sweep = 0; sweep < 4; ++sweep) {
        x = shifted_solve(t, shift, x);
        x /= x.norm();
    }
    return x;
}

} // namespace

SLProblem build_problem(SLEquation eq, const PotentialModel& model, HalfInt m, HalfInt l,
                        AngularConvention convention, double e_theta)
{
    model.params.validate();
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    const double hbar = model.params.hbar;
    const double kappa = model.params.kappa();
    const PotentialKind kind = model.kind;

    if (kind == PotentialKind::free)
        throw unsupported_error("free model has no bound slices for the oracle");
    if (kind == PotentialKind::collapseGuard)
        throw unsupported_error("collapseGuard is classical-only; no quantum slices");

    const double mv = m.value(), lv = l.value();
    const double q_scale = 2 * mu / (hbar * hbar);
    SLProblem prob;
    prob.eigenvalue_scale = hbar * hbar / (2 * mu);

    // radial 2D-type slice p = w = x with centrifugal index nu: the bounded
    // solution is x^nu * smooth, extracted into the regularized form
    auto radial_xnu = [&](double nu, bool anh) {
        prob.p = [](double x) { return x; };
        prob.w = [](double x) { return x; };
        prob.q = [=](double x) {
            double v = 0.5 * C * x * x;
            if (anh)
                v += 2 * C / (x * x);
            return nu * nu / x + q_scale * v * x;
        };
        prob.prefactor = [nu](double x) { return std::pow(x, nu); };
        prob.p_reg = [nu](double x) { return std::pow(x, 2 * nu + 1); };
        prob.w_reg = prob.p_reg;
        prob.q_reg = [=](double x) {
            return mu * C / (hbar * hbar) * std::pow(x, 2 * nu + 3);
        };
        prob.x_lo = 0;
        prob.x_hi = gaussian_cutoff(kappa) + nu / kappa;
        prob.left = Endpoint::regularSingular;
        prob.right = Endpoint::dirichlet;
        prob.grid_n = std::max(2000, static_cast<int>(200 * (prob.x_hi - prob.x_lo)));
    };

    switch (eq) {
    case SLEquation::alphaRadial: {
        const bool anh = (kind != PotentialKind::harmonic);
        // the 1/x^2 part of the anharmonic potential joins the centrifugal
        // index: nu^2 = (m-l)^2/4 (+ 4 mu C / hbar^2 for the anharmonic well)
        const double nu2 = 0.25 * (mv - lv) * (mv - lv)
                           + (anh ? 4 * mu * C / (hbar * hbar) : 0.0);
        radial_xnu(std::sqrt(nu2), anh);
        return prob;
    }
    case SLEquation::betaRadial:
        radial_xnu(0.5 * std::abs(mv + lv), false);
        return prob;
    case SLEquation::thetaAngular: {
        // harmonic: V_theta = 0 (pure nutation); anharmonic: 2C/cos^2(theta/2)
        const bool shear = (kind != PotentialKind::harmonic);
        const double denom4 = (convention == AngularConvention::integerPair) ? 4.0 : 1.0;
        prob.p = [](double x) { return std::sin(x); };
        prob.w = [](double x) { return std::sin(x); };
        prob.q = [=](double x) {
            const double st = std::sin(x), ct = std::cos(x);
            const double num = mv * mv + 2 * mv * lv * ct + lv * lv;
            double v_theta = 0;
            if (shear) {
                const double c2 = std::cos(0.5 * x) * std::cos(0.5 * x);
                v_theta = 2 * C / c2;
            }
            return num / (denom4 * st) + 0.5 * mu / (hbar * hbar) * v_theta * st;
        };
        // endpoint indices: f ~ sin(t/2)^g0 at 0 and cos(t/2)^g1 at pi
        const double g0 = std::abs(mv + lv) / std::sqrt(denom4);
        const double g1 = std::sqrt((mv - lv) * (mv - lv) / denom4
                                    + (shear ? 4 * mu * C / (hbar * hbar) : 0.0));
        const double big_g = g0 + g1;
        auto pre = [g0, g1](double x) {
            return std::pow(std::sin(0.5 * x), g0) * std::pow(std::cos(0.5 * x), g1);
        };
        prob.prefactor = pre;
        prob.p_reg = [pre](double x) {
            const double s = pre(x);
            return std::sin(x) * s * s;
        };
        prob.w_reg = prob.p_reg;
        prob.q_reg = [pre, big_g](double x) {
            const double s = pre(x);
            return 0.5 * big_g * (big_g + 2) * std::sin(0.5 * x) * std::cos(0.5 * x) * s * s;
        };
        prob.x_lo = 0;
        prob.x_hi = M_PI;
        prob.left = Endpoint::regularSingular;
        prob.right = Endpoint::regularSingular;
        prob.eigenvalue_scale = 2 * hbar * hbar / mu;
        return prob;
    }
    case SLEquation::rRadial: {
        prob.p = [](double x) { return 4 * x * x; };
        prob.w = [](double x) { return x; };
        prob.q = [=](double x) { return q_scale * (0.5 * C * x * x + e_theta); };
        // f ~ r^(-1/2 + eps), eps = (1/2) sqrt(1 + 2 mu e_theta / hbar^2)
        const double eps = 0.5 * std::sqrt(1 + q_scale * e_theta);
        const double s_nu = -0.5 + eps;
        prob.prefactor = [s_nu](double x) { return std::pow(x, s_nu); };
        prob.p_reg = [s_nu](double x) { return 4 * std::pow(x, 2 * s_nu + 2); };
        prob.w_reg = [s_nu](double x) { return std::pow(x, 2 * s_nu + 1); };
        prob.q_reg = [=](double x) {
            return mu * C / (hbar * hbar) * std::pow(x, 2 * s_nu + 2);
        };
        prob.x_lo = 0;
        // decay sets in past the turning point r ~ 2 E_max / C; pad by the
        // envelope length and the polynomial correction
        prob.x_hi = std::ceil(2 * 14 * std::log(10.0) / kappa
                              + 8 * std::sqrt(std::max(e_theta, 1.0)) / kappa);
        prob.left = Endpoint::regularSingular;
        prob.right = Endpoint::dirichlet;
        prob.grid_n = std::max(2000, static_cast<int>(64 * (prob.x_hi - prob.x_lo)));
        return prob;
    }
    case SLEquation::rhoRadial: {
        prob.p = [](double x) { return x * x * x; };
        prob.w = [](double x) { return x * x * x; };
        prob.q = [=](double x) {
            return q_scale * (0.5 * C * x * x + e_theta / (x * x)) * x * x * x;
        };
        const double eps = 0.5 * std::sqrt(1 + q_scale * e_theta);
        const double s_rho = -1 + 2 * eps;
        prob.prefactor = [s_rho](double x) { return std::pow(x, s_rho); };
        prob.p_reg = [s_rho](double x) { return std::pow(x, 2 * s_rho + 3); };
        prob.w_reg = prob.p_reg;
        prob.q_reg = [=](double x) {
            return mu * C / (hbar * hbar) * std::pow(x, 2 * s_rho + 5);
        };
        prob.x_lo = 0;
        prob.x_hi = gaussian_cutoff(kappa) + 2 * eps / kappa;
        prob.left = Endpoint::regularSingular;
        prob.right = Endpoint::dirichlet;
        prob.grid_n = std::max(2000, static_cast<int>(200 * (prob.x_hi - prob.x_lo)));
        return prob;
    }
    }
    throw unsupported_error("unknown separated equation");
}

EigenResult lowest_eigenvalues(const SLProblem& prob, int k)
{
    if (k < 1)
        throw domain_error("lowest_eigenvalues: k must be at least 1");
    if (prob.grid_n < 200)
        throw domain_error("lowest_eigenvalues: grid_n must be at least 200");

    std::vector<double> coarse = lowest_by_bisection(discretize(prob, prob.grid_n), k);
    std::vector<double> fine = lowest_by_bisection(discretize(prob, 2 * prob.grid_n), k);

    EigenResult res;
    res.grid_n = prob.grid_n;
    res.eigenvalues.resize(static_cast<std::size_t>(k));
    res.error_estimates.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        // second-order scheme: one Richardson step
        const double extrap = (4 * fine[i] - coarse[i]) / 3.0;
        res.eigenvalues[i] = extrap * prob.eigenvalue_scale;
        res.error_estimates[i] = std::abs(fine[i] - coarse[i]) / 3.0 * prob.eigenvalue_scale;
    }
    return res;
}

DiscreteEigen eigenpairs(const SLProblem& prob, int k)
{
    const int n = prob.grid_n;
    Tridiag t = discretize(prob, n);
    std::vector<double> lambdas = lowest_by_bisection(t, k);

    DiscreteEigen out;
    const double h = (prob.x_hi - prob.x_lo) / n;
    out.grid.resize(static_cast<std::size_t>(n));
    out.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = prob.x_lo + (i + 0.5) * h;
        out.grid[static_cast<std::size_t>(i)] = x;
        out.weights[static_cast<std::size_t>(i)] = prob.w(x) * h;
    }
    out.vectors.resize(n, k);
    out.values.resize(static_cast<std::size_t>(k));
    const auto& fw = prob.regularized() ? prob.w_reg : prob.w;
    for (int j = 0; j < k; ++j) {
        out.values[static_cast<std::size_t>(j)] = lambdas[static_cast<std::size_t>(j)]
                                                  * prob.eigenvalue_scale;
        Eigen::VectorXd g = inverse_iteration(t, lambdas[static_cast<std::size_t>(j)]);
        // back to the original variable: u = W^{-1/2} g, f = prefactor * u,
        // then normalize under the raw measure w
        Eigen::VectorXd f(n);
        double norm2 = 0;
        for (int i = 0; i < n; ++i) {
            const double x = out.grid[static_cast<std::size_t>(i)];
            double fi = g[i] / std::sqrt(fw(x));
            if (prob.regularized())
                fi *= prob.prefactor(x);
            f[i] = fi;
            norm2 += fi * fi * out.weights[static_cast<std::size_t>(i)];
        }
        out.vectors.col(j) = f / std::sqrt(norm2);
    }
    return out;
}

SpectrumComparison validate_spectrum(PotentialKind model, int m, int l, int k,
                                     const PhysicalParams& params)
{
    SpectrumComparison cmp;
    auto add = [&](const std::string& slice, int n, double analytic, double oracle) {
        const double rel = std::abs(oracle - analytic)
                           / std::max(std::abs(analytic), 1e-300);
        cmp.rows.push_back({slice, n, analytic, oracle, rel});
        cmp.max_rel_error = std::max(cmp.max_rel_error, rel);
    };
    PotentialModel pm{model, params};

    switch (model) {
    case PotentialKind::harmonic:
    case PotentialKind::anharmonicAlphaBeta: {
        EigenResult ea = lowest_eigenvalues(
            build_problem(SLEquation::alphaRadial, pm, HalfInt(m), HalfInt(l)), k);
        for (int n = 0; n < k; ++n)
            add("alpha", n, energy_alpha_slice(model, n, m, l, params),
                ea.eigenvalues[static_cast<std::size_t>(n)]);
        EigenResult eb = lowest_eigenvalues(
            build_problem(SLEquation::betaRadial, pm, HalfInt(m), HalfInt(l)), k);
        for (int n = 0; n < k; ++n)
            add("beta", n, energy_beta_slice(model, n, m, l, params),
                eb.eigenvalues[static_cast<std::size_t>(n)]);
        return cmp;
    }
    case PotentialKind::anharmonicRTheta: {
        EigenResult eth = lowest_eigenvalues(
            build_problem(SLEquation::thetaAngular, pm, HalfInt(m), HalfInt(l)), k);
        for (int nt = 0; nt < k; ++nt)
            add("theta", nt, e_theta_closed_form(nt, m, l, params),
                eth.eigenvalues[static_cast<std::size_t>(nt)]);
        // nested assembly: the r equation consumes the oracle's own e_theta
        for (int nt = 0; nt < k; ++nt) {
            const double e_th = eth.eigenvalues[static_cast<std::size_t>(nt)];
            EigenResult er = lowest_eigenvalues(
                build_problem(SLEquation::rRadial, pm, HalfInt(m), HalfInt(l),
                              AngularConvention::integerPair, e_th),
                k);
            for (int nr = 0; nr < k; ++nr) {
                QuantumNumbers q{nr, nt, m, l};
                add("total(n_theta=" + std::to_string(nt) + ")", nr,
                    energy_anharmonic_rtheta(q, params).energy,
                    er.eigenvalues[static_cast<std::size_t>(nr)]);
            }
        }
        return cmp;
    }
    default:
        throw unsupported_error(std::string("no analytic spectrum to validate for model ")
                                + potential_kind_name(model));
    }
}

} // namespace affine2d
