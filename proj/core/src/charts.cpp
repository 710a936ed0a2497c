#include "affine2d/charts.hpp"

#include <cmath>

namespace affine2d {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

double mod_2pi(double x)
{
    double y = std::fmod(x, 2.0 * M_PI);
    if (y < 0)
        y += 2.0 * M_PI;
    return y;
}

// Entries of O(phi) diag(d1,d2) R(psi)^T.
void compose_entries(double phi, double psi, double d1, double d2,
                     double& x, double& y, double& z, double& u)
{
    const double cf = std::cos(phi), sf = std::sin(phi);
    const double cp = std::cos(psi), sp = std::sin(psi);
    x = d1 * cf * cp + d2 * sf * sp;
    y = d1 * cf * sp - d2 * sf * cp;
    z = d1 * sf * cp - d2 * cf * sp;
    u = d1 * sf * sp + d2 * cf * cp;
}

} // namespace

const char* chart_name(Chart c)
{
    switch (c) {
    case Chart::cartesian:     return "cartesian";
    case Chart::twoPolar:      return "twoPolar";
    case Chart::alphaBeta:     return "alphaBeta";
    case Chart::polarRTheta:   return "polarRTheta";
    case Chart::rhoEpsilon:    return "rhoEpsilon";
    case Chart::exponentialAB: return "exponentialAB";
    case Chart::elliptic:      return "elliptic";
    }
    return "?";
}

Chart chart_from_name(const std::string& name)
{
    for (Chart c : {Chart::cartesian, Chart::twoPolar, Chart::alphaBeta, Chart::polarRTheta,
                    Chart::rhoEpsilon, Chart::exponentialAB, Chart::elliptic})
        if (name == chart_name(c))
            return c;
    throw unsupported_error("unknown chart name: " + name);
}

std::array<const char*, 4> chart_coord_names(Chart c)
{
    switch (c) {
    case Chart::cartesian:     return {"x", "y", "z", "u"};
    case Chart::twoPolar:      return {"phi", "psi", "d1", "d2"};
    case Chart::alphaBeta:     return {"eta", "gamma", "alpha", "beta"};
    case Chart::polarRTheta:   return {"phi", "psi", "r", "theta"};
    case Chart::rhoEpsilon:    return {"eta", "gamma", "rho", "epsilon"};
    case Chart::exponentialAB: return {"phi", "psi", "a", "b"};
    case Chart::elliptic:      return {"eta", "gamma", "kappa", "lambda"};
    }
    return {"?", "?", "?", "?"};
}

TwoPolarCoords two_polar_decompose(const ConfigurationMatrix& m, const DecomposeOptions& opts)
{
    const double det = m.det();
    if (det == 0.0)
        throw domain_error("two_polar_decompose: singular matrix (det = 0)");
    if (det < 0.0 && !opts.allow_reflection)
        throw domain_error("two_polar_decompose: det < 0 requires allow_reflection "
                           "(mirror configurations are outside GL+(2,R))");

    // Rotation-angle form of the closed 2x2 SVD:
    //   (x+u)/2 = q cos(phi-psi),  (z-y)/2 = q sin(phi-psi),   q = (d1+d2)/2
    //   (x-u)/2 = s cos(phi+psi),  (z+y)/2 = s sin(phi+psi),   s = (d1-d2)/2
    const double e = 0.5 * (m.x + m.u);
    const double h = 0.5 * (m.z - m.y);
    const double f = 0.5 * (m.x - m.u);
    const double g = 0.5 * (m.z + m.y);

    const double q = std::hypot(e, h);
    const double s = std::hypot(f, g);

    TwoPolarCoords out;
    out.d1 = q + s;
    out.d2 = q - s;

    const double eta = std::atan2(h, e);            // phi - psi
    double gamma;
    if (s == 0.0) {
        // d1 == d2: the material angle is pure gauge; fix psi = 0.
        gamma = eta;
    } else {
        gamma = std::atan2(g, f);                   // phi + psi
    }
    out.phi = mod_2pi(0.5 * (gamma + eta));
    out.psi = mod_2pi(0.5 * (gamma - eta));
    return out;
}

ConfigurationMatrix two_polar_compose(const TwoPolarCoords& c)
{
    ConfigurationMatrix m;
    compose_entries(c.phi, c.psi, c.d1, c.d2, m.x, m.y, m.z, m.u);
    return m;
}

// ---------------------------------------------------------------------------
// Transform legs through the alphaBeta hub.
//
// Point maps and analytic Jacobians between each chart and (eta, gamma,
// alpha, beta).  Angle pairs map linearly; only the cartesian legs involve
// the two-polar branch.
// ---------------------------------------------------------------------------

namespace {

using Q4 = std::array<double, 4>;
using Eigen::Matrix4d;
using Eigen::Vector4d;

// (phi, psi) -> (eta, gamma) block and inverse, shared by several charts.
void angles_to_eta_gamma(double phi, double psi, double& eta, double& gamma)
{
    eta = phi - psi;
    gamma = phi + psi;
}
void angles_from_eta_gamma(double eta, double gamma, double& phi, double& psi)
{
    phi = 0.5 * (gamma + eta);
    psi = 0.5 * (gamma - eta);
}

Matrix4d jac_angle_block_to_eta_gamma()
{
    Matrix4d j = Matrix4d::Zero();
    j(0, 0) = 1;  j(0, 1) = -1;
    j(1, 0) = 1;  j(1, 1) = 1;
    return j;  // radial block filled by caller
}
Matrix4d jac_angle_block_from_eta_gamma()
{
    Matrix4d j = Matrix4d::Zero();
    j(0, 0) = 0.5;  j(0, 1) = 0.5;
    j(1, 0) = -0.5; j(1, 1) = 0.5;
    return j;
}

// --- twoPolar ---------------------------------------------------------------

Q4 ab_from_two_polar(const Q4& q)
{
    Q4 out;
    angles_to_eta_gamma(q[0], q[1], out[0], out[1]);
    out[2] = (q[2] + q[3]) / kSqrt2;
    out[3] = (q[2] - q[3]) / kSqrt2;
    return out;
}
Q4 two_polar_from_ab(const Q4& q)
{
    Q4 out;
    angles_from_eta_gamma(q[0], q[1], out[0], out[1]);
    out[2] = (q[2] + q[3]) / kSqrt2;
    out[3] = (q[2] - q[3]) / kSqrt2;
    return out;
}
Matrix4d jac_ab_from_two_polar(const Q4&)
{
    Matrix4d j = jac_angle_block_to_eta_gamma();
    j(2, 2) = 1 / kSqrt2;  j(2, 3) = 1 / kSqrt2;
    j(3, 2) = 1 / kSqrt2;  j(3, 3) = -1 / kSqrt2;
    return j;
}
Matrix4d jac_two_polar_from_ab(const Q4&)
{
    Matrix4d j = jac_angle_block_from_eta_gamma();
    j(2, 2) = 1 / kSqrt2;  j(2, 3) = 1 / kSqrt2;
    j(3, 2) = 1 / kSqrt2;  j(3, 3) = -1 / kSqrt2;
    return j;
}

// --- polarRTheta ------------------------------------------------------------

Q4 ab_from_polar(const Q4& q)
{
    const double r = q[2], th = q[3];
    if (r <= 0)
        throw domain_error("polarRTheta: r must be positive");
    Q4 out;
    angles_to_eta_gamma(q[0], q[1], out[0], out[1]);
    const double sr = std::sqrt(r);
    out[2] = sr * std::cos(0.5 * th);
    out[3] = sr * std::sin(0.5 * th);
    return out;
}
Q4 polar_from_ab(const Q4& q)
{
    const double a = q[2], b = q[3];
    if (b < 0)
        throw domain_error("transform: beta < 0 has no polarRTheta principal-branch "
                           "image (theta in [0, pi))");
    if (a <= 0 && b == 0)
        throw domain_error("transform: alpha <= 0, beta = 0 is outside the polarRTheta chart");
    Q4 out;
    angles_from_eta_gamma(q[0], q[1], out[0], out[1]);
    out[2] = a * a + b * b;
    out[3] = 2.0 * std::atan2(b, a);
    return out;
}
Matrix4d jac_ab_from_polar(const Q4& q)
{
    const double r = q[2], th = q[3];
    const double sr = std::sqrt(r);
    const double c = std::cos(0.5 * th), s = std::sin(0.5 * th);
    Matrix4d j = jac_angle_block_to_eta_gamma();
    j(2, 2) = 0.5 * c / sr;   j(2, 3) = -0.5 * sr * s;
    j(3, 2) = 0.5 * s / sr;   j(3, 3) = 0.5 * sr * c;
    return j;
}
Matrix4d jac_polar_from_ab(const Q4& q)
{
    const double a = q[2], b = q[3];
    const double r = a * a + b * b;
    Matrix4d j = jac_angle_block_from_eta_gamma();
    j(2, 2) = 2 * a;      j(2, 3) = 2 * b;
    j(3, 2) = -2 * b / r; j(3, 3) = 2 * a / r;
    return j;
}

// --- rhoEpsilon -------------------------------------------------------------

Q4 ab_from_rho_eps(const Q4& q)
{
    const double rho = q[2], eps = q[3];
    if (rho <= 0)
        throw domain_error("rhoEpsilon: rho must be positive");
    return {q[0], q[1], rho * std::cos(eps), rho * std::sin(eps)};
}
Q4 rho_eps_from_ab(const Q4& q)
{
    const double a = q[2], b = q[3];
    if (b < 0)
        throw domain_error("transform: beta < 0 has no rhoEpsilon principal-branch "
                           "image (epsilon in [0, pi/2))");
    if (a <= 0 && b == 0)
        throw domain_error("transform: alpha <= 0, beta = 0 is outside the rhoEpsilon chart");
    return {q[0], q[1], std::hypot(a, b), std::atan2(b, a)};
}
Matrix4d jac_ab_from_rho_eps(const Q4& q)
{
    const double rho = q[2], eps = q[3];
    const double c = std::cos(eps), s = std::sin(eps);
    Matrix4d j = Matrix4d::Identity();
    j(2, 2) = c;  j(2, 3) = -rho * s;
    j(3, 2) = s;  j(3, 3) = rho * c;
    return j;
}
Matrix4d jac_rho_eps_from_ab(const Q4& q)
{
    const double a = q[2], b = q[3];
    const double rho2 = a * a + b * b;
    const double rho = std::sqrt(rho2);
    Matrix4d j = Matrix4d::Identity();
    j(2, 2) = a / rho;     j(2, 3) = b / rho;
    j(3, 2) = -b / rho2;   j(3, 3) = a / rho2;
    return j;
}

// --- exponentialAB ----------------------------------------------------------

Q4 ab_from_exp(const Q4& q)
{
    const double a = q[2], b = q[3];
    const double ea2 = std::exp(0.5 * a);
    Q4 out;
    angles_to_eta_gamma(q[0], q[1], out[0], out[1]);
    out[2] = kSqrt2 * ea2 * std::cosh(0.5 * b);
    out[3] = kSqrt2 * ea2 * std::sinh(0.5 * b);
    return out;
}
Q4 exp_from_ab(const Q4& q)
{
    const double al = q[2], be = q[3];
    if (al <= std::abs(be))
        throw domain_error("transform: exponentialAB requires d1, d2 > 0 "
                           "(alpha > |beta|)");
    Q4 out;
    angles_from_eta_gamma(q[0], q[1], out[0], out[1]);
    out[2] = std::log(0.5 * (al * al - be * be));           // a = log(d1 d2)
    out[3] = std::log((al + be) / (al - be));               // b = log(d1 / d2)
    return out;
}
Matrix4d jac_ab_from_exp(const Q4& q)
{
    // d(alpha)/da = alpha/2, d(alpha)/db = beta/2 and symmetrically.
    const Q4 ab = ab_from_exp(q);
    const double al = ab[2], be = ab[3];
    Matrix4d j = jac_angle_block_to_eta_gamma();
    j(2, 2) = 0.5 * al;  j(2, 3) = 0.5 * be;
    j(3, 2) = 0.5 * be;  j(3, 3) = 0.5 * al;
    return j;
}
Matrix4d jac_exp_from_ab(const Q4& q)
{
    const double al = q[2], be = q[3];
    const double d = al * al - be * be;
    Matrix4d j = jac_angle_block_from_eta_gamma();
    j(2, 2) = 2 * al / d;   j(2, 3) = -2 * be / d;
    j(3, 2) = -2 * be / d;  j(3, 3) = 2 * al / d;
    return j;
}

// --- elliptic ---------------------------------------------------------------

Q4 ab_from_elliptic(const Q4& q)
{
    const double k = q[2], l = q[3];
    if (k < 0)
        throw domain_error("elliptic: kappa must be nonnegative");
    return {q[0], q[1], kSqrt2 * std::cosh(k) * std::cos(l),
            kSqrt2 * std::sinh(k) * std::sin(l)};
}
Q4 elliptic_from_ab(const Q4& q)
{
    const double al = q[2], be = q[3];
    if (be < 0)
        throw domain_error("transform: beta < 0 has no elliptic principal-branch "
                           "image (lambda in [0, pi/2])");
    if (al < 0)
        throw domain_error("transform: alpha < 0 is outside the elliptic chart");
    // cosh^2(kappa) is the larger root of 2c^2 - (2 + alpha^2 + beta^2) c + alpha^2 = 0.
    const double s = al * al + be * be;
    const double disc = std::max(0.0, (2.0 + s) * (2.0 + s) - 8.0 * al * al);
    const double c = 0.25 * ((2.0 + s) + std::sqrt(disc));
    const double cosh_k = std::sqrt(std::max(1.0, c));
    const double sinh_k = std::sqrt(std::max(0.0, c - 1.0));
    double kappa, lambda;
    if (sinh_k == 0.0) {
        kappa = 0.0;
        lambda = std::acos(std::clamp(al / kSqrt2, -1.0, 1.0));
    } else {
        kappa = std::asinh(sinh_k);
        const double cl = std::clamp(al / (kSqrt2 * cosh_k), -1.0, 1.0);
        const double sl = std::clamp(be / (kSqrt2 * sinh_k), -1.0, 1.0);
        lambda = std::atan2(sl, cl);
    }
    return {q[0], q[1], kappa, lambda};
}
Matrix4d jac_ab_from_elliptic(const Q4& q)
{
    const double k = q[2], l = q[3];
    const double ck = std::cosh(k), sk = std::sinh(k);
    const double cl = std::cos(l), sl = std::sin(l);
    Matrix4d j = Matrix4d::Identity();
    j(2, 2) = kSqrt2 * sk * cl;  j(2, 3) = -kSqrt2 * ck * sl;
    j(3, 2) = kSqrt2 * ck * sl;  j(3, 3) = kSqrt2 * sk * cl;
    return j;
}
Matrix4d jac_elliptic_from_ab(const Q4& q)
{
    Q4 ell = elliptic_from_ab(q);
    Matrix4d fwd = jac_ab_from_elliptic(ell);
    const double det = fwd(2, 2) * fwd(3, 3) - fwd(2, 3) * fwd(3, 2);
    if (det == 0.0)
        throw domain_error("transform: elliptic Jacobian singular (kappa = 0 or "
                           "lambda in {0, pi/2})");
    Matrix4d j = Matrix4d::Identity();
    j(2, 2) = fwd(3, 3) / det;   j(2, 3) = -fwd(2, 3) / det;
    j(3, 2) = -fwd(3, 2) / det;  j(3, 3) = fwd(2, 2) / det;
    return j;
}

// --- cartesian --------------------------------------------------------------

Q4 cart_from_ab(const Q4& q)
{
    double phi, psi;
    angles_from_eta_gamma(q[0], q[1], phi, psi);
    const double d1 = (q[2] + q[3]) / kSqrt2;
    const double d2 = (q[2] - q[3]) / kSqrt2;
    Q4 out;
    compose_entries(phi, psi, d1, d2, out[0], out[1], out[2], out[3]);
    return out;
}
Q4 ab_from_cart(const Q4& q)
{
    TwoPolarCoords tp = two_polar_decompose({q[0], q[1], q[2], q[3]});
    Q4 out;
    angles_to_eta_gamma(tp.phi, tp.psi, out[0], out[1]);
    out[2] = (tp.d1 + tp.d2) / kSqrt2;
    out[3] = (tp.d1 - tp.d2) / kSqrt2;
    return out;
}
Matrix4d jac_cart_from_ab(const Q4& q)
{
    double phi, psi;
    angles_from_eta_gamma(q[0], q[1], phi, psi);
    const double d1 = (q[2] + q[3]) / kSqrt2;
    const double d2 = (q[2] - q[3]) / kSqrt2;
    double x, y, z, u;
    compose_entries(phi, psi, d1, d2, x, y, z, u);

    const double cf = std::cos(phi), sf = std::sin(phi);
    const double cp = std::cos(psi), sp = std::sin(psi);

    // d(x,y,z,u)/d(phi,psi,d1,d2); the angle columns collapse to matrix entries.
    Eigen::Matrix4d jtp;
    jtp << -z, -y, cf * cp, sf * sp,
           -u,  x, cf * sp, -sf * cp,
            x, -u, sf * cp, -cf * sp,
            y,  z, sf * sp, cf * cp;

    Eigen::Matrix4d chain = Eigen::Matrix4d::Zero();   // d(phi,psi,d1,d2)/d(eta,gamma,alpha,beta)
    chain(0, 0) = 0.5;  chain(0, 1) = 0.5;
    chain(1, 0) = -0.5; chain(1, 1) = 0.5;
    chain(2, 2) = 1 / kSqrt2;  chain(2, 3) = 1 / kSqrt2;
    chain(3, 2) = 1 / kSqrt2;  chain(3, 3) = -1 / kSqrt2;
    return jtp * chain;
}
Matrix4d jac_ab_from_cart(const Q4& q)
{
    const Q4 ab = ab_from_cart(q);
    Matrix4d fwd = jac_cart_from_ab(ab);
    Eigen::FullPivLU<Matrix4d> lu(fwd);
    if (!lu.isInvertible())
        throw domain_error("transform: cartesian -> alphaBeta Jacobian singular "
                           "(degenerate deformation d1 = d2)");
    return lu.inverse();
}

// --- dispatch ---------------------------------------------------------------

Q4 to_ab(Chart c, const Q4& q)
{
    switch (c) {
    case Chart::cartesian:     return ab_from_cart(q);
    case Chart::twoPolar:      return ab_from_two_polar(q);
    case Chart::alphaBeta:     return q;
    case Chart::polarRTheta:   return ab_from_polar(q);
    case Chart::rhoEpsilon:    return ab_from_rho_eps(q);
    case Chart::exponentialAB: return ab_from_exp(q);
    case Chart::elliptic:      return ab_from_elliptic(q);
    }
    throw unsupported_error("unknown chart");
}

Q4 from_ab(Chart c, const Q4& q)
{
    switch (c) {
    case Chart::cartesian:     return cart_from_ab(q);
    case Chart::twoPolar:      return two_polar_from_ab(q);
    case Chart::alphaBeta:     return q;
    case Chart::polarRTheta:   return polar_from_ab(q);
    case Chart::rhoEpsilon:    return rho_eps_from_ab(q);
    case Chart::exponentialAB: return exp_from_ab(q);
    case Chart::elliptic:      return elliptic_from_ab(q);
    }
    throw unsupported_error("unknown chart");
}

Matrix4d jac_to_ab(Chart c, const Q4& q)
{
    switch (c) {
    case Chart::cartesian:     return jac_ab_from_cart(q);
    case Chart::twoPolar:      return jac_ab_from_two_polar(q);
    case Chart::alphaBeta:     return Matrix4d::Identity();
    case Chart::polarRTheta:   return jac_ab_from_polar(q);
    case Chart::rhoEpsilon:    return jac_ab_from_rho_eps(q);
    case Chart::exponentialAB: return jac_ab_from_exp(q);
    case Chart::elliptic:      return jac_ab_from_elliptic(q);
    }
    throw unsupported_error("unknown chart");
}

Matrix4d jac_from_ab(Chart c, const Q4& q_ab)
{
    switch (c) {
    case Chart::cartesian:     return jac_cart_from_ab(q_ab);
    case Chart::twoPolar:      return jac_two_polar_from_ab(q_ab);
    case Chart::alphaBeta:     return Matrix4d::Identity();
    case Chart::polarRTheta:   return jac_polar_from_ab(q_ab);
    case Chart::rhoEpsilon:    return jac_rho_eps_from_ab(q_ab);
    case Chart::exponentialAB: return jac_exp_from_ab(q_ab);
    case Chart::elliptic:      return jac_elliptic_from_ab(q_ab);
    }
    throw unsupported_error("unknown chart");
}

} // namespace

ChartPoint transform(const ChartPoint& p, Chart target)
{
    if (p.chart == target)
        return p;
    return {target, from_ab(target, to_ab(p.chart, p.q))};
}

ConfigurationMatrix to_configuration(const ChartPoint& p)
{
    Q4 c = (p.chart == Chart::cartesian) ? p.q : cart_from_ab(to_ab(p.chart, p.q));
    return {c[0], c[1], c[2], c[3]};
}

ChartPoint from_configuration(const ConfigurationMatrix& m, Chart chart,
                              const DecomposeOptions& opts)
{
    if (chart == Chart::cartesian)
        return {chart, {m.x, m.y, m.z, m.u}};
    TwoPolarCoords tp = two_polar_decompose(m, opts);
    Q4 ab;
    angles_to_eta_gamma(tp.phi, tp.psi, ab[0], ab[1]);
    ab[2] = (tp.d1 + tp.d2) / kSqrt2;
    ab[3] = (tp.d1 - tp.d2) / kSqrt2;
    return {chart, from_ab(chart, ab)};
}

// Admissible domains are the canonical connected components bounded by the
// metric's degenerate loci, so trajectories register an exit when they reach
// (or step across) a singular wall.
std::string domain_violation(const ChartPoint& p)
{
    const auto& q = p.q;
    switch (p.chart) {
    case Chart::cartesian:
        return {};
    case Chart::twoPolar:
        if (q[3] == 0)
            return "d2 = 0 (singular configuration)";
        if (q[2] <= std::abs(q[3]))
            return "degenerate deformation d1 <= |d2|";
        return {};
    case Chart::alphaBeta:
        if (q[2] <= 0)
            return "alpha <= 0";
        if (q[3] <= 0)
            return "beta <= 0";
        return {};
    case Chart::polarRTheta:
        if (q[2] <= 0)
            return "r <= 0";
        if (q[3] <= 0 || q[3] >= M_PI)
            return "theta outside (0, pi) (sin(theta) = 0 wall)";
        return {};
    case Chart::rhoEpsilon:
        if (q[2] <= 0)
            return "rho <= 0";
        if (q[3] <= 0 || q[3] >= 0.5 * M_PI)
            return "epsilon outside (0, pi/2)";
        return {};
    case Chart::exponentialAB:
        if (q[3] <= 0)
            return "b <= 0 (d1 <= d2 sheet)";
        return {};
    case Chart::elliptic:
        if (q[2] <= 0)
            return "kappa <= 0";
        if (q[3] <= 0 || q[3] >= 0.5 * M_PI)
            return "lambda outside (0, pi/2)";
        return {};
    }
    return "unknown chart";
}

bool in_domain(const ChartPoint& p)
{
    return domain_violation(p).empty();
}

namespace {

// Metric components; finite on a slightly larger set than the admissible
// domain (degenerate loci included), undefined only where entries blow up.
Eigen::Matrix4d metric_components(const ChartPoint& p)
{
    const auto& q = p.q;
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    switch (p.chart) {
    case Chart::cartesian:
        return Eigen::Matrix4d::Identity();
    case Chart::twoPolar: {
        const double d1 = q[2], d2 = q[3];
        g(0, 0) = g(1, 1) = d1 * d1 + d2 * d2;
        g(0, 1) = g(1, 0) = -2.0 * d1 * d2;
        g(2, 2) = g(3, 3) = 1.0;
        return g;
    }
    case Chart::alphaBeta: {
        g(0, 0) = q[2] * q[2];
        g(1, 1) = q[3] * q[3];
        g(2, 2) = g(3, 3) = 1.0;
        return g;
    }
    case Chart::polarRTheta: {
        const double r = q[2], th = q[3];
        if (r <= 0)
            throw domain_error("metric: polarRTheta requires r > 0");
        g(0, 0) = g(1, 1) = r;
        g(0, 1) = g(1, 0) = -r * std::cos(th);
        g(2, 2) = 0.25 / r;
        g(3, 3) = 0.25 * r;
        return g;
    }
    case Chart::rhoEpsilon: {
        const double rho = q[2], eps = q[3];
        const double c = std::cos(eps), s = std::sin(eps);
        g(0, 0) = rho * rho * c * c;
        g(1, 1) = rho * rho * s * s;
        g(2, 2) = 1.0;
        g(3, 3) = rho * rho;
        return g;
    }
    case Chart::exponentialAB: {
        const double ea = std::exp(q[2]);
        const double cb = std::cosh(q[3]), sb = std::sinh(q[3]);
        g(0, 0) = g(1, 1) = 2.0 * ea * cb;
        g(0, 1) = g(1, 0) = -2.0 * ea;
        g(2, 2) = g(3, 3) = 0.5 * ea * cb;
        g(2, 3) = g(3, 2) = 0.5 * ea * sb;
        return g;
    }
    case Chart::elliptic: {
        const double ck = std::cosh(q[2]), sk = std::sinh(q[2]);
        const double cl = std::cos(q[3]), sl = std::sin(q[3]);
        const double S = ck * ck - cl * cl;  // = sinh^2 kappa + sin^2 lambda
        g(0, 0) = 2.0 * ck * ck * cl * cl;
        g(1, 1) = 2.0 * sk * sk * sl * sl;
        g(2, 2) = g(3, 3) = 2.0 * S;
        return g;
    }
    }
    throw unsupported_error("unknown chart");
}

} // namespace

MetricTensor metric_at(const ChartPoint& p)
{
    std::string v = domain_violation(p);
    if (!v.empty())
        throw domain_error("metric_at: singular locus (" + v + ") in chart " +
                           chart_name(p.chart));
    return {p.chart, metric_components(p)};
}

Eigen::Matrix4d inverse_metric_at(const ChartPoint& p)
{
    std::string vio = domain_violation(p);
    if (!vio.empty())
        throw domain_error("inverse_metric_at: singular locus (" + vio + ") in chart " +
                           chart_name(p.chart));
    const auto& q = p.q;
    Eigen::Matrix4d gi = Eigen::Matrix4d::Zero();
    switch (p.chart) {
    case Chart::cartesian:
        return Eigen::Matrix4d::Identity();
    case Chart::twoPolar: {
        const double d1 = q[2], d2 = q[3];
        const double den = (d1 * d1 - d2 * d2) * (d1 * d1 - d2 * d2);
        gi(0, 0) = gi(1, 1) = (d1 * d1 + d2 * d2) / den;
        gi(0, 1) = gi(1, 0) = 2.0 * d1 * d2 / den;
        gi(2, 2) = gi(3, 3) = 1.0;
        return gi;
    }
    case Chart::alphaBeta: {
        gi(0, 0) = 1.0 / (q[2] * q[2]);
        gi(1, 1) = 1.0 / (q[3] * q[3]);
        gi(2, 2) = gi(3, 3) = 1.0;
        return gi;
    }
    case Chart::polarRTheta: {
        const double r = q[2], th = q[3];
        const double s2 = std::sin(th) * std::sin(th);
        gi(0, 0) = gi(1, 1) = 1.0 / (r * s2);
        gi(0, 1) = gi(1, 0) = std::cos(th) / (r * s2);
        gi(2, 2) = 4.0 * r;
        gi(3, 3) = 4.0 / r;
        return gi;
    }
    case Chart::rhoEpsilon: {
        const double rho2 = q[2] * q[2];
        const double c = std::cos(q[3]), s = std::sin(q[3]);
        gi(0, 0) = 1.0 / (rho2 * c * c);
        gi(1, 1) = 1.0 / (rho2 * s * s);
        gi(2, 2) = 1.0;
        gi(3, 3) = 1.0 / rho2;
        return gi;
    }
    case Chart::exponentialAB: {
        const double ema = std::exp(-q[2]);
        const double cb = std::cosh(q[3]), sb = std::sinh(q[3]);
        const double f = 0.5 * ema / (sb * sb);
        gi(0, 0) = gi(1, 1) = f * cb;
        gi(0, 1) = gi(1, 0) = f;
        gi(2, 2) = gi(3, 3) = 2.0 * ema * cb;
        gi(2, 3) = gi(3, 2) = -2.0 * ema * sb;
        return gi;
    }
    case Chart::elliptic: {
        const double ck = std::cosh(q[2]), sk = std::sinh(q[2]);
        const double cl = std::cos(q[3]), sl = std::sin(q[3]);
        const double S = ck * ck - cl * cl;
        gi(0, 0) = 0.5 / (ck * ck * cl * cl);
        gi(1, 1) = 0.5 / (sk * sk * sl * sl);
        gi(2, 2) = gi(3, 3) = 0.5 / S;
        return gi;
    }
    }
    throw unsupported_error("unknown chart");
}

double kinetic_energy(const ChartPoint& p, const Eigen::Vector4d& v, double mu)
{
    // Quadratic form of the raw components: defined wherever they are finite,
    // including the degenerate loci excluded by metric_at.
    Eigen::Matrix4d g = metric_components(p);
    return 0.5 * mu * v.dot(g * v);
}

Eigen::Matrix4d metric_partial(const ChartPoint& p, int k)
{
    const auto& q = p.q;
    Eigen::Matrix4d dg = Eigen::Matrix4d::Zero();
    if (k < 2)
        return dg;  // angles are cyclic in every chart
    const bool first = (k == 2);
    switch (p.chart) {
    case Chart::cartesian:
        return dg;
    case Chart::twoPolar: {
        const double d1 = q[2], d2 = q[3];
        dg(0, 0) = dg(1, 1) = first ? 2 * d1 : 2 * d2;
        dg(0, 1) = dg(1, 0) = first ? -2 * d2 : -2 * d1;
        return dg;
    }
    case Chart::alphaBeta:
        if (first)
            dg(0, 0) = 2 * q[2];
        else
            dg(1, 1) = 2 * q[3];
        return dg;
    case Chart::polarRTheta: {
        const double r = q[2], th = q[3];
        if (first) {
            dg(0, 0) = dg(1, 1) = 1;
            dg(0, 1) = dg(1, 0) = -std::cos(th);
            dg(2, 2) = -0.25 / (r * r);
            dg(3, 3) = 0.25;
        } else {
            dg(0, 1) = dg(1, 0) = r * std::sin(th);
        }
        return dg;
    }
    case Chart::rhoEpsilon: {
        const double rho = q[2], eps = q[3];
        const double c = std::cos(eps), s = std::sin(eps);
        if (first) {
            dg(0, 0) = 2 * rho * c * c;
            dg(1, 1) = 2 * rho * s * s;
            dg(3, 3) = 2 * rho;
        } else {
            dg(0, 0) = -rho * rho * std::sin(2 * eps);
            dg(1, 1) = rho * rho * std::sin(2 * eps);
        }
        return dg;
    }
    case Chart::exponentialAB: {
        const double ea = std::exp(q[2]);
        const double cb = std::cosh(q[3]), sb = std::sinh(q[3]);
        if (first)
            return metric_components(p);  // every entry scales with e^a
        dg(0, 0) = dg(1, 1) = 2 * ea * sb;
        dg(2, 2) = dg(3, 3) = 0.5 * ea * sb;
        dg(2, 3) = dg(3, 2) = 0.5 * ea * cb;
        return dg;
    }
    case Chart::elliptic: {
        const double ck = std::cosh(q[2]), sk = std::sinh(q[2]);
        const double cl = std::cos(q[3]), sl = std::sin(q[3]);
        if (first) {
            const double sh2 = 2 * sk * ck;  // sinh(2 kappa)
            dg(0, 0) = 2 * sh2 * cl * cl;
            dg(1, 1) = 2 * sh2 * sl * sl;
            dg(2, 2) = dg(3, 3) = 2 * sh2;
        } else {
            const double s2 = 2 * sl * cl;  // sin(2 lambda)
            dg(0, 0) = -2 * ck * ck * s2;
            dg(1, 1) = 2 * sk * sk * s2;
            dg(2, 2) = dg(3, 3) = 2 * s2;
        }
        return dg;
    }
    }
    throw unsupported_error("unknown chart");
}

Eigen::Matrix4d transform_jacobian(const ChartPoint& p, Chart target)
{
    if (p.chart == target)
        return Eigen::Matrix4d::Identity();
    if (p.chart == Chart::alphaBeta)
        return jac_from_ab(target, p.q);
    Eigen::Matrix4d j_in = jac_to_ab(p.chart, p.q);
    if (target == Chart::alphaBeta)
        return j_in;
    Q4 ab = to_ab(p.chart, p.q);
    return jac_from_ab(target, ab) * j_in;
}

Eigen::Vector4d push_tangent(const ChartPoint& p, const Eigen::Vector4d& v, Chart target)
{
    return transform_jacobian(p, target) * v;
}

} // namespace affine2d
