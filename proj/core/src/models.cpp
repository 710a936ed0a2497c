#include "affine2d/models.hpp"

#include <cmath>

namespace affine2d {

double PhysicalParams::omega() const { return std::sqrt(stiffness / mu); }
double PhysicalParams::kappa() const { return std::sqrt(stiffness * mu) / hbar; }

void PhysicalParams::validate() const
{
    if (!(mu > 0) || !(stiffness > 0) || !(hbar > 0))
        throw domain_error("PhysicalParams: mu, C and hbar must all be positive");
}

const char* potential_kind_name(PotentialKind k)
{
    switch (k) {
    case PotentialKind::free:                return "free";
    case PotentialKind::harmonic:            return "harmonic";
    case PotentialKind::anharmonicAlphaBeta: return "anharmonicAlphaBeta";
    case PotentialKind::anharmonicRTheta:    return "anharmonicRTheta";
    case PotentialKind::collapseGuard:       return "collapseGuard";
    }
    return "?";
}

PotentialKind potential_kind_from_name(const std::string& name)
{
    for (PotentialKind k : {PotentialKind::free, PotentialKind::harmonic,
                            PotentialKind::anharmonicAlphaBeta,
                            PotentialKind::anharmonicRTheta, PotentialKind::collapseGuard})
        if (name == potential_kind_name(k))
            return k;
    throw unsupported_error("unknown potential kind: " + name);
}

namespace {

using Eigen::Vector4d;

// Every catalog potential is a smooth function W(A, B) of the squared hub
// coordinates A = alpha^2, B = beta^2, which have branch-free closed forms
// (and gradients) in every chart.  A - B = 2 d1 d2 = 2 det(phi).

struct SquaredHub {
    double A, B;
    Vector4d dA, dB;  // gradients w.r.t. the chart coordinates
};

SquaredHub squared_hub(const ChartPoint& p)
{
    const auto& q = p.q;
    SquaredHub h{0, 0, Vector4d::Zero(), Vector4d::Zero()};
    switch (p.chart) {
    case Chart::cartesian: {
        const double x = q[0], y = q[1], z = q[2], u = q[3];
        h.A = 0.5 * ((x + u) * (x + u) + (z - y) * (z - y));
        h.B = 0.5 * ((x - u) * (x - u) + (z + y) * (z + y));
        h.dA = {x + u, y - z, z - y, x + u};
        h.dB = {x - u, y + z, z + y, u - x};
        return h;
    }
    case Chart::twoPolar: {
        const double d1 = q[2], d2 = q[3];
        h.A = 0.5 * (d1 + d2) * (d1 + d2);
        h.B = 0.5 * (d1 - d2) * (d1 - d2);
        h.dA = {0, 0, d1 + d2, d1 + d2};
        h.dB = {0, 0, d1 - d2, -(d1 - d2)};
        return h;
    }
    case Chart::alphaBeta: {
        h.A = q[2] * q[2];
        h.B = q[3] * q[3];
        h.dA = {0, 0, 2 * q[2], 0};
        h.dB = {0, 0, 0, 2 * q[3]};
        return h;
    }
    case Chart::polarRTheta: {
        const double r = q[2], th = q[3];
        h.A = 0.5 * r * (1 + std::cos(th));
        h.B = 0.5 * r * (1 - std::cos(th));
        h.dA = {0, 0, 0.5 * (1 + std::cos(th)), -0.5 * r * std::sin(th)};
        h.dB = {0, 0, 0.5 * (1 - std::cos(th)), 0.5 * r * std::sin(th)};
        return h;
    }
    case Chart::rhoEpsilon: {
        const double rho = q[2], eps = q[3];
        const double c = std::cos(eps), s = std::sin(eps);
        h.A = rho * rho * c * c;
        h.B = rho * rho * s * s;
        h.dA = {0, 0, 2 * rho * c * c, -rho * rho * std::sin(2 * eps)};
        h.dB = {0, 0, 2 * rho * s * s, rho * rho * std::sin(2 * eps)};
        return h;
    }
    case Chart::exponentialAB: {
        const double ea = std::exp(q[2]);
        const double cb = std::cosh(q[3]), sb = std::sinh(q[3]);
        h.A = ea * (cb + 1);
        h.B = ea * (cb - 1);
        h.dA = {0, 0, h.A, ea * sb};
        h.dB = {0, 0, h.B, ea * sb};
        return h;
    }
    case Chart::elliptic: {
        const double k = q[2], l = q[3];
        const double ck = std::cosh(k), sk = std::sinh(k);
        const double cl = std::cos(l), sl = std::sin(l);
        h.A = 2 * ck * ck * cl * cl;
        h.B = 2 * sk * sk * sl * sl;
        h.dA = {0, 0, 2 * std::sinh(2 * k) * cl * cl, -2 * ck * ck * std::sin(2 * l)};
        h.dB = {0, 0, 2 * std::sinh(2 * k) * sl * sl, 2 * sk * sk * std::sin(2 * l)};
        return h;
    }
    }
    throw unsupported_error("unknown chart");
}

// W(A, B) and its partials for each potential kind.
struct WValue {
    double w, wA, wB;
};

WValue potential_w(const PotentialModel& m, double A, double B)
{
    const double C = m.params.stiffness;
    switch (m.kind) {
    case PotentialKind::free:
        return {0, 0, 0};
    case PotentialKind::harmonic:
        return {0.5 * C * (A + B), 0.5 * C, 0.5 * C};
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        if (A == 0)
            throw domain_error("anharmonic potential singular at alpha = 0");
        return {0.5 * C * (A + B) + 2 * C / A, 0.5 * C - 2 * C / (A * A), 0.5 * C};
    case PotentialKind::collapseGuard: {
        const double D = A - B;  // 2 d1 d2
        if (D <= 0)
            throw domain_error("collapseGuard requires d1 d2 > 0");
        return {0.5 * C * (A + B) + 2 * C / D,
                0.5 * C - 2 * C / (D * D),
                0.5 * C + 2 * C / (D * D)};
    }
    }
    throw unsupported_error("unknown potential kind");
}

// V_alpha / V_beta split used by the alphaBeta constants of motion.
double v_alpha_slice(const PotentialModel& m, double alpha)
{
    const double C = m.params.stiffness;
    switch (m.kind) {
    case PotentialKind::free:
        return 0;
    case PotentialKind::harmonic:
        return 0.5 * C * alpha * alpha;
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        return 0.5 * C * (alpha * alpha + 4 / (alpha * alpha));
    default:
        throw unsupported_error("potential has no additive alpha/beta split");
    }
}
double v_beta_slice(const PotentialModel& m, double beta)
{
    switch (m.kind) {
    case PotentialKind::free:
        return 0;
    case PotentialKind::harmonic:
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        return 0.5 * m.params.stiffness * beta * beta;
    default:
        throw unsupported_error("potential has no additive alpha/beta split");
    }
}

// V_r / V_theta split of the polar separation V = V_r(r) + V_theta(theta)/r.
double v_r_slice(const PotentialModel& m, double r)
{
    switch (m.kind) {
    case PotentialKind::free:
        return 0;
    default:
        return 0.5 * m.params.stiffness * r;
    }
}
double v_theta_slice(const PotentialModel& m, double theta)
{
    const double C = m.params.stiffness;
    switch (m.kind) {
    case PotentialKind::free:
    case PotentialKind::harmonic:
        return 0;
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta: {
        const double c = std::cos(0.5 * theta);
        if (c == 0)
            throw domain_error("shear potential singular at cos(theta/2) = 0");
        return 2 * C / (c * c);
    }
    case PotentialKind::collapseGuard: {
        const double c = std::cos(theta);
        if (c <= 0)
            throw domain_error("collapseGuard requires cos(theta) > 0 (d1 d2 > 0)");
        return 2 * C / c;
    }
    }
    throw unsupported_error("unknown potential kind");
}

} // namespace

double potential_value(const PotentialModel& m, const ChartPoint& p)
{
    SquaredHub h = squared_hub(p);
    return potential_w(m, h.A, h.B).w;
}

Eigen::Vector4d potential_gradient(const PotentialModel& m, const ChartPoint& p)
{
    SquaredHub h = squared_hub(p);
    WValue w = potential_w(m, h.A, h.B);
    return w.wA * h.dA + w.wB * h.dB;
}

double kinetic_hamiltonian(const PhaseState& s, double mu)
{
    Eigen::Matrix4d gi = inverse_metric_at(s.point);
    return 0.5 / mu * s.p.dot(gi * s.p);
}

double hamiltonian(const PotentialModel& m, const PhaseState& s)
{
    return kinetic_hamiltonian(s, m.params.mu) + potential_value(m, s.point);
}

PhaseState transform_state(const PhaseState& s, Chart target, double mu)
{
    if (s.point.chart == target)
        return s;
    Eigen::Vector4d v = inverse_metric_at(s.point) * s.p / mu;
    ChartPoint q = transform(s.point, target);
    Eigen::Vector4d v_t = push_tangent(s.point, v, target);
    return {q, mu * metric_at(q).g * v_t};
}

double momentum_phi(const PhaseState& s)
{
    const auto& q = s.point.q;
    const auto& p = s.p;
    switch (s.point.chart) {
    case Chart::cartesian:
        // moment map of the left rotation action on the matrix entries
        return -q[2] * p[0] - q[3] * p[1] + q[0] * p[2] + q[1] * p[3];
    case Chart::twoPolar:
    case Chart::polarRTheta:
    case Chart::exponentialAB:
        return p[0];
    case Chart::alphaBeta:
    case Chart::rhoEpsilon:
    case Chart::elliptic:
        return p[0] + p[1];  // p_eta + p_gamma
    }
    throw unsupported_error("unknown chart");
}

double momentum_psi(const PhaseState& s)
{
    const auto& q = s.point.q;
    const auto& p = s.p;
    switch (s.point.chart) {
    case Chart::cartesian:
        return -q[1] * p[0] + q[0] * p[1] - q[3] * p[2] + q[2] * p[3];
    case Chart::twoPolar:
    case Chart::polarRTheta:
    case Chart::exponentialAB:
        return p[1];
    case Chart::alphaBeta:
    case Chart::rhoEpsilon:
    case Chart::elliptic:
        return p[1] - p[0];  // p_gamma - p_eta
    }
    throw unsupported_error("unknown chart");
}

double elliptic_h_kappa(const PhaseState& s, double mu)
{
    if (s.point.chart != Chart::elliptic)
        throw unsupported_error("h_kappa is an elliptic-chart quantity");
    const double k = s.point[2];
    const double p_eta = s.p[0], p_gamma = s.p[1], p_k = s.p[2];
    const double ck = std::cosh(k), sk = std::sinh(k);
    return 0.5 / mu * (p_k * p_k - p_eta * p_eta / (ck * ck) + p_gamma * p_gamma / (sk * sk));
}

double elliptic_h_lambda(const PhaseState& s, double mu)
{
    if (s.point.chart != Chart::elliptic)
        throw unsupported_error("h_lambda is an elliptic-chart quantity");
    const double l = s.point[3];
    const double p_eta = s.p[0], p_gamma = s.p[1], p_l = s.p[3];
    const double cl = std::cos(l), sl = std::sin(l);
    return 0.5 / mu * (p_l * p_l + p_eta * p_eta / (cl * cl) + p_gamma * p_gamma / (sl * sl));
}

namespace {

// Separation constants of the elliptic chart.  In the geodetic (free) case
//   K = (h_kappa cos^2 l + h_lambda cosh^2 k) / (2 (cosh^2 k - cos^2 l))
//   L = (h_kappa sin^2 l - h_lambda sinh^2 k) / (2 (sinh^2 k + sin^2 l))
// and K + L = H exactly.
double elliptic_K(const PhaseState& s, double mu)
{
    const double k = s.point[2], l = s.point[3];
    const double hk = elliptic_h_kappa(s, mu), hl = elliptic_h_lambda(s, mu);
    const double ck = std::cosh(k), cl = std::cos(l);
    return (hk * cl * cl + hl * ck * ck) / (2 * (ck * ck - cl * cl));
}
double elliptic_L(const PhaseState& s, double mu)
{
    const double k = s.point[2], l = s.point[3];
    const double hk = elliptic_h_kappa(s, mu), hl = elliptic_h_lambda(s, mu);
    const double sk = std::sinh(k), sl = std::sin(l);
    return (hk * sl * sl - hl * sk * sk) / (2 * (sk * sk + sl * sl));
}

double alpha_block_energy(const PotentialModel& m, const PhaseState& s)
{
    const double alpha = s.point[2];
    const double p_eta = s.p[0], p_alpha = s.p[2];
    return 0.5 / m.params.mu * (p_eta * p_eta / (alpha * alpha) + p_alpha * p_alpha)
           + v_alpha_slice(m, alpha);
}
double beta_block_energy(const PotentialModel& m, const PhaseState& s)
{
    const double beta = s.point[3];
    const double p_gamma = s.p[1], p_beta = s.p[3];
    return 0.5 / m.params.mu * (p_gamma * p_gamma / (beta * beta) + p_beta * p_beta)
           + v_beta_slice(m, beta);
}

double polar_h_theta(const PotentialModel& m, const PhaseState& s)
{
    const double th = s.point[3];
    const double p_phi = s.p[0], p_psi = s.p[1], p_th = s.p[3];
    const double st = std::sin(th);
    return (p_phi * p_phi + p_psi * p_psi + 2 * p_phi * p_psi * std::cos(th))
               / (2 * m.params.mu * st * st)
           + 2 / m.params.mu * p_th * p_th + v_theta_slice(m, th);
}
double polar_total_energy(const PotentialModel& m, const PhaseState& s)
{
    const double r = s.point[2];
    const double p_r = s.p[2];
    return 2 / m.params.mu * r * p_r * p_r + v_r_slice(m, r) + polar_h_theta(m, s) / r;
}

bool has_alpha_beta_split(PotentialKind k)
{
    return k == PotentialKind::free || k == PotentialKind::harmonic
        || k == PotentialKind::anharmonicAlphaBeta || k == PotentialKind::anharmonicRTheta;
}

} // namespace

std::vector<std::pair<std::string, std::function<double(const PhaseState&)>>>
constants_of_motion_functions(const PotentialModel& m, Chart chart)
{
    using Fn = std::function<double(const PhaseState&)>;
    std::vector<std::pair<std::string, Fn>> out;
    out.emplace_back("p_phi", [](const PhaseState& s) { return momentum_phi(s); });
    out.emplace_back("p_psi", [](const PhaseState& s) { return momentum_psi(s); });

    const double mu = m.params.mu;
    switch (chart) {
    case Chart::alphaBeta:
        if (!has_alpha_beta_split(m.kind))
            throw unsupported_error(std::string("no additive alpha/beta separation for ")
                                    + potential_kind_name(m.kind));
        out.emplace_back("H_alpha", [m](const PhaseState& s) { return alpha_block_energy(m, s); });
        out.emplace_back("H_beta", [m](const PhaseState& s) { return beta_block_energy(m, s); });
        return out;
    case Chart::polarRTheta:
        out.emplace_back("h_theta", [m](const PhaseState& s) { return polar_h_theta(m, s); });
        out.emplace_back("H", [m](const PhaseState& s) { return polar_total_energy(m, s); });
        return out;
    case Chart::elliptic:
        if (m.kind != PotentialKind::free)
            throw unsupported_error("elliptic constants K, L require the free (geodetic) model");
        out.emplace_back("K", [mu](const PhaseState& s) { return elliptic_K(s, mu); });
        out.emplace_back("L", [mu](const PhaseState& s) { return elliptic_L(s, mu); });
        return out;
    case Chart::cartesian:
        out.emplace_back("H", [m](const PhaseState& s) { return hamiltonian(m, s); });
        return out;
    default:
        throw unsupported_error(std::string("no advertised constants-of-motion set for chart ")
                                + chart_name(chart));
    }
}

std::vector<NamedValue> constants_of_motion(const PotentialModel& m, const PhaseState& s)
{
    std::vector<NamedValue> out;
    for (auto& [name, fn] : constants_of_motion_functions(m, s.point.chart))
        out.push_back({name, fn(s)});
    return out;
}

double poisson_bracket(const std::function<double(const PhaseState&)>& f,
                       const std::function<double(const PhaseState&)>& g,
                       const PhaseState& s)
{
    auto partials = [&](const std::function<double(const PhaseState&)>& fn,
                        Eigen::Vector4d& dq, Eigen::Vector4d& dp) {
        for (int i = 0; i < 4; ++i) {
            const double hq = 1e-5 * std::max(1.0, std::abs(s.point[i]));
            PhaseState sp = s, sm = s;
            sp.point[i] += hq;
            sm.point[i] -= hq;
            dq[i] = (fn(sp) - fn(sm)) / (2 * hq);

            const double hp = 1e-5 * std::max(1.0, std::abs(s.p[i]));
            sp = s;
            sm = s;
            sp.p[i] += hp;
            sm.p[i] -= hp;
            dp[i] = (fn(sp) - fn(sm)) / (2 * hp);
        }
    };
    Eigen::Vector4d fq, fp, gq, gp;
    partials(f, fq, fp);
    partials(g, gq, gp);
    return fq.dot(gp) - fp.dot(gq);
}

} // namespace affine2d
