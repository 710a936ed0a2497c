#include "affine2d/actions.hpp"

#include <cmath>

#include "affine2d/quadrature.hpp"

namespace affine2d {

namespace {

constexpr double kGolden = 0.6180339887498949;

double bisect_crossing(const std::function<double(double)>& f, double lo, double hi,
                       double f_lo)
{
    // f changes sign between lo and hi; f(lo) has sign of f_lo.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (f_lo > 0))
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo)))
            break;
    }
    return 0.5 * (lo + hi);
}

struct WellMinimum {
    double x, v;
};

WellMinimum find_minimum(const std::function<double(double)>& veff, double lo, double hi)
{
    // Coarse scan, then golden-section refinement.
    const int n_scan = 512;
    double best_x = lo, best_v = veff(lo);
    for (int i = 1; i <= n_scan; ++i) {
        const double x = lo + (hi - lo) * i / n_scan;
        const double v = veff(x);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / n_scan);
    double b = std::min(hi, best_x + (hi - lo) / n_scan);
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = veff(x1), f2 = veff(x2);
    for (int i = 0; i < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a)); ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = veff(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = veff(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, veff(xm)};
}

// Turning points with hard-wall semantics: a window edge whose veff value
// lies below the energy is itself the turning point (the coordinate boundary
// reflects the motion there, e.g. alpha = 0 at zero angular term).
TurningPoints turning_points_walled(const std::function<double(double)>& veff,
                                    double energy, double x_lo, double x_hi)
{
    WellMinimum wm = find_minimum(veff, x_lo, x_hi);
    if (wm.v > energy)
        throw no_motion_error("turning_points: energy below the well minimum");

    auto g = [&](double x) { return veff(x) - energy; };
    TurningPoints tp;
    if (g(x_lo) > 0)
        tp.lower = bisect_crossing(g, x_lo, wm.x, +1);
    else
        tp.lower = x_lo;
    if (g(x_hi) > 0)
        tp.upper = bisect_crossing(g, wm.x, x_hi, -1);
    else
        tp.upper = x_hi;
    return tp;
}

} // namespace

TurningPoints turning_points(const std::function<double(double)>& veff, double energy,
                             double x_lo, double x_hi)
{
    if (!(x_lo < x_hi))
        throw domain_error("turning_points: empty search window");
    if (veff(x_lo) < energy || veff(x_hi) < energy)
        throw domain_error("turning_points: well is open at a window edge "
                           "(veff(edge) < energy)");
    return turning_points_walled(veff, energy, x_lo, x_hi);
}

// ---------------------------------------------------------------------------
// Slice closures: squared momentum p^2(x) and effective potential.
// ---------------------------------------------------------------------------

namespace {

struct Slice {
    std::function<double(double)> veff;  // turning points solve veff = e_slice
    std::function<double(double)> p2;    // squared momentum
    double x_lo, x_hi;                   // search window containing the well
};

bool is_anharmonic(PotentialKind k)
{
    return k == PotentialKind::anharmonicAlphaBeta || k == PotentialKind::anharmonicRTheta;
}

Slice make_slice(const PotentialModel& model, SliceKind kind, double e_slice,
                 double j_phi, double j_psi, double h_theta)
{
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    const PotentialKind pk = model.kind;
    if (pk == PotentialKind::free || pk == PotentialKind::collapseGuard)
        throw unsupported_error(std::string("no action slices for model ")
                                + potential_kind_name(pk));

    switch (kind) {
    case SliceKind::alphaSlice: {
        const double g = (j_phi - j_psi) * (j_phi - j_psi) / (16 * M_PI * M_PI);
        const bool anh = is_anharmonic(pk);
        auto v = [C, anh](double x) {
            double val = 0.5 * C * x * x;
            if (anh)
                val += 2 * C / (x * x);
            return val;
        };
        auto veff = [v, g, mu](double x) { return v(x) + g / (2 * mu * x * x); };
        auto p2 = [v, g, mu, e_slice](double x) {
            return 2 * mu * (e_slice - v(x)) - g / (x * x);
        };
        double hi = 2 * std::sqrt(2 * std::max(e_slice, 1.0) / C);
        while (veff(hi) < e_slice)
            hi *= 2;
        return {veff, p2, 1e-9 * hi, hi};
    }
    case SliceKind::betaSlice: {
        const double g = (j_phi + j_psi) * (j_phi + j_psi) / (16 * M_PI * M_PI);
        auto v = [C](double x) { return 0.5 * C * x * x; };
        auto veff = [v, g, mu](double x) { return v(x) + g / (2 * mu * x * x); };
        auto p2 = [v, g, mu, e_slice](double x) {
            return 2 * mu * (e_slice - v(x)) - g / (x * x);
        };
        double hi = 2 * std::sqrt(2 * std::max(e_slice, 1.0) / C);
        while (veff(hi) < e_slice)
            hi *= 2;
        return {veff, p2, 1e-9 * hi, hi};
    }
    case SliceKind::thetaSlice: {
        if (!is_anharmonic(pk))
            throw unsupported_error("thetaSlice is defined for the anharmonic polar model");
        const double p_phi = j_phi / (2 * M_PI), p_psi = j_psi / (2 * M_PI);
        auto vtheta = [C](double th) {
            const double c = std::cos(0.5 * th);
            return 2 * C / (c * c);
        };
        auto veff = [=](double th) {
            const double s = std::sin(th);
            return vtheta(th)
                   + (p_phi * p_phi + p_psi * p_psi + 2 * p_phi * p_psi * std::cos(th))
                         / (2 * mu * s * s);
        };
        auto p2 = [=](double th) {
            const double s = std::sin(th);
            return 0.5 * mu * (e_slice - vtheta(th))
                   - (p_phi * p_phi + p_psi * p_psi + 2 * p_phi * p_psi * std::cos(th))
                         / (4 * s * s);
        };
        return {veff, p2, 1e-7, M_PI - 1e-7};
    }
    case SliceKind::rSlice: {
        if (!is_anharmonic(pk))
            throw unsupported_error("rSlice is defined for the anharmonic polar model");
        auto veff = [C, h_theta](double r) { return 0.5 * C * r + h_theta / r; };
        auto p2 = [C, h_theta, mu, e_slice](double r) {
            return mu * (e_slice - 0.5 * C * r - h_theta / r) / (2 * r);
        };
        double hi = 4 * std::max(e_slice, 1.0) / C;
        while (veff(hi) < e_slice)
            hi *= 2;
        return {veff, p2, 1e-12 * hi, hi};
    }
    }
    throw unsupported_error("unknown slice kind");
}

} // namespace

double action_integral(const PotentialModel& model, SliceKind kind, double e_slice,
                       double j_phi, double j_psi, double h_theta)
{
    Slice s = make_slice(model, kind, e_slice, j_phi, j_psi, h_theta);
    TurningPoints tp = turning_points_walled(s.veff, e_slice, s.x_lo, s.x_hi);
    const double width = tp.upper - tp.lower;
    if (width <= 0)
        return 0;
    // x = x- + width sin^2(u) turns the sqrt endpoint zeros into smooth factors.
    auto integrand = [&](double u) {
        const double su = std::sin(u), cu = std::cos(u);
        const double x = tp.lower + width * su * su;
        const double p2 = s.p2(x);
        return (p2 <= 0) ? 0.0 : std::sqrt(p2) * 2 * width * su * cu;
    };
    return 2 * integrate_gl(integrand, 0, 0.5 * M_PI, 128);
}

double energy_from_actions(const PotentialModel& model, const ActionSet& a)
{
    const double omega = model.params.omega();
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    const double J = a.j_a + a.j_b;
    switch (model.kind) {
    case PotentialKind::harmonic: {
        // Region dispatch on |J_phi| vs |J_psi|; the boundary uses the common
        // separatrix value, continuous from both sides.
        if (std::abs(a.j_phi) > std::abs(a.j_psi))
            return omega / (2 * M_PI) * (2 * J + std::abs(a.j_phi));
        if (std::abs(a.j_phi) < std::abs(a.j_psi))
            return omega / (2 * M_PI) * (2 * J + std::abs(a.j_psi));
        return omega / (2 * M_PI) * (2 * J + std::abs(a.j_phi));
    }
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta: {
        const double root = std::sqrt(64 * mu * M_PI * M_PI * C
                                      + (a.j_phi - a.j_psi) * (a.j_phi - a.j_psi));
        return omega / (4 * M_PI) * (4 * J + std::abs(a.j_phi + a.j_psi) + root);
    }
    case PotentialKind::free:
    case PotentialKind::collapseGuard:
        throw unsupported_error(std::string("no closed-form E(J) law for model ")
                                + potential_kind_name(model.kind));
    }
    throw unsupported_error("unknown potential kind");
}

SliceConstants slice_constants(const PotentialModel& model, const ActionSet& a)
{
    const double omega = model.params.omega();
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    SliceConstants sc;
    sc.e_total = energy_from_actions(model, a);
    switch (model.kind) {
    case PotentialKind::harmonic:
        sc.e_alpha = omega / (4 * M_PI) * (4 * a.j_a + std::abs(a.j_phi - a.j_psi));
        sc.e_beta = omega / (4 * M_PI) * (4 * a.j_b + std::abs(a.j_phi + a.j_psi));
        return sc;
    case PotentialKind::anharmonicAlphaBeta: {
        const double root = std::sqrt(64 * mu * M_PI * M_PI * C
                                      + (a.j_phi - a.j_psi) * (a.j_phi - a.j_psi));
        sc.e_alpha = omega / (4 * M_PI) * (4 * a.j_a + root);
        sc.e_beta = omega / (4 * M_PI) * (4 * a.j_b + std::abs(a.j_phi + a.j_psi));
        return sc;
    }
    case PotentialKind::anharmonicRTheta: {
        // sqrt(2 mu h_theta) = (J_theta + |J_phi+J_psi|/4 + root/4) / pi
        const double root = std::sqrt(64 * mu * M_PI * M_PI * C
                                      + (a.j_phi - a.j_psi) * (a.j_phi - a.j_psi));
        const double srt = (a.j_b + 0.25 * std::abs(a.j_phi + a.j_psi) + 0.25 * root) / M_PI;
        sc.h_theta = srt * srt / (2 * mu);
        return sc;
    }
    default:
        throw unsupported_error(std::string("no slice constants for model ")
                                + potential_kind_name(model.kind));
    }
}

Frequencies frequencies(const PotentialModel& model, const ActionSet& a)
{
    const double omega = model.params.omega();
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    Frequencies f;
    switch (model.kind) {
    case PotentialKind::harmonic: {
        if (std::abs(a.j_phi) == std::abs(a.j_psi))
            throw domain_error("frequencies: E(J) is not differentiable on the "
                               "separatrix |J_phi| = |J_psi|");
        f.nu_a = f.nu_b = omega / M_PI;
        const double s_minus = (a.j_phi - a.j_psi > 0) ? 1.0 : -1.0;
        const double s_plus = (a.j_phi + a.j_psi > 0) ? 1.0 : -1.0;
        f.nu_phi = omega / (4 * M_PI) * (s_minus + s_plus);
        f.nu_psi = omega / (4 * M_PI) * (-s_minus + s_plus);
        return f;
    }
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta: {
        if (a.j_phi + a.j_psi == 0)
            throw domain_error("frequencies: E(J) is not differentiable at "
                               "J_phi + J_psi = 0");
        f.nu_a = f.nu_b = omega / M_PI;
        const double s = (a.j_phi + a.j_psi > 0) ? 1.0 : -1.0;
        const double d = a.j_phi - a.j_psi;
        const double root = std::sqrt(64 * mu * M_PI * M_PI * C + d * d);
        f.nu_phi = omega / (4 * M_PI) * (s + d / root);
        f.nu_psi = omega / (4 * M_PI) * (s - d / root);
        return f;
    }
    default:
        throw unsupported_error(std::string("no closed-form frequencies for model ")
                                + potential_kind_name(model.kind));
    }
}

Frequencies frequencies_fd(const PotentialModel& model, const ActionSet& a)
{
    auto energy = [&](const ActionSet& s) { return energy_from_actions(model, s); };
    auto partial = [&](auto bump) {
        const double h = 1e-6;
        ActionSet plus = a, minus = a;
        bump(plus, h);
        bump(minus, -h);
        return (energy(plus) - energy(minus)) / (2 * h);
    };
    Frequencies f;
    f.nu_a = partial([](ActionSet& s, double h) { s.j_a += h; });
    f.nu_b = partial([](ActionSet& s, double h) { s.j_b += h; });
    f.nu_phi = partial([](ActionSet& s, double h) { s.j_phi += h; });
    f.nu_psi = partial([](ActionSet& s, double h) { s.j_psi += h; });
    return f;
}

std::vector<ResonanceRelation> resonance_relations(const PotentialModel& model,
                                                   const ActionSet& a)
{
    const Frequencies f = frequencies(model, a);
    const double scale = model.params.omega() / M_PI;
    const double tol = 1e-9;
    auto rel = [&](std::string name, double value) {
        return ResonanceRelation{std::move(name), value / scale,
                                 std::abs(value) <= tol * scale};
    };

    std::vector<ResonanceRelation> out;
    switch (model.kind) {
    case PotentialKind::harmonic: {
        out.push_back(rel("nu_alpha - nu_beta = 0", f.nu_a - f.nu_b));
        // in each region one angular frequency vanishes and the other is
        // half of nu_alpha: the 2:1 pattern of the planar oscillator
        const bool phi_active = std::abs(a.j_phi) > std::abs(a.j_psi);
        const double active = phi_active ? f.nu_phi : f.nu_psi;
        const double inactive = phi_active ? f.nu_psi : f.nu_phi;
        const char* an = phi_active ? "phi" : "psi";
        const char* in = phi_active ? "psi" : "phi";
        const double sgn = active > 0 ? 1.0 : -1.0;
        out.push_back(rel(std::string("nu_alpha ") + (sgn > 0 ? "-" : "+") + " 2 nu_"
                              + an + " = 0",
                          f.nu_a - 2 * sgn * active));
        out.push_back(rel(std::string("nu_") + in + " = 0", inactive));
        return out;
    }
    case PotentialKind::anharmonicAlphaBeta: {
        out.push_back(rel("nu_alpha - nu_beta = 0", f.nu_a - f.nu_b));
        const double nu_gamma = f.nu_phi + f.nu_psi;
        const double s = (a.j_phi + a.j_psi > 0) ? 1.0 : -1.0;
        out.push_back(rel(std::string("nu_alpha ") + (s > 0 ? "-" : "+")
                              + " 2 nu_gamma = 0",
                          f.nu_a - s * 2 * nu_gamma));
        return out;
    }
    case PotentialKind::anharmonicRTheta: {
        // nu_rho = 2 nu_r: the rho description halves the action (J_r = 2 J_rho)
        const double nu_rho = 2 * f.nu_a;
        out.push_back(rel("nu_rho - 2 nu_theta = 0", nu_rho - 2 * f.nu_b));
        const double s = (a.j_phi + a.j_psi > 0) ? 1.0 : -1.0;
        out.push_back(rel(std::string("nu_theta ") + (s > 0 ? "-" : "+")
                              + " 2 nu_phi " + (s > 0 ? "-" : "+") + " 2 nu_psi = 0",
                          f.nu_b - s * 2 * (f.nu_phi + f.nu_psi)));
        return out;
    }
    default:
        throw unsupported_error(std::string("no resonance catalog for model ")
                                + potential_kind_name(model.kind));
    }
}

std::vector<std::string> resonance_check(const PotentialModel& model, const ActionSet& a)
{
    std::vector<std::string> names;
    for (auto& r : resonance_relations(model, a))
        if (r.satisfied)
            names.push_back(r.name);
    return names;
}

double bs_spectrum(const PotentialModel& model, const BSQuantumNumbers& q)
{
    const double hbar = model.params.hbar;
    const double omega = model.params.omega();
    const double mu = model.params.mu;
    const double C = model.params.stiffness;
    if (q.n < 0)
        throw domain_error("bs_spectrum: n must be nonnegative");
    switch (model.kind) {
    case PotentialKind::harmonic:
        return 0.5 * hbar * omega * (4 * q.n + std::abs(q.m - q.l) + std::abs(q.m + q.l));
    case PotentialKind::anharmonicAlphaBeta:
    case PotentialKind::anharmonicRTheta:
        return 0.5 * hbar * omega
               * (4 * q.n + std::abs(q.m + q.l)
                  + std::sqrt(double(q.m - q.l) * (q.m - q.l)
                              + 16 * C * mu / (hbar * hbar)));
    default:
        throw unsupported_error(std::string("no Bohr-Sommerfeld rule for model ")
                                + potential_kind_name(model.kind));
    }
}

} // namespace affine2d
