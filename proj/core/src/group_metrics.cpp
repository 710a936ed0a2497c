#include "affine2d/group_metrics.hpp"

#include <cmath>

namespace affine2d {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix2d;
using Eigen::Vector4d;
using namespace std::complex_literals;

// Real sl(2,R) generators (t0~, t2~, t3~) and su(2) generators (t2, t3).
// t2 is common to both families; t3 differs by the factor i.

Matrix2d gen_t2()
{
    Matrix2d m;
    m << 0, -0.5, 0.5, 0;
    return m;
}
Matrix2d gen_t3_real()  // t3~ = sigma_3 / 2
{
    Matrix2d m;
    m << 0.5, 0, 0, -0.5;
    return m;
}
Matrix2cd gen_t3_su2()  // t3 = sigma_3 / (2i)
{
    Matrix2cd m;
    m << -0.5i, 0.0, 0.0, 0.5i;
    return m;
}

Matrix2d exp_t2(double s)  // exp(s t2~) = rotation by s/2
{
    Matrix2d m;
    m << std::cos(0.5 * s), -std::sin(0.5 * s), std::sin(0.5 * s), std::cos(0.5 * s);
    return m;
}
Matrix2d exp_t3_real(double s)  // exp(s t3~) = diag(e^{s/2}, e^{-s/2})
{
    Matrix2d m = Matrix2d::Zero();
    m(0, 0) = std::exp(0.5 * s);
    m(1, 1) = std::exp(-0.5 * s);
    return m;
}
Matrix2cd exp_t3_su2(double s)  // exp(s t3) = diag(e^{-is/2}, e^{is/2})
{
    Matrix2cd m = Matrix2cd::Zero();
    m(0, 0) = std::exp(-0.5i * s);
    m(1, 1) = std::exp(0.5i * s);
    return m;
}

// Cartan form Omega = (dphi) phi^-1 of the GL+(2,R) parametrization along v.
// The dilatational factor exp(a t0~) commutes with everything and cancels.
Matrix2d gl2_cartan_form(const GroupPoint& p, const Vector4d& v)
{
    const Matrix2d EPhi = exp_t2(p.Phi);
    const Matrix2d Eb = exp_t3_real(p.x);
    const Matrix2d EPsi = exp_t2(p.Psi);
    const Matrix2d M = EPhi * Eb * EPsi;
    const Matrix2d Minv = M.inverse();

    Matrix2d dM = v[1] * gen_t2() * M
                + v[2] * EPhi * gen_t3_real() * Eb * EPsi
                + v[3] * EPhi * Eb * gen_t2() * EPsi;
    return 0.5 * v[0] * Matrix2d::Identity() + dM * Minv;
}

} // namespace

double group_metric_closed_form(const GroupMetricSpec& spec, const GroupPoint& p,
                                const Eigen::Vector4d& v)
{
    const double ea = std::exp(p.a);
    const double da = v[0], dPhi = v[1], dx = v[2], dPsi = v[3];
    switch (spec.family) {
    case GroupMetricFamily::breathingTopSU2:
        return 0.25 * ea * ((1.0 + spec.c) * da * da + dx * dx + dPhi * dPhi
                            + 2.0 * std::cos(p.x) * dPhi * dPsi + dPsi * dPsi);
    case GroupMetricFamily::invariantGL2:
        return 0.25 * ea * ((1.0 + spec.c) * da * da + dx * dx - dPhi * dPhi
                            - 2.0 * std::cosh(p.x) * dPhi * dPsi - dPsi * dPsi);
    }
    throw unsupported_error("unknown group metric family");
}

double cartan_quadratic_gl2(const GroupPoint& p, const Eigen::Vector4d& v,
                            double coeff_sq, double coeff_tr)
{
    Matrix2d omega = gl2_cartan_form(p, v);
    const double tr = omega.trace();
    return coeff_sq * (omega * omega).trace() + coeff_tr * tr * tr;
}

double group_metric_cartan(const GroupMetricSpec& spec, const GroupPoint& p,
                           const Eigen::Vector4d& v)
{
    const double delta2 = std::exp(p.a);  // delta^2
    switch (spec.family) {
    case GroupMetricFamily::invariantGL2:
        // Conformal weight delta^2/2 at Tr(Omega^2), c delta^2/4 at Tr(Omega)^2.
        return cartan_quadratic_gl2(p, v, 0.5 * delta2, 0.25 * spec.c * delta2);
    case GroupMetricFamily::breathingTopSU2: {
        const Matrix2cd EPhi = exp_t2(p.Phi).cast<std::complex<double>>();
        const Matrix2cd ETheta = exp_t3_su2(p.x);
        const Matrix2cd EPsi = exp_t2(p.Psi).cast<std::complex<double>>();
        const Matrix2cd M = EPhi * ETheta * EPsi;
        const Matrix2cd t2 = gen_t2().cast<std::complex<double>>();

        Matrix2cd dM = v[1] * t2 * M
                     + v[2] * EPhi * gen_t3_su2() * ETheta * EPsi
                     + v[3] * EPhi * ETheta * t2 * EPsi;
        Matrix2cd omega = 0.5 * v[0] * Matrix2cd::Identity() + dM * M.inverse();

        // Compact real form: positive quadratic form Tr(Omega^dag Omega).
        const double tr_sq = (omega.adjoint() * omega).trace().real();
        const double tr = omega.trace().real();
        return 0.5 * delta2 * tr_sq + 0.25 * spec.c * delta2 * tr * tr;
    }
    }
    throw unsupported_error("unknown group metric family");
}

GroupPoint group_point_from_polar(const ChartPoint& p)
{
    if (p.chart != Chart::polarRTheta)
        throw unsupported_error("group_point_from_polar expects a polarRTheta point");
    if (p.q[2] <= 0)
        throw domain_error("group_point_from_polar: r must be positive");
    return {std::log(p.q[2]), 2 * p.q[0], p.q[3], -2 * p.q[1]};
}

Eigen::Vector4d group_tangent_from_polar(const ChartPoint& p, const Eigen::Vector4d& v)
{
    if (p.chart != Chart::polarRTheta)
        throw unsupported_error("group_tangent_from_polar expects a polarRTheta point");
    // v = (dphi, dpsi, dr, dtheta) -> (da, dPhi, dTheta, dPsi)
    return {v[2] / p.q[2], 2 * v[0], v[3], -2 * v[1]};
}

std::complex<double> group_metric_gl2_complexified(const GroupMetricSpec& spec,
                                                   double a, double Theta,
                                                   const Eigen::Vector4d& v)
{
    if (spec.family != GroupMetricFamily::invariantGL2)
        throw unsupported_error("complexified evaluation is defined for invariantGL2");
    const std::complex<double> b = 1.0i * Theta;
    const std::complex<double> db = 1.0i * v[2];
    const double ea = std::exp(a);
    const double da = v[0], dPhi = v[1], dPsi = v[3];
    return 0.25 * ea * ((1.0 + spec.c) * da * da + db * db - dPhi * dPhi
                        - 2.0 * std::cosh(b) * dPhi * dPsi - dPsi * dPsi);
}

} // namespace affine2d
