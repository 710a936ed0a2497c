#ifndef AFFINE2D_GROUP_METRICS_HPP
#define AFFINE2D_GROUP_METRICS_HPP

/*
 * Metrics on the matrix groups behind the planar body / spatial top analogy:
 *
 *   breathingTopSU2 -- R+ SU(2), parametrized
 *       phi = exp(a t0) exp(Phi t2) exp(Theta t3) exp(Psi t2),
 *       t_nu = sigma_nu / (2i); arc element Tr(dphi^dag dphi) plus an optional
 *       dilatational correction c d(delta)^2, delta = exp(a/2):
 *       ds^2 = (1+c) d(delta)^2
 *              + (1/4) delta^2 (dTheta^2 + dPhi^2 + 2 cos(Theta) dPhi dPsi + dPsi^2)
 *
 *   invariantGL2 -- GL+(2,R), parametrized
 *       phi = exp(a t0~) exp(Phi t2~) exp(b t3~) exp(Psi t2~),
 *       t1~ = i t1, t2~ = t2, t3~ = i t3 (real sl(2,R) generators); combining
 *       the invariant quadratic forms Tr(Omega^2) and Tr(Omega)^2 of the Cartan
 *       form Omega = (dphi) phi^-1 reproduces
 *       ds^2 = (1+c) d(delta)^2
 *              + (1/4) delta^2 (db^2 - dPhi^2 - 2 cosh(b) dPhi dPsi - dPsi^2)
 *       up to the conformal weight delta^2/2 at the main term (and c delta^2/4
 *       at the trace-squared term), which group_metric_cartan applies so the
 *       two routes agree pointwise.
 *
 * Points are stored as (a, Phi, x, Psi) with x = Theta (breathing top) or
 * x = b (GL+); tangents follow the same order.  delta = exp(a/2) > 0 always.
 */

#include <complex>

#include <Eigen/Dense>

#include "affine2d/charts.hpp"
#include "affine2d/errors.hpp"

namespace affine2d {

enum class GroupMetricFamily { breathingTopSU2, invariantGL2 };

struct GroupMetricSpec {
    GroupMetricFamily family = GroupMetricFamily::invariantGL2;
    double c = 0.0;  ///< dilatational correction weight, the "(1+c)" term
};

/// Group point (a, Phi, Theta-or-b, Psi); delta = exp(a/2).
struct GroupPoint {
    double a = 0, Phi = 0, x = 0, Psi = 0;
};

/// Quadratic form of the family's closed-form arc element on tangent
/// v = (da, dPhi, dTheta-or-db, dPsi).
double group_metric_closed_form(const GroupMetricSpec& spec, const GroupPoint& p,
                                const Eigen::Vector4d& v);

/// Same value via the generator-exponential route: the analytic derivative of
/// the product of one-parameter subgroups, Tr(dphi^dag dphi) (breathing top)
/// or the weighted Tr(Omega^2), Tr(Omega)^2 combination (GL+).
double group_metric_cartan(const GroupMetricSpec& spec, const GroupPoint& p,
                           const Eigen::Vector4d& v);

/// Raw invariant combination cA Tr(Omega^2) + cB Tr(Omega)^2 on GL+(2,R)
/// with constant coefficients.  The Killing ratio cA : cB = 4 : -2
/// annihilates the pure-dilatation direction.
double cartan_quadratic_gl2(const GroupPoint& p, const Eigen::Vector4d& v,
                            double coeff_sq, double coeff_tr);

/// The invariantGL2 closed form evaluated at the imaginary shear b = i Theta,
/// with db = i dTheta: tangent v = (da, dPhi, dTheta, dPsi).  The result is
/// real (imaginary part at round-off), its angular block being minus the
/// breathing-top angular block.
std::complex<double> group_metric_gl2_complexified(const GroupMetricSpec& spec,
                                                   double a, double Theta,
                                                   const Eigen::Vector4d& v);

/// Angle-doubling bridge between the polar chart and the breathing-top
/// Euler-type coordinates:
///   (phi, psi, r, theta) -> (a = log r, Phi = 2 phi, Theta = theta, Psi = -2 psi)
/// (the sign at Psi matches the +cos cross-term orientation of the top).
/// Under this map the polar kinetic metric IS the c = 0 breathing-top arc
/// element: kinetic_energy(p, v, mu) = (mu/2) closed_form(mapped p, mapped v).
GroupPoint group_point_from_polar(const ChartPoint& p);

/// Tangent map of group_point_from_polar at p.
Eigen::Vector4d group_tangent_from_polar(const ChartPoint& p, const Eigen::Vector4d& v);

} // namespace affine2d

#endif
