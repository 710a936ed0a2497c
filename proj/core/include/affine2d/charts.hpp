#ifndef AFFINE2D_CHARTS_HPP
#define AFFINE2D_CHARTS_HPP

/*
 * Coordinate charts on the configuration space GL(2,R) of the planar
 * affinely-rigid body (translations dropped), the two-polar (singular value)
 * decomposition, and the kinetic-energy metric Tr(dphi^T dphi) expressed in
 * every chart.
 *
 * Chart coordinate orders (angles first):
 *   cartesian      (x, y, z, u)            matrix entries [[x, y], [z, u]]
 *   twoPolar       (phi, psi, d1, d2)      phi = O(phi) diag(d1,d2) R(psi)^T
 *   alphaBeta      (eta, gamma, alpha, beta)
 *                    eta = phi - psi, gamma = phi + psi,
 *                    alpha = (d1 + d2)/sqrt(2), beta = (d1 - d2)/sqrt(2)
 *   polarRTheta    (phi, psi, r, theta)    alpha = sqrt(r) cos(theta/2),
 *                                          beta  = sqrt(r) sin(theta/2)
 *   rhoEpsilon     (eta, gamma, rho, eps)  alpha = rho cos(eps), beta = rho sin(eps)
 *   exponentialAB  (phi, psi, a, b)        d1 = exp((a+b)/2), d2 = exp((a-b)/2)
 *   elliptic       (eta, gamma, kappa, lambda)
 *                    alpha = sqrt(2) cosh(kappa) cos(lambda),
 *                    beta  = sqrt(2) sinh(kappa) sin(lambda)
 *
 * Angle coordinates are kept on the universal cover (plain reals); only
 * two_polar_decompose reduces its output angles to [0, 2pi).  All charts
 * share the alphaBeta chart as the transform hub, so angle pairs never pass
 * through an atan2 branch when converting between curvilinear charts.
 */

#include <array>
#include <string>

#include <Eigen/Dense>

#include "affine2d/errors.hpp"

namespace affine2d {

/// Real 2x2 configuration matrix [[x, y], [z, u]] of the internal motion.
struct ConfigurationMatrix {
    double x = 1, y = 0, z = 0, u = 1;

    double det() const { return x * u - y * z; }

    Eigen::Matrix2d matrix() const
    {
        Eigen::Matrix2d m;
        m << x, y, z, u;
        return m;
    }

    Eigen::Vector4d as_vector() const { return {x, y, z, u}; }

    static ConfigurationMatrix from_matrix(const Eigen::Matrix2d& m)
    {
        return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    }
    static ConfigurationMatrix from_vector(const Eigen::Vector4d& v)
    {
        return {v[0], v[1], v[2], v[3]};
    }
};

/// Two-polar (singular value) coordinates: phi = O(phi) diag(d1, d2) R(psi)^T.
/// Canonical branch: d1 >= d2, angles in [0, 2pi).  The residual discrete
/// gauge (phi, psi) -> (phi + pi, psi + pi) leaves the matrix unchanged.
struct TwoPolarCoords {
    double phi = 0;  ///< spatial rotation angle
    double psi = 0;  ///< material rotation angle
    double d1 = 1;   ///< deformation invariant D1
    double d2 = 1;   ///< deformation invariant D2 (negative only for det < 0)
};

enum class Chart {
    cartesian,
    twoPolar,
    alphaBeta,
    polarRTheta,
    rhoEpsilon,
    exponentialAB,
    elliptic,
};

const char* chart_name(Chart c);
Chart chart_from_name(const std::string& name);

/// Names of the four coordinates of a chart, in storage order.
std::array<const char*, 4> chart_coord_names(Chart c);

/// A point of GL(2,R) expressed in one chart.  coords follow the chart
/// order documented above (angles first where applicable).
struct ChartPoint {
    Chart chart = Chart::cartesian;
    std::array<double, 4> q{1, 0, 0, 1};

    double operator[](int i) const { return q[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return q[static_cast<std::size_t>(i)]; }
};

/// Components G_ij of the kinetic metric in a chart's coordinate order.
struct MetricTensor {
    Chart chart = Chart::cartesian;
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
};

// --- two-polar decomposition -------------------------------------------------

struct DecomposeOptions {
    /// Admit mirror-reflected configurations (det < 0) via d2 < 0.
    /// Off by default: elasticity applications live on GL+(2,R).
    bool allow_reflection = false;
};

/// Closed-form 2x2 singular value decomposition in rotation-angle form.
/// Canonical output: d1 >= d2 (> 0 for det > 0), angles reduced to [0, 2pi).
/// Degenerate d1 == d2: the material angle is pure gauge, fixed to psi = 0.
/// Throws domain_error on det == 0, and on det < 0 unless allow_reflection.
TwoPolarCoords two_polar_decompose(const ConfigurationMatrix& m,
                                   const DecomposeOptions& opts = {});

/// O(phi) * diag(d1, d2) * R(psi)^T.
ConfigurationMatrix two_polar_compose(const TwoPolarCoords& c);

// --- chart transforms --------------------------------------------------------

/// Express p in the target chart.  The underlying R^4 point is preserved
/// exactly; angle coordinates map linearly between curvilinear charts.
/// Throws domain_error when the image violates the target chart's branch
/// (e.g. beta < 0 has no polarRTheta principal-branch image), naming the
/// violated constraint.
ChartPoint transform(const ChartPoint& p, Chart target);

/// The R^4 point (matrix) a chart point represents.
ConfigurationMatrix to_configuration(const ChartPoint& p);

/// Coordinates of a configuration in the given chart (via the canonical
/// two-polar branch for curvilinear charts).
ChartPoint from_configuration(const ConfigurationMatrix& m, Chart chart,
                              const DecomposeOptions& opts = {});

/// True when p lies in the chart's admissible domain, i.e. away from the
/// loci where the kinetic metric degenerates (beta = 0, sin(theta) = 0, ...).
bool in_domain(const ChartPoint& p);

/// Human-readable admissibility violation, empty if admissible.
std::string domain_violation(const ChartPoint& p);

// --- metric ------------------------------------------------------------------

/// Closed-form metric components G_ij at p.  Throws domain_error on the
/// chart's singular locus, where the metric is not positive definite.
MetricTensor metric_at(const ChartPoint& p);

/// Closed-form inverse metric G^ij at p (same domain as metric_at).
Eigen::Matrix4d inverse_metric_at(const ChartPoint& p);

/// Kinetic energy (mu/2) v^T G(p) v of a tangent v in chart coordinates.
double kinetic_energy(const ChartPoint& p, const Eigen::Vector4d& v, double mu);

/// Closed-form partial derivative dG/dq_k of the metric components at p.
/// Zero for the cyclic (angle) directions of every chart.
Eigen::Matrix4d metric_partial(const ChartPoint& p, int k);

/// Jacobian d(target coords)/d(source coords) of the chart transform at p,
/// assembled from the analytic leg Jacobians through the alphaBeta hub.
Eigen::Matrix4d transform_jacobian(const ChartPoint& p, Chart target);

/// Push a tangent vector at p to the target chart: v_target = J v.
Eigen::Vector4d push_tangent(const ChartPoint& p, const Eigen::Vector4d& v, Chart target);

} // namespace affine2d

#endif
