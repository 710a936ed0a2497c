#ifndef AFFINE2D_MODELS_HPP
#define AFFINE2D_MODELS_HPP

/*
 * Doubly-isotropic potential catalog and the separable Hamiltonians built on
 * the chart metrics.  Every potential in the catalog is a function of the
 * deformation invariants alone; in the hub variables,
 *
 *   free                 V = 0
 *   harmonic             V = (C/2)(alpha^2 + beta^2)
 *   anharmonicAlphaBeta  V = (C/2)(alpha^2 + 4/alpha^2) + (C/2) beta^2
 *   anharmonicRTheta     V = (C/2) r + (2C/r) / cos^2(theta/2)
 *   collapseGuard        V = C (1/(d1 d2) + (d1^2 + d2^2)/2)
 *
 * anharmonicAlphaBeta and anharmonicRTheta describe the same function on the
 * configuration space; the catalog keeps both entries because their natural
 * separation charts (and hence slice structures) differ.
 *
 * The general separable family in the hub chart reads
 *     V = V_eta(eta)/alpha^2 + V_gamma(gamma)/beta^2 + V_alpha(alpha) + V_beta(beta)
 * (and its polar/elliptic analogs with the corresponding denominators).  The
 * catalog is doubly isotropic: the angular shape slots V_eta, V_gamma are
 * hard-wired to zero, which is what makes p_phi and p_psi constants of motion
 * in every chart.
 */

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "affine2d/charts.hpp"

namespace affine2d {

/// Inertial moment, stiffness and action scale (mu, C, hbar).
struct PhysicalParams {
    double mu = 1.0;
    double stiffness = 1.0;  ///< the constant C of the potential catalog
    double hbar = 1.0;

    double omega() const;  ///< sqrt(C / mu)
    double kappa() const;  ///< sqrt(C mu / hbar^2)
    void validate() const; ///< throws domain_error unless all three are positive
};

enum class PotentialKind { free, harmonic, anharmonicAlphaBeta, anharmonicRTheta, collapseGuard };

const char* potential_kind_name(PotentialKind k);
PotentialKind potential_kind_from_name(const std::string& name);

struct PotentialModel {
    PotentialKind kind = PotentialKind::harmonic;
    PhysicalParams params;
};

/// Chart point plus the conjugate momenta in the same coordinate order.
struct PhaseState {
    ChartPoint point;
    Eigen::Vector4d p = Eigen::Vector4d::Zero();
};

/// Potential energy at p, chart-independent.  Throws domain_error on the
/// model's singular locus (alpha = 0, d1 d2 = 0, cos(theta/2) = 0).
double potential_value(const PotentialModel& m, const ChartPoint& p);

/// Gradient of the potential with respect to the chart coordinates of p
/// (closed form: d V(alpha, beta) chained through the chart Jacobian).
Eigen::Vector4d potential_gradient(const PotentialModel& m, const ChartPoint& p);

/// H = (1/2mu) G^ij p_i p_j + V.
double hamiltonian(const PotentialModel& m, const PhaseState& s);

/// Kinetic part of the Hamiltonian alone.
double kinetic_hamiltonian(const PhaseState& s, double mu);

/// Map a phase state to another chart: the point through the chart transform,
/// the momenta through the velocity pushforward p -> mu G v.
PhaseState transform_state(const PhaseState& s, Chart target, double mu);

/// Named phase-space scalar, e.g. one entry of a constants-of-motion set.
struct NamedValue {
    std::string name;
    double value = 0;
};

/// The separability certificate of the (model, chart) pair:
///   alphaBeta charts:  { p_phi, p_psi, H_alpha, H_beta }
///   polarRTheta:       { p_phi, p_psi, h_theta, H }
///   elliptic (free):   { p_phi, p_psi, K, L }
///   cartesian:         { p_phi, p_psi, H }  (angular momenta as bilinears)
/// Throws unsupported_error for pairs without a separable structure.
std::vector<NamedValue> constants_of_motion(const PotentialModel& m, const PhaseState& s);

/// Same set as closures usable along a trajectory.
std::vector<std::pair<std::string, std::function<double(const PhaseState&)>>>
constants_of_motion_functions(const PotentialModel& m, Chart chart);

/// Spatial and material rotation momenta of a state in any chart.
double momentum_phi(const PhaseState& s);
double momentum_psi(const PhaseState& s);

/// Elliptic-chart auxiliary split quantities (diagnostics; not constants of
/// motion by themselves).  Geodetic shape functions (V_kappa = V_lambda = 0).
double elliptic_h_kappa(const PhaseState& s, double mu);
double elliptic_h_lambda(const PhaseState& s, double mu);

/// Numerical Poisson bracket sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i) by
/// central differences with step 1e-5 * max(1, |coordinate|).
double poisson_bracket(const std::function<double(const PhaseState&)>& f,
                       const std::function<double(const PhaseState&)>& g,
                       const PhaseState& s);

} // namespace affine2d

#endif
