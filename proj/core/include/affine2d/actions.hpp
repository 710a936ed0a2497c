#ifndef AFFINE2D_ACTIONS_HPP
#define AFFINE2D_ACTIONS_HPP

/*
 * Action-angle machinery for the separable catalog models: turning points,
 * action quadratures, closed-form energy-from-actions laws, frequencies,
 * resonance relations and Bohr-Sommerfeld spectra.
 *
 * Action conventions: J = closed-loop integral of p dq (= 2x the integral
 * between turning points for librations); radial actions are reported on the
 * nonnegative branch.  Quantization uses J = n h, J_phi = m h, J_psi = l h
 * with h = 2 pi hbar.
 */

#include <functional>
#include <string>
#include <vector>

#include "affine2d/models.hpp"

namespace affine2d {

/// Radial-pair and angular actions.  j_a, j_b are (J_alpha, J_beta) for the
/// alpha-beta separations and (J_r, J_theta) for the polar model.
struct ActionSet {
    double j_a = 0;
    double j_b = 0;
    double j_phi = 0;
    double j_psi = 0;
};

struct BSQuantumNumbers {
    int n = 0;  ///< J = n h, n >= 0
    int m = 0;  ///< J_phi = m h
    int l = 0;  ///< J_psi = l h
};

struct TurningPoints {
    double lower = 0;
    double upper = 0;
};

/// Classical turning points veff(x) = energy inside [x_lo, x_hi], located by
/// golden-section minimum search plus bracketed bisection to 1e-10 residual.
/// Throws no_motion_error when energy is below the well minimum, domain_error
/// when the well is not closed inside the window.
TurningPoints turning_points(const std::function<double(double)>& veff, double energy,
                             double x_lo, double x_hi);

enum class SliceKind { alphaSlice, betaSlice, rSlice, thetaSlice };

/// One-dimensional action of a separated slice by quadrature.  slice_energy
/// is E_alpha / E_beta for the alpha-beta slices, h_theta for thetaSlice and
/// the total energy E for rSlice (which also consumes h_theta).  The
/// turning-point singularity is absorbed by x = x- + (x+ - x-) sin^2(u),
/// then 128-node Gauss-Legendre in u.
double action_integral(const PotentialModel& model, SliceKind slice, double slice_energy,
                       double j_phi, double j_psi, double h_theta = 0);

/// Closed-form E(J) law of the model, with the harmonic region dispatch on
/// |J_phi| vs |J_psi|.  Unsupported for free and collapseGuard.
double energy_from_actions(const PotentialModel& model, const ActionSet& a);

/// Slice separation constants implied by an action set, closed form:
/// (E_alpha, E_beta) for the alpha-beta separations; (h_theta, E) for the
/// polar model.  These are what action_integral inverts.
struct SliceConstants {
    double e_alpha = 0;
    double e_beta = 0;
    double h_theta = 0;
    double e_total = 0;
};
SliceConstants slice_constants(const PotentialModel& model, const ActionSet& a);

struct Frequencies {
    double nu_a = 0;    ///< dE/dJ_alpha (or dE/dJ_r)
    double nu_b = 0;    ///< dE/dJ_beta  (or dE/dJ_theta)
    double nu_phi = 0;
    double nu_psi = 0;
};

/// Analytic partials of the closed-form E(J).  Throws domain_error on the
/// separatrix |J_phi| = |J_psi| (harmonic) and at J_phi + J_psi = 0 (the
/// anharmonic region boundary), where E is not differentiable.
Frequencies frequencies(const PotentialModel& model, const ActionSet& a);

/// Central finite differences of energy_from_actions, for cross-checks.
Frequencies frequencies_fd(const PotentialModel& model, const ActionSet& a);

struct ResonanceRelation {
    std::string name;
    double residual = 0;   ///< in units of omega/pi
    bool satisfied = false;
};

/// Evaluate the model's resonance relations at a; relations are satisfied at
/// 1e-9 relative tolerance.  For the polar model nu_rho = 2 nu_r (the r and
/// rho descriptions count the same libration with actions J_r = 2 J_rho).
std::vector<ResonanceRelation> resonance_relations(const PotentialModel& model,
                                                   const ActionSet& a);

/// Names of the satisfied relations only.
std::vector<std::string> resonance_check(const PotentialModel& model, const ActionSet& a);

/// Bohr-Sommerfeld level for (n, m, l).
double bs_spectrum(const PotentialModel& model, const BSQuantumNumbers& q);

} // namespace affine2d

#endif
