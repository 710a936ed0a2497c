#ifndef AFFINE2D_QUANTUM_HPP
#define AFFINE2D_QUANTUM_HPP

/*
 * Exact quantum spectra of the solvable catalog models and the special
 * functions they are built from: terminating confluent / Gauss hypergeometric
 * polynomials and Wigner small-d functions.
 *
 * Angular split conventions.  The shear potential of the polar model is
 * taken as V_theta = 2C / cos^2(theta/2), exactly as the potential catalog
 * defines it; the angular eigenvalue e_theta below belongs to that split.
 * (Shifting the constant 2C between V_r and V_theta/r changes e_theta by 2C
 * and nothing else; total levels are split-independent.)
 */

#include <utility>

#include "affine2d/models.hpp"

namespace affine2d {

/// Exact half-integer: value() = twice / 2.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    HalfInt(int whole) : twice(2 * whole) {}
    static HalfInt from_twice(int t) { return HalfInt{t, 0}; }
    static HalfInt from_double(double v);

    double value() const { return 0.5 * twice; }
    bool is_integer() const { return twice % 2 == 0; }
    HalfInt operator-() const { return from_twice(-twice); }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }

private:
    HalfInt(int t, int) : twice(t) {}
};

/// Separated quantum numbers: radial pair (n_alpha, n_beta) or (n_r, n_theta)
/// plus the angular pair (m, l) in hbar units.
struct QuantumNumbers {
    int n_a = 0;
    int n_b = 0;
    int m = 0;
    int l = 0;

    int n() const { return n_a + n_b; }
};

enum class Provenance { analytic, oracle };

struct SpectrumEntry {
    QuantumNumbers numbers;
    double energy = 0;
    PotentialKind model = PotentialKind::harmonic;
    Provenance provenance = Provenance::analytic;
};

// --- hypergeometric polynomials ----------------------------------------------

/// Terminating confluent series sum_k ((-n)_k / (b)_k) x^k / k!, degree n.
/// Pochhammer factors by iterative products; throws domain_error when (b)_k
/// hits zero within the sum.
double confluent_poly(int n, double b, double x);

/// Terminating Gauss series sum_k ((-n)_k (a2)_k / (b)_k) x^k / k!.
double gauss_poly(int n, double a2, double b, double x);

// --- Wigner d ------------------------------------------------------------------

/// Wigner small-d d^j_{ml}(theta) in the standard convention:
/// d^j_{ml}(0) = delta_{ml}, d^{1/2}_{1/2,1/2} = cos(theta/2).
/// Explicit factorial-sum closed form, adequate for j below ~20.
double wigner_small_d(HalfInt j, HalfInt m, HalfInt l, double theta);

/// Eigenfunction of the nutation operator
///   f'' + cot(theta) f' - ((m^2 + 2 m l cos(theta) + l^2)/sin^2(theta)) f
/// with eigenvalue -j(j+1): the standard d^j with the material index flipped,
/// d^j_{m,-l}, reflecting the opposite orientation of the material angle in
/// this chart family relative to the usual Euler-angle convention.
double nutation_eigenfunction(HalfInt j, HalfInt m, HalfInt l, double theta);

/// Max residual of the discretized nutation eigenequation over an interior
/// theta grid, with e_theta = (2 hbar^2 / mu) j (j+1); derivatives by central
/// differences.
double nutation_residual(HalfInt j, HalfInt m, HalfInt l, double mu, double hbar);

// --- exact spectra -------------------------------------------------------------

/// Harmonic levels E = (hbar omega / 2)(4n + 4 + |m-l| + |m+l|)
///              ( = hbar omega (2n + 2 + max(|m|, |l|)) ).
SpectrumEntry energy_harmonic(const QuantumNumbers& q, const PhysicalParams& p);

/// Anharmonic alpha-beta levels
/// E = (hbar omega / 2)(4n + 4 + |m+l| + sqrt((m-l)^2 + 16 C mu / hbar^2)).
SpectrumEntry energy_anharmonic_ab(const QuantumNumbers& q, const PhysicalParams& p);

/// Polar anharmonic levels: the same closed form with n = n_r + n_theta.
SpectrumEntry energy_anharmonic_rtheta(const QuantumNumbers& q, const PhysicalParams& p);

/// The pair of effective quantum numbers (4n + |m+l|, |m-l|) that fully
/// controls the anharmonic level value.
std::pair<int, int> anharmonic_effective_numbers(const QuantumNumbers& q);

// Separated slice eigenvalues (the quantities the Sturm oracle reproduces).

/// Alpha-slice level E_alpha = (hbar omega/2)(4 n_alpha + 2 + 2 s) with
/// s = |m-l|/2 (harmonic) or s = (1/2) sqrt((m-l)^2 + 16 C mu/hbar^2)
/// (anharmonic).
double energy_alpha_slice(PotentialKind model, int n_alpha, int m, int l,
                          const PhysicalParams& p);

/// Beta-slice level E_beta = (hbar omega/2)(4 n_beta + 2 + |m+l|).
double energy_beta_slice(PotentialKind model, int n_beta, int m, int l,
                         const PhysicalParams& p);

/// Angular eigenvalue of the polar anharmonic model for the catalog split
/// V_theta = 2C/cos^2(theta/2):
///   e_theta = (hbar^2/8mu) [ (4 n_theta + 2 + |m+l| + 2 chi)^2 - 4 ],
///   chi = (1/2) sqrt((m-l)^2 + 16 C mu / hbar^2).
double e_theta_closed_form(int n_theta, int m, int l, const PhysicalParams& p);

/// Radial level at fixed angular eigenvalue:
///   E = hbar omega (2 n_r + 1 + sqrt(1 + 2 mu e_theta / hbar^2)).
double energy_from_e_theta(int n_r, double e_theta, const PhysicalParams& p);

// --- wavefunctions -------------------------------------------------------------

enum class WaveVariable { alpha, beta, r, theta };

/// Structure of a separated factor: the endpoint exponents and the degree of
/// the terminating hypergeometric polynomial.
///   alpha:  x^s,            s = sigma = |m-l|/2 (harmonic) or chi (anharmonic)
///   beta:   x^g,            g = gamma = |m+l|/2
///   r:      x^(-1/2+eps),   eps = (1/2) sqrt(1 + 2 mu e_theta / hbar^2)
///   theta:  sin(t/2)^g cos(t/2)^chi
struct WaveFactor {
    WaveVariable variable = WaveVariable::alpha;
    double exponent_origin = 0;  ///< power at the left/origin endpoint
    double exponent_far = 0;     ///< cos-side power (theta factor only)
    int degree = 0;              ///< polynomial degree (= the radial quantum number)
    PhysicalParams params;
};

WaveFactor wavefunction_factor(const QuantumNumbers& q, const PhysicalParams& p,
                               PotentialKind model, WaveVariable var);

/// Unnormalized separated wavefunction factor at x:
///   f_alpha = alpha^s kappa^{1/4+s/2} e^{-kappa alpha^2/2} F2(-n_a; 1+s; kappa alpha^2)
///   f_beta  = the |m+l|/2 analog in beta
///   f_r     = r^{-1/2+eps} kappa^{1/2+eps} e^{-kappa r/2} F2(-n_r; 1+2eps; kappa r)
///   f_theta = cos(theta/2)^chi sin(theta/2)^gam
///             F1(-n_theta, 1+n_theta+gam+chi; 1+chi; cos^2(theta/2))
/// with s = sigma (harmonic) or chi (anharmonic) and
/// eps = (1/2) sqrt(1 + 2 mu e_theta / hbar^2).
double wavefunction(const QuantumNumbers& q, const PhysicalParams& p, PotentialKind model,
                    WaveVariable var, double x);

/// L2 norm under the slice measure (weight alpha, beta, r, sin(theta)).
double wavefunction_norm(const QuantumNumbers& q, const PhysicalParams& p,
                         PotentialKind model, WaveVariable var);

/// Domain over which the factor is sampled and normalized (radial domains
/// truncated where the Gaussian envelope is negligible).
std::pair<double, double> wavefunction_domain(const QuantumNumbers& q,
                                              const PhysicalParams& p,
                                              PotentialKind model, WaveVariable var);

/// wavefunction / wavefunction_norm.
double wavefunction_normalized(const QuantumNumbers& q, const PhysicalParams& p,
                               PotentialKind model, WaveVariable var, double x);

/// Count of sign changes of the factor on the interior of its domain.
int wavefunction_node_count(const QuantumNumbers& q, const PhysicalParams& p,
                            PotentialKind model, WaveVariable var);

// --- rigid-top levels -----------------------------------------------------------

struct TopLevel {
    double energy = 0;
    int degeneracy = 0;
};

/// Spherical free top: E_j = (hbar^2 / 2I) j(j+1), (2j+1)^2-fold degenerate.
TopLevel spherical_top_level(HalfInt j, double inertia, double hbar);

/// Symmetric free top: E_{j,l} = (hbar^2/2I) j(j+1) + hbar^2 (1/2I - 1/2K) l^2,
/// 2(2j+1)-fold degenerate for l != 0 (the sign of l), (2j+1)-fold for l = 0.
TopLevel symmetric_top_level(HalfInt j, HalfInt l, double inertia_i, double inertia_k,
                             double hbar);

} // namespace affine2d

#endif
