#ifndef AFFINE2D_STURM_HPP
#define AFFINE2D_STURM_HPP

/*
 * Independent numerical Sturm-Liouville eigenvalue oracle for the separated
 * one-dimensional slices of the quantized models.  Self-adjoint form
 *
 *     -(p f')' + q f = lambda w f
 *
 * is discretized by a flux-conservative (exactly symmetric) second-order
 * scheme on a cell-centered grid; eigenvalues come from Sturm-sequence
 * bisection on the shifted tridiagonal matrix, followed by one Richardson
 * refinement (grid_n and 2 grid_n).
 *
 * Endpoints: regularSingular endpoints (alpha = 0, theta in {0, pi}, r = 0)
 * carry p(endpoint) = 0, so the boundary flux vanishes on the staggered grid
 * and boundedness of the solution is imposed implicitly; dirichlet endpoints
 * use ghost reflection.  Unbounded domains are truncated where the analytic
 * Gaussian envelope drops below 1e-14.
 */

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "affine2d/models.hpp"
#include "affine2d/quantum.hpp"

namespace affine2d {

enum class Endpoint { dirichlet, regularSingular };

/// Angular quantum-number convention of the nutation-type equation: the
/// integer pair keeps the (m^2 + 2ml cos + l^2)/4 numerator; the half-integer
/// pair drops the 1/4 and admits m, l in steps of 1/2.  The two descriptions
/// coincide under the relabeling m -> m/2, l -> l/2.
enum class AngularConvention { integerPair, halfIntegerPair };

struct SLProblem {
    std::function<double(double)> p, q, w;
    double x_lo = 0, x_hi = 1;
    Endpoint left = Endpoint::dirichlet;
    Endpoint right = Endpoint::dirichlet;
    int grid_n = 2000;
    /// physical eigenvalue = lambda * eigenvalue_scale
    double eigenvalue_scale = 1.0;

    /// Optional regularized form.  At a regular-singular endpoint the bounded
    /// solution behaves like a known fractional power (x^sigma, sin^gam ...);
    /// writing f = prefactor * u and transforming the self-adjoint data to
    ///   p_reg = p s^2,  w_reg = w s^2,  q_reg = s (q s - (p s')')
    /// leaves the same eigenvalues but a smooth factor u, restoring clean
    /// second-order convergence of the flux scheme (the raw form alone drops
    /// to first order for half-integer exponents).  The solver uses these
    /// when set; eigenvectors are mapped back through the prefactor.
    std::function<double(double)> p_reg, q_reg, w_reg, prefactor;

    bool regularized() const { return static_cast<bool>(p_reg); }
};

enum class SLEquation { alphaRadial, betaRadial, thetaAngular, rRadial, rhoRadial };

/// Assemble the self-adjoint data of one separated slice:
///   alphaRadial  p = w = alpha,  q = (m-l)^2/(4 alpha) + (2mu/hbar^2) V_alpha alpha
///   betaRadial   p = w = beta,   q = (m+l)^2/(4 beta)  + (2mu/hbar^2) V_beta beta
///   thetaAngular p = w = sin(t), q = (m^2+2ml cos+l^2)/(4 sin) + (mu/2hbar^2) V_t sin
///   rRadial      p = 4r^2, w = r, q = (2mu/hbar^2) (V_r r + e_theta)
///   rhoRadial    p = w = rho^3,  q = (2mu/hbar^2) (V_rho + e_theta/rho^2) rho^3
/// e_theta feeds the radial equations of the polar model.  Throws
/// unsupported_error for model/equation pairs outside the catalog
/// (free has no bound slices; collapseGuard is classical-only).
SLProblem build_problem(SLEquation eq, const PotentialModel& model, HalfInt m, HalfInt l,
                        AngularConvention convention = AngularConvention::integerPair,
                        double e_theta = 0);

struct EigenResult {
    std::vector<double> eigenvalues;      ///< k lowest, physical scale, extrapolated
    std::vector<double> error_estimates;  ///< |fine - coarse| / 3 per eigenvalue
    int grid_n = 0;
};

/// k lowest eigenvalues by Sturm bisection with Richardson extrapolation
/// over grid_n and 2 grid_n.  Throws solver_error on a failed bracket.
EigenResult lowest_eigenvalues(const SLProblem& prob, int k);

/// Discrete eigenpairs at a single resolution (no extrapolation), for
/// orthogonality checks: vectors are columns, orthonormal under the
/// w-weighted inner product sum_i f_i g_i w_i h.
struct DiscreteEigen {
    std::vector<double> grid;
    std::vector<double> weights;  ///< w(x_i) h
    std::vector<double> values;   ///< physical scale
    Eigen::MatrixXd vectors;
};

DiscreteEigen eigenpairs(const SLProblem& prob, int k);

struct SpectrumComparisonRow {
    std::string slice;
    int n = 0;
    double analytic = 0;
    double oracle = 0;
    double rel_error = 0;
};

struct SpectrumComparison {
    std::vector<SpectrumComparisonRow> rows;
    double max_rel_error = 0;
};

/// Compare the analytic spectrum of a model against the oracle, slice by
/// slice: alpha/beta slices for the alpha-beta models, the nested
/// theta-then-r assembly for the polar model (the r equation consumes the
/// oracle's own e_theta).  k lowest levels per slice.
SpectrumComparison validate_spectrum(PotentialKind model, int m, int l, int k,
                                     const PhysicalParams& params);

} // namespace affine2d

#endif
