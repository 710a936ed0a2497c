#ifndef AFFINE2D_QUADRATURE_HPP
#define AFFINE2D_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

namespace affine2d {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed by Newton iteration on the Legendre recurrence; cached per n.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Integrate f over [a, b] with the n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n = 128);

} // namespace affine2d

#endif
