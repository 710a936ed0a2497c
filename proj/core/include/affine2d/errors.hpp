#ifndef AFFINE2D_ERRORS_HPP
#define AFFINE2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affine2d {

/// A point or state lies outside the admissible domain of an operation
/// (singular matrix, coordinate-singular locus, branch violation, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A (model, chart) or (model, operation) pairing that the catalog does not
/// support (e.g. constants of motion for a non-separable combination).
class unsupported_error : public std::invalid_argument {
public:
    explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative numerical routine failed to converge; the message carries
/// bracketing / residual diagnostics.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested energy lies below the bottom of an effective potential well,
/// so there is no classical region.
class no_motion_error : public domain_error {
public:
    explicit no_motion_error(const std::string& what) : domain_error(what) {}
};

} // namespace affine2d

#endif
