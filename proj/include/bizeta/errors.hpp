#ifndef BIZETA_ERRORS_HPP
#define BIZETA_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace bizeta {

// Error taxonomy shared by all modules.  Every failure mode named in the
// operation contracts maps to one of these; nothing else is thrown on the
// mathematical paths.

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at (or within pole_tol of) a pole.
struct PoleAt : NumericError {
    std::complex<double> location;
    explicit PoleAt(std::complex<double> where, const std::string& what_fn = "")
        : NumericError("pole at (" + std::to_string(where.real()) + "," +
                       std::to_string(where.imag()) + ")" +
                       (what_fn.empty() ? "" : " in " + what_fn)),
          location(where) {}
};

// No representation of the requested function is valid at the given point;
// the message names the violated inequality.
struct OutOfDomain : NumericError {
    explicit OutOfDomain(const std::string& msg) : NumericError(msg) {}
};

// Adaptive integration hit its subdivision budget with the error estimate
// still above tolerance.
struct QuadratureFailure : NumericError {
    double error_estimate;
    explicit QuadratureFailure(const std::string& msg, double err = 0.0)
        : NumericError(msg), error_estimate(err) {}
};

// Tail probe along a semi-infinite ray does not shrink: the integrand is not
// (numerically) integrable at infinity.
struct NonDecaying : NumericError {
    explicit NonDecaying(const std::string& msg) : NumericError(msg) {}
};

// Vertical-line truncation: the integrand at height +-T is still above
// tolerance, so the truncated contour cannot represent the full integral.
struct TailTooFat : NumericError {
    double boundary_magnitude;
    explicit TailTooFat(const std::string& msg, double mag = 0.0)
        : NumericError(msg), boundary_magnitude(mag) {}
};

// A Fricke companion (a-tilde coefficients) is required but not available
// for the given sequence kind / level.
struct MissingTildeData : NumericError {
    explicit MissingTildeData(const std::string& msg) : NumericError(msg) {}
};

}  // namespace bizeta

#endif
