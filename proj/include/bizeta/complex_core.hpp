#ifndef BIZETA_COMPLEX_CORE_HPP
#define BIZETA_COMPLEX_CORE_HPP

#include <complex>
#include <string>
#include <vector>

#include "bizeta/errors.hpp"

namespace bizeta {

// ComplexVal: a complex number stored as a pair of binary64 reals.
// All branch cuts in the library follow the principal convention:
//   Log z = ln|z| + i Arg z,  Arg z in (-pi, pi],
//   z^s   = exp(s Log z)  for z != 0;  0^s = 0 only when Re s > 0.
// Every power in the artifact routes through pow_principal so that branch
// bugs are localized to one function.
using ComplexVal = std::complex<double>;
using cplx = ComplexVal;

// Precision / truncation policy threaded through every evaluator.
struct EvalPolicy {
    double tol_abs = 1e-11;        // target absolute error
    double tol_rel = 1e-11;        // target relative error
    long series_max_terms = 5'000'000;
    int asymp_order_M = 0;         // 0 = choose automatically (region-driven)
    int quad_max_depth = 2000;     // adaptive panel budget per integral
    double mb_height_T = 40.0;     // Mellin-Barnes truncation height
    double mb_abscissa_c = 0.0;    // 0 = midpoint of the admissible interval
    double pole_tol = 1e-6;        // proximity treated as "at a pole" by the
                                   // functional-equation layers
    bool valid() const {
        return tol_abs > 0 && mb_height_T > 0 &&
               (asymp_order_M == 0 || asymp_order_M >= 1);
    }
};

// Distance within which the gamma primitives themselves report PoleAt.
inline constexpr double kGammaPoleTol = 1e-12;

inline cplx log_principal(cplx z) { return std::log(z); }

// z^s with the principal branch; 0^s = 0 for Re s > 0, error otherwise.
cplx pow_principal(cplx z, cplx s);

// sin(pi z) / cos(pi z) with argument reduction so that integer (resp.
// half-integer) points give exact zeros; needed so reflection formulas
// vanish identically at trivial zeros.
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

// True when z is within tol of a non-positive integer (gamma pole set).
bool near_nonpositive_integer(cplx z, double tol);

// Gamma via the Lanczos rational approximation (g = 607/128, 15 terms) for
// Re s >= 1/2, reflection through sin_pi otherwise.  Relative error below
// ~1e-13 for |s| <= 50.  Throws PoleAt within kGammaPoleTol of 0, -1, -2, ...
cplx gamma(cplx s);

// log Gamma; principal value built from the Lanczos logarithm for
// Re s >= 1/2 and the logarithmic reflection otherwise (the imaginary part
// is not guaranteed to be the analytically continued branch far from the
// real axis; |exp(log_gamma)| always matches |gamma|).
cplx log_gamma(cplx s);

// 1/Gamma(s) as an entire function: exactly 0 at s = 0, -1, -2, ...
cplx recip_gamma(cplx s);

// Rising factorial (a)_j = a(a+1)...(a+j-1), product form, j >= 0.
cplx pochhammer(cplx a, int j);

// Upper incomplete gamma Gamma(s,x) = int_x^inf e^-t t^(s-1) dt for real
// x > 0 and complex s (entire in s).  Continued fraction for x > Re s + 1,
// series complement otherwise, with downward recurrence when the series
// path would hit a gamma pole.
cplx upper_incomplete_gamma(cplx s, double x);

}  // namespace bizeta

#endif
