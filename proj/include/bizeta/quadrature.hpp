#ifndef BIZETA_QUADRATURE_HPP
#define BIZETA_QUADRATURE_HPP

#include <functional>

#include "bizeta/complex_core.hpp"

namespace bizeta {

// Semi-infinite ray y = scale * e^{i phi} t, t in [0, inf).
struct RayPath {
    double angle_phi = 0.0;   // in (-pi, pi)
    double scale = 1.0;       // > 0
};

// Vertical segment c - iT -> c + iT.
struct VLinePath {
    double abscissa_c = 0.0;
    double height_T = 40.0;
};

// Integration result: value plus a conservative absolute error estimate.
struct QuadResult {
    cplx value{0.0, 0.0};
    double err = 0.0;
};

using Integrand1 = std::function<cplx(double)>;
using ComplexIntegrand = std::function<cplx(cplx)>;
using Integrand2 = std::function<cplx(double, double)>;

// Endpoint behaviour hints for integrands with algebraic endpoint structure.
//  sing_alpha:  integrand ~ t^(sing_alpha-1) as t -> 0+ ; values in (0,1)
//               trigger the substitution t = v^(1/sing_alpha) on the first
//               panel (1.0 = no singularity).
//  tail_power:  0 = exponential decay at infinity; p > 1 means the integrand
//               decays only like t^(-p), which after inversion t = 1/r gives
//               an r^(p-2) endpoint handled by the same substitution.
struct EndpointHints {
    double sing_alpha = 1.0;
    double tail_power = 0.0;
};

// Adaptive Gauss-Kronrod (7/15) on a finite real interval.  Globally
// adaptive: the worst panel is bisected until the summed error estimate
// meets max(tol_abs, tol_rel * |value|) or the panel budget is exhausted
// (then QuadratureFailure).  Summation order of panel contributions is
// fixed (sorted by left endpoint) for reproducibility.
QuadResult integrate_finite(const Integrand1& f, double a, double b,
                            const EvalPolicy& policy,
                            const EndpointHints& hints = {});

// Integral over the ray path of f(y) dy, y = scale e^{i phi} t.  The caller
// asserts decay along the ray; a tail probe (t |f| at geometrically spaced
// t) raises NonDecaying when the products fail to shrink.  Internally the
// ray is split at t = scale into [0, scale] and the inverted tail
// [scale, inf) -> (0, 1].
QuadResult integrate_ray(const ComplexIntegrand& f, const RayPath& path,
                         const EvalPolicy& policy,
                         const EndpointHints& hints = {});

// Iterated double integral int_0^inf int_0^inf f(x, y) dx dy (inner in x).
// inner_hints/outer_hints describe the x- and y-endpoint structure.
QuadResult integrate_2d_iterated(const Integrand2& f, const EvalPolicy& policy,
                                 const EndpointHints& inner_hints = {},
                                 const EndpointHints& outer_hints = {});

// Truncated vertical-line integral int_{c-iT}^{c+iT} f(u) du.  The
// truncation tail is estimated from the boundary samples under the
// |Gamma(c+it)| ~ e^{-pi|t|/2} decay model and added to the error bound;
// boundary samples above tol_abs raise TailTooFat.
QuadResult integrate_vline(const ComplexIntegrand& f, const VLinePath& path,
                           const EvalPolicy& policy);

}  // namespace bizeta

#endif
