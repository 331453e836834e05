#ifndef BIZETA_TRICOMI_HPP
#define BIZETA_TRICOMI_HPP

#include "bizeta/complex_core.hpp"
#include "bizeta/quadrature.hpp"

namespace bizeta {

// Arguments of the Tricomi confluent hypergeometric function Psi(a,b;x),
// defined here by the ray integral
//   Psi(a,b;x) = (1/Gamma(a)) int_0^{e^{i phi} inf} e^{-xy} y^{a-1}
//                (y+1)^{b-a-1} dy,
// valid for Re a > 0, -pi < phi < pi, |phi + arg x| < pi/2.
// phi = NaN selects the default ray: 0 for Re x > 0 off the imaginary
// axis, -sign(Im x) * pi/2 when x is on (or near) the imaginary axis.
struct PsiArgs {
    cplx a;
    cplx b;
    cplx x;
    double phi = kAutoPhi;
    static constexpr double kAutoPhi = -1024.0;  // sentinel: pick default ray
};

// Result of a Tricomi evaluation: value, error estimate, and which
// representation produced it.
struct PsiResult {
    cplx value;
    double err = 0.0;
    enum class Rep { integral, transformed, asymptotic } rep = Rep::integral;
};

// Direct ray-integral representation.  Requires Re a > 0 and an admissible
// ray, else OutOfDomain.
PsiResult psi_integral(const PsiArgs& args, const EvalPolicy& policy);

// Dispatching evaluator.  Order of attempts:
//   1. integral representation            (Re a > 0)
//   2. transformed representation         (Re(a-b+1) > 0), via
//      Psi(a,b;x) = x^{1-b} Psi(a-b+1, 2-b; x)
//   3. asymptotic sum of order M plus the rho_M remainder integral, when
//      the remainder's prefactor domain Re(a) ... applies through the
//      transformed composition; the remainder is evaluated, not bounded.
// OutOfDomain when no representation is certified.
PsiResult psi_auto(cplx a, cplx b, cplx x, const EvalPolicy& policy);

// Remainder term of the asymptotic expansion,
//   rho_M(a,c;x) = ((-1)^M (a-c+1)_M / Gamma(a)) int_0^{e^{i phi} inf}
//       e^{-xy} y^{a+M-1} [ int_0^1 ((1-tau)^{M-1}/(M-1)!)
//       (1 + tau y)^{c-a-M-1} dtau ] dy,
// evaluated by iterated quadrature.  Requires Re a > 0, M >= 1, admissible
// ray (phi = PsiArgs::kAutoPhi picks the default).
QuadResult rho_m(cplx a, cplx c, cplx x, int M, double phi,
                 const EvalPolicy& policy);

// Truncated asymptotic sum  sum_{j<M} (-1)^j (a-b+1)_j (a)_j / j! x^{-a-j}
// (no remainder); exposed for reconstruction tests.
cplx psi_asymptotic_sum(cplx a, cplx b, cplx x, int M);

// Asymptotic evaluation with a self-certifying error estimate: sums terms
// while they shrink, stops at the smallest, and reports twice the first
// omitted term as the error.  Returns false when the series cannot reach
// requested tolerance at this |x| (caller falls back to quadrature).
bool psi_asymptotic_certified(cplx a, cplx b, cplx x, double tol_rel,
                              PsiResult& out);

// Shared helper for the large summation loops (f_pm direct tails, h2n):
// asymptotic branch when certified at tol, integral representation
// otherwise.
PsiResult psi_for_sum(cplx a, cplx b, cplx x, const EvalPolicy& policy);

}  // namespace bizeta

#endif
