#ifndef BIZETA_DOUBLEZETA_HPP
#define BIZETA_DOUBLEZETA_HPP

#include <string>
#include <vector>

#include "bizeta/sequences.hpp"

namespace bizeta {

// Which representation of a function was used (and certified) at a point.
enum class Region {
    direct_series,
    integral_rep,
    asymp_continuation,
    mellin_barnes,
    out_of_domain,
};
const char* to_string(Region r);

struct RegionTag {
    Region label = Region::out_of_domain;
    std::vector<std::string> constraints;  // inequalities actually checked
};

// Value with error estimate and provenance tag.
struct Eval {
    cplx value{0.0, 0.0};
    double err = 0.0;
    RegionTag region;
};

// Structured residual record for one functional-equation check.
struct FEReport {
    std::string check;
    cplx s1{0.0, 0.0}, s2{0.0, 0.0};
    cplx lhs{0.0, 0.0}, rhs{0.0, 0.0};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    RegionTag lhs_region, rhs_region;
    std::string status;  // "pass" | "fail" | "skipped"
    double tolerance = 0.0;
    std::string note;
    bool pass() const { return status == "pass"; }
};

// ---- The central objects -------------------------------------------------

// L2(s1,s2;A) = sum_{m,n>=1} a(n) m^{-s1} (m+n)^{-s2} by direct summation
// with Euler-Maclaurin completion of the m-sums; valid (OutOfDomain
// otherwise) in  sigma2 > (kappa+1)/2,  sigma1+sigma2 > (kappa+3)/2.
Eval l2_direct(const CoeffSeq& seq, cplx s1, cplx s2, const EvalPolicy& policy);

// Single series sum_{m>=1} m^{-s1} (m+n)^{-s2} for one fixed n >= 1;
// valid for sigma1+sigma2 > 1.  Equals l2_direct(delta(n), ...) in the
// joint domain.
Eval l2_single_series(long long n, cplx s1, cplx s2, const EvalPolicy& policy);

// Lambda(s1,s2;A) = int_0^inf f(iy) int_0^inf (e^{2pi(x+y)}-1)^{-1}
//   x^{s1-1} y^{s2-1} dx dy;  requires sigma1 > 0, sigma2 > (kappa+1)/2,
// sigma1+sigma2 > (kappa+3)/2.  The identity
//   L2 = (2 pi)^{s1+s2} / (Gamma(s1) Gamma(s2)) * Lambda
// is what the prop-2 check verifies.
Eval lambda_integral(const CoeffSeq& seq, cplx s1, cplx s2,
                     const EvalPolicy& policy);

// L1(s1,s2;A) = Gamma(1-s1) Gamma(s1+s2-1) / Gamma(s2) * L(s1+s2-1; A).
// PoleAt for s1 in {1,2,...} or an L-series pole.  At s1+s2-1 near a
// nonpositive integer -k the gamma pole survives only when L(-k) != 0;
// when L has a zero there (cusp forms at every nonpositive integer, zeta
// at the even negative ones) the finite limit (-1)^k/k! L'(-k) is
// evaluated instead.  The 1/Gamma(s2) factor is the entire reciprocal, so
// s2 in {0,-1,...} gives an exact zero rather than an error.
Eval l1_term(const CoeffSeq& seq, cplx s1, cplx s2, const EvalPolicy& policy);

// F_pm(s1,s2;A) = sum_{l>=1} A_{s1+s2-1}(l) Psi(s2, s1+s2; pm 2 pi i l).
// Representation choice:
//   direct_series     when the Psi-series converges under the growth bound
//                     (sigma2 > growth(A_c) + 1),
//   asymp_continuation otherwise, via order-M expansion
//     sum_{j<M} (-1)^j (1-s1)_j (s2)_j / j! (pm 2 pi i)^{-s2-j}
//       zeta(s2+j) L(1-s1+j, A)
//     + sum_l A_{s1+s2-1}(l) rho_M(s2, s1+s2; pm 2 pi i l),
//   requiring an M <= 12 with sigma1 < M+1-(kappa+1)/2, sigma2 > 1-M.
// PoleAt within pole_tol of zeta / gamma / L singular hyperplanes.
Eval f_pm(const CoeffSeq& seq, int sign, cplx s1, cplx s2,
          const EvalPolicy& policy);

// F_pm forced through the direct Psi-series regardless of what f_pm's
// automatic dispatch would pick; OutOfDomain when no certified cutoff
// exists at the requested tolerance.  Intended for cross-checking the
// two representations on their overlap.
Eval f_pm_direct(const CoeffSeq& seq, int sign, cplx s1, cplx s2,
                 const EvalPolicy& policy);

// Right-hand side of the first functional equation:
//   L1(s1,s2;A) + Gamma(1-s1) { F_+(1-s2,1-s1;A) + F_-(1-s2,1-s1;A) }.
Eval thm1_rhs(const CoeffSeq& seq, cplx s1, cplx s2, const EvalPolicy& policy);

// J2(s1,s2;A) = (2 pi)^{s1+s2} / (Gamma(s1) Gamma(s2)) *
//   int int f(iy) h(x+y) x^{s1-1} y^{s2-1} dx dy,
// h(z) = 1/(e^{2 pi z} - 1) - 1/(2 pi z)  (removable singularity at 0,
// evaluated by its Laurent series near 0).  Valid in 0 < sigma1 < 1,
// sigma2 > (kappa+1)/2; satisfies L2 = J2 + L1 there.
Eval j2_term(const CoeffSeq& seq, cplx s1, cplx s2, const EvalPolicy& policy);

// Kernel h above, exposed for series-oracle tests.
cplx h_kernel(cplx z);

}  // namespace bizeta

#endif
