#ifndef BIZETA_MODULARFE_HPP
#define BIZETA_MODULARFE_HPP

#include "bizeta/doublezeta.hpp"
#include "bizeta/sequences.hpp"

namespace bizeta {

// Arguments of H^{pm}_{2,N}(s1,s2; f~) = sum_{m,n>=1} m^{-s1-s2} a~(n)
//   Psi(s1+s2, s2; pm 2 pi i n / (N m)).
// representation:
//   direct        requires sigma1 > 0 and sigma2 > (kappa+3)/2
//   mellin_barnes requires an abscissa c with
//                 sigma1+sigma2-1 > c > (kappa+1)/2  and  sigma2 < c+1
//   auto_rep      mellin_barnes when admissible, else direct
struct HArgs {
    enum class Rep { direct, mellin_barnes, auto_rep };
    FrickePair pair;
    int sign = +1;  // +1 or -1
    cplx s1, s2;
    Rep representation = Rep::auto_rep;
};

// Evaluate H in the representation requested.  The Mellin-Barnes form is
//   -/+ 1/(2 pi Gamma(s1+s2) Gamma(s1+1)) int_(c) Gamma(u) Gamma(u-s2+1)
//     Gamma(s1+s2-u) e^{pm pi i (1-u)/2} (N/2pi)^u zeta(s1+s2-u)
//     L(u, f~) du,
// with prefactor -1 and phase e^{pi i(1-u)/2} for sign +, prefactor +1 and
// phase e^{pi i(u-1)/2} for sign - (the ray substitution y = -/+ i eta
// contributes the opposite factors -/+ i for the two signs).
// Continuation beyond the two regions is refused (OutOfDomain).
Eval h2n(const HArgs& args, const EvalPolicy& policy);

// Mellin lemma check: compares  int_0^inf F~(i eta, s) eta^{u-1} d eta
// (quadrature; F~(tau,s) = sum_m f~(tau/(Nm)) m^{-s}) against
// Gamma(u) (N/2pi)^u zeta(s-u) L(u, f~), valid for
// Re s - 1 > Re u > (kappa+1)/2 (OutOfDomain otherwise).
FEReport mellin_f_tilde(const FrickePair& pair, cplx s, cplx u,
                        const EvalPolicy& policy);

// Right-hand side of the second functional equation:
//   L1(s1,s2;f) + (2 pi)^{s1+s2-1} Gamma(1-s1) Gamma(kappa-s1-s2+1)
//     / Gamma(s2) * N^{-kappa/2} * { e^{pi i(1-s1-s2)/2} H^+(-s1,kappa-s2+1)
//       + e^{pi i(s1+s2-1)/2} H^-(-s1,kappa-s2+1) }.
// 1/Gamma(s2) is the entire reciprocal: s2 = -l gives the trivial zeros.
// PoleAt when kappa-s1-s2+1 (or 1-s1, or the L1 factors) hits a pole.
Eval thm2_rhs(const FrickePair& pair, cplx s1, cplx s2,
              const EvalPolicy& policy);

// Functional equation of L1* = (2 pi)^{-s1-s2} Gamma(s1) Gamma(s2) L1:
//   L1*(s1, kappa-2 s1-s2+2; f~) = (-1)^{kappa/2} N^{s1+s2-kappa/2-1}
//     L1*(s1, s2; f).
// Returns the residual report; PoleAt on gamma poles.
FEReport l1_star_fe_check(const FrickePair& pair, cplx s1, cplx s2,
                          const EvalPolicy& policy);

// Trivial-zero scan: for l = 0..l_max evaluates the continued
// L2(s1, -l; f) via thm2_rhs (the 1/Gamma(s2) factor forces the zero) and
// reports |value| against the local scale |L2(s1, -l + 1/2; f)|, plus the
// finiteness certificates for the H^{pm} values and the non-gamma factors.
std::vector<FEReport> trivial_zero_scan(const FrickePair& pair, cplx s1,
                                        int l_max, const EvalPolicy& policy);

}  // namespace bizeta

#endif
