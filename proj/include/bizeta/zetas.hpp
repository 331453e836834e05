#ifndef BIZETA_ZETAS_HPP
#define BIZETA_ZETAS_HPP

#include "bizeta/complex_core.hpp"

namespace bizeta {

// Riemann zeta, meromorphically continued by Euler-Maclaurin summation
// (Bernoulli corrections through B_26; the head length adapts upward from
// 30 until the first omitted correction is negligible).  For Re s < 0,
// where the head terms cancel catastrophically, one reflection step is
// applied and the right-hand side evaluated by the same machinery.
// Absolute error <= 1e-12 for |s| <= 50.  Throws PoleAt(1).
cplx riemann_zeta(cplx s);

// Hurwitz zeta  zeta(s, alpha) = sum_{n>=0} (n+alpha)^{-s},  alpha > 0,
// same Euler-Maclaurin continuation; error <= 1e-11.  Throws PoleAt(1).
cplx hurwitz_zeta(cplx s, double alpha);

// Lerch zeta  phi(s, alpha) = sum_{n>=1} e^{2 pi i n alpha} n^{-s}.
// Supported domains (outside them: OutOfDomain):
//   - alpha integer: Re s > 1 (reduces to riemann_zeta);
//   - frac(alpha) in (1/6, 5/6): Re s > 0 via head summation plus Euler
//     transformation of the oscillatory tail (the transform ratio
//     |z/(1-z)| = 1/(2 sin(pi alpha)) is < 1 exactly on that window);
//   - alpha within 1e-12 of a rational p/q, q <= 1024: Re s > 1 via the
//     q-term Hurwitz decomposition;
//   - any alpha: Re s >= 2.5 by direct summation with tail bound.
// Error <= 1e-9 in the supported region.
cplx lerch_phi(cplx s, double alpha);

// sigma_c(k) = sum_{0<d|k} d^c, exact finite sum over divisors.
cplx divisor_sigma(cplx c, long long k);

}  // namespace bizeta

#endif
