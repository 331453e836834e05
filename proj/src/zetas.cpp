#include "bizeta/zetas.hpp"

#include <cmath>
#include <vector>

namespace bizeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// B_{2k} / (2k)! for k = 1..13.  Entry 13 only feeds the remainder bound.
constexpr double kBernFact[14] = {
    0.0,
    8.3333333333333333e-02,
    -1.3888888888888889e-03,
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
};
constexpr int kBernK = 12;

// Euler-Maclaurin tail for sum_{n>=0} (n+alpha)^{-s}, head length N:
//   head + (N+alpha)^{1-s}/(s-1) + (N+alpha)^{-s}/2
//        + sum_{k<=K} B_{2k}/(2k)! (s)_{2k-1} (N+alpha)^{-s-2k+1}.
// The remainder after K terms is bounded by the first omitted correction
// times |s+2K+1|/(sigma+2K+1); N is doubled from 30 until that bound is
// negligible.  Direct summation is only numerically sane for sigma >= 0
// (growing head terms cancel against a small value otherwise); callers
// reflect first when sigma < 0.
cplx hurwitz_em(cplx s, double alpha) {
    const double sigma = s.real();
    int N = 30;
    for (; N < 480; N *= 2) {
        const double base = N + alpha;
        double p = 1.0;
        for (int j = 0; j <= 2 * kBernK; ++j) p *= std::abs(s + cplx(j, 0.0));
        const double fudge =
            std::abs(s + cplx(2 * kBernK + 1, 0.0)) / (sigma + 2 * kBernK + 1);
        const double bound = std::abs(kBernFact[kBernK + 1]) * p *
                             std::pow(base, -sigma - 2 * kBernK - 1) * fudge;
        if (bound <= 5e-14) break;
    }
    cplx head{0.0, 0.0};
    for (int n = N - 1; n >= 0; --n)
        head += pow_principal(cplx(n + alpha, 0.0), -s);
    const cplx base{N + alpha, 0.0};
    cplx tail = pow_principal(base, 1.0 - s) / (s - 1.0) +
                0.5 * pow_principal(base, -s);
    const cplx base_inv_sq = pow_principal(base, cplx(-2.0, 0.0));
    cplx poch = s;                                 // (s)_{2k-1}
    cplx scale = pow_principal(base, -s - 1.0);    // (N+alpha)^{-s-2k+1}
    for (int k = 1; k <= kBernK; ++k) {
        tail += kBernFact[k] * poch * scale;
        poch *= (s + cplx(2 * k - 1, 0.0)) * (s + cplx(2 * k, 0.0));
        scale *= base_inv_sq;
    }
    return head + tail;
}

// Nearest rational p/q with q <= max_q via the continued fraction of x;
// returns false when no convergent lands within tol.
bool nearest_rational(double x, long max_q, double tol, long& p_out,
                      long& q_out) {
    long p0 = 1, q0 = 0;  // convergents p_{-1}/q_{-1}, p_0/q_0
    long p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / q1) <= tol) {
            p_out = p1;
            q_out = q1;
            return true;
        }
        if (frac == 0.0) break;
        const double inv = 1.0 / frac;
        const double a = std::floor(inv);
        if (a > 4e18 / std::max<long>(q1, 1)) break;
        const long p2 = static_cast<long>(a) * p1 + p0;
        const long q2 = static_cast<long>(a) * q1 + q0;
        if (q2 > max_q) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - a;
    }
    return false;
}

// Oscillatory tail sum_{m>=0} (n0+1+m)^{-s} z^m accelerated by the Euler
// transformation  sum c_m z^m = sum_k (Delta^k c)_0 z^k / (1-z)^{k+1};
// the effective ratio |z/(1-z)| = 1/(2 sin(pi beta)) is < 1 for
// beta in (1/6, 5/6).
cplx euler_tail(cplx s, double beta, int n0) {
    constexpr int kMax = 400;
    const cplx z = std::polar(1.0, 2.0 * kPi * beta);
    std::vector<cplx> row(kMax + 1);
    for (int m = 0; m <= kMax; ++m)
        row[m] = pow_principal(cplx(n0 + 1 + m, 0.0), -s);
    const cplx w = z / (1.0 - z);
    cplx factor = 1.0 / (1.0 - z);
    cplx sum{0.0, 0.0};
    int small_streak = 0;
    for (int k = 0; k <= kMax; ++k) {
        const cplx term = row[0] * factor;
        sum += term;
        if (std::abs(term) <= 1e-13 * (1.0 + std::abs(sum))) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
        for (int m = 0; m < kMax - k; ++m) row[m] = row[m + 1] - row[m];
        factor *= w;
    }
    throw OutOfDomain("lerch_phi: euler transformation did not converge");
}

}  // namespace

cplx riemann_zeta(cplx s) {
    if (std::abs(s - cplx(1.0, 0.0)) < kGammaPoleTol)
        throw PoleAt(s, "riemann_zeta");
    if (s.real() >= 0.0) return hurwitz_em(s, 1.0);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s); the reduced
    // sine makes the trivial zeros exact.
    const cplx chi = pow_principal(cplx(2.0, 0.0), s) *
                     pow_principal(cplx(kPi, 0.0), s - 1.0) *
                     sin_pi(0.5 * s) * gamma(1.0 - s);
    return chi * hurwitz_em(1.0 - s, 1.0);
}

cplx hurwitz_zeta(cplx s, double alpha) {
    if (!(alpha > 0.0))
        throw OutOfDomain("hurwitz_zeta: requires alpha > 0");
    if (std::abs(s - cplx(1.0, 0.0)) < kGammaPoleTol)
        throw PoleAt(s, "hurwitz_zeta");
    if (s.real() >= 0.0) return hurwitz_em(s, alpha);
    // Reduce the parameter into (0,1]:
    //   zeta(s,alpha) = zeta(s,alpha-m) - sum_{j<m} (alpha-m+j)^{-s}.
    if (alpha > 1.0) {
        const double m = std::ceil(alpha) - 1.0;
        const double ab = alpha - m;  // in (0,1]
        cplx head{0.0, 0.0};
        for (double j = 0.0; j < m; j += 1.0)
            head += pow_principal(cplx(ab + j, 0.0), -s);
        return hurwitz_zeta(s, ab) - head;
    }
    if (alpha == 1.0) return riemann_zeta(s);
    // Continuation to sigma < 0 through the expansion in exponential sums:
    //   zeta(s,a) = Gamma(1-s)/(i (2pi)^{1-s})
    //               { e^{pi i s/2} phi(1-s,a) - e^{-pi i s/2} phi(1-s,-a) }.
    const cplx sp = 1.0 - s;
    const cplx pref = gamma(1.0 - s) /
                      (cplx(0.0, 1.0) *
                       pow_principal(cplx(2.0 * kPi, 0.0), 1.0 - s));
    const cplx rot = std::exp(cplx(0.0, kPi / 2.0) * s);
    return pref * (rot * lerch_phi(sp, alpha) -
                   (1.0 / rot) * lerch_phi(sp, -alpha));
}

cplx lerch_phi(cplx s, double alpha) {
    const double beta = alpha - std::floor(alpha);
    const double sigma = s.real();
    if (beta == 0.0 || std::abs(beta - std::round(beta)) < 1e-12) {
        if (sigma <= 1.0)
            throw OutOfDomain(
                "lerch_phi: integer alpha needs Re s > 1 (zeta boundary)");
        return riemann_zeta(s);
    }
    if (beta > 1.0 / 6.0 && beta < 5.0 / 6.0 && sigma > 0.0) {
        const int n0 = 60 + static_cast<int>(std::ceil(std::abs(s)));
        const cplx z = std::polar(1.0, 2.0 * kPi * beta);
        cplx head{0.0, 0.0};
        cplx zn{1.0, 0.0};
        for (int n = 1; n <= n0; ++n) {
            zn *= z;
            head += zn * pow_principal(cplx(n, 0.0), -s);
        }
        return head + (zn * z) * euler_tail(s, beta, n0);
    }
    long p = 0, q = 0;
    if (sigma > 1.0 && nearest_rational(beta, 1024, 1e-12, p, q)) {
        // phi(s, p/q) = q^{-s} sum_{r=1}^{q} e^{2 pi i r p / q} zeta(s, r/q);
        // the phases use exact integer reduction of r p mod q.
        cplx sum{0.0, 0.0};
        for (long r = 1; r <= q; ++r) {
            const long phase = (r * p) % q;
            sum += std::polar(1.0, 2.0 * kPi * phase / q) *
                   hurwitz_zeta(s, static_cast<double>(r) / q);
        }
        return pow_principal(cplx(q, 0.0), -s) * sum;
    }
    if (sigma >= 2.5) {
        const double tol = 1e-10;
        double nd = std::pow(tol * (sigma - 1.0), -1.0 / (sigma - 1.0));
        long N = static_cast<long>(std::ceil(nd)) + 1;
        if (N > 5'000'000)
            throw OutOfDomain("lerch_phi: direct tail bound needs too many terms");
        cplx sum{0.0, 0.0};
        for (long n = N; n >= 1; --n)
            sum += std::polar(1.0, 2.0 * kPi * beta * n) *
                   pow_principal(cplx(n, 0.0), -s);
        return sum;
    }
    throw OutOfDomain("lerch_phi: no supported representation at this (s, alpha)");
}

cplx divisor_sigma(cplx c, long long k) {
    if (k <= 0) throw OutOfDomain("divisor_sigma: requires k >= 1");
    cplx sum{0.0, 0.0};
    for (long long d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        sum += pow_principal(cplx(d, 0.0), c);
        const long long e = k / d;
        if (e != d) sum += pow_principal(cplx(e, 0.0), c);
    }
    return sum;
}

}  // namespace bizeta
