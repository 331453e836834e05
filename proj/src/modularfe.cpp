// Modularity-dependent layer: H^{pm}_{2,N} in its direct-series and
// Mellin-Barnes representations, the Mellin lemma comparison, the second
// functional equation, the L1* functional equation, and the trivial-zero
// scan along s2 = -l.
//
// Direct H truncation: the (m,n) plane is split at n = Nm.  Below the split
// Psi(A,s2;x) is in its small-argument regime |Psi| <~ |Gamma(s2-1)/Gamma(A)|
// |x|^{1-s2}, above it in the large-argument regime |Psi| <~ |x|^{-A}.  The
// two regimes give the m-tail bound
//   sum_{m>M} <= c_small M^{-sigma1} + c_large M^{mu+2-sigmaA},
// both certified with explicit constants; the per-m n-cutoff uses the
// large-regime bound, which is m-independent after substitution.
// Continuation beyond the two representation regions is refused rather
// than path-deformed.

#include "bizeta/modularfe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bizeta/errors.hpp"
#include "bizeta/quadrature.hpp"
#include "bizeta/tricomi.hpp"
#include "bizeta/zetas.hpp"

namespace bizeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

RegionTag make_tag(Region r, std::vector<std::string> cs) {
    RegionTag t;
    t.label = r;
    t.constraints = std::move(cs);
    return t;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void require_even_weight(const FrickePair& pair) {
    int k = pair.f.weight();
    if (k <= 0 || k % 2 != 0)
        throw OutOfDomain("modular layer requires even integer weight, got " +
                          std::to_string(k));
}

// |a~(n)| <= C n^mu with mu = (kappa-1)/2 + 0.01.
struct TildeGrowth {
    double C = 1.0;
    double mu = 0.0;
};

TildeGrowth tilde_growth(const CoeffSeq& ft) {
    TildeGrowth g;
    g.mu = (ft.kappa() - 1.0) / 2.0 + 0.01;
    double m = 0.0;
    long long probe = 300;
    long long sup = ft.finite_support();
    if (sup > 0) probe = std::min(probe, sup);
    for (long long n = 1; n <= probe; ++n)
        m = std::max(m, std::abs(ft.a(n)) * std::pow((double)n, -g.mu));
    g.C = 3.0 * std::max(m, 1e-300);
    return g;
}

Eval h2n_direct(const FrickePair& pair, int sign, cplx s1, cplx s2,
                const EvalPolicy& policy) {
    const double kappa = pair.f.kappa();
    const double N = (double)pair.f.level();
    const double sig1 = s1.real(), sig2 = s2.real();
    if (!(sig1 > 1e-9))
        throw OutOfDomain("h2n direct: requires Re s1 > 0, got " + num(sig1));
    if (!(sig2 > (kappa + 3.0) / 2.0 + 1e-9))
        throw OutOfDomain("h2n direct: requires Re s2 > (kappa+3)/2 = " +
                          num((kappa + 3.0) / 2.0) + ", got " + num(sig2));

    const cplx A = s1 + s2;
    const double sigA = A.real();
    const CoeffSeq& ft = pair.f_tilde;
    TildeGrowth g = tilde_growth(ft);
    const double tol = policy.tol_abs;

    double d_small = sig2 - g.mu - 2.0;   // n-sum margin, small-x regime
    double d_large = sigA - g.mu - 2.0;   // (m,n)-sum margin, large-x regime
    if (d_small <= 0.02 || d_large <= 0.02)
        throw OutOfDomain("h2n direct: no certified cutoff margin at these "
                          "arguments");

    double ksm = 6.0 * std::abs(gamma(s2 - 1.0) * recip_gamma(A)) *
                 std::exp(kPi * std::abs(s2.imag()) / 2.0);
    double klg = 2.0 * std::exp(kPi * std::abs(A.imag()) / 2.0);
    double c_small = ksm * g.C * std::pow(kTwoPi / N, 1.0 - sig2) *
                     (1.0 + 1.0 / d_small) / sig1;
    double c_large = klg * g.C * std::pow(kTwoPi / N, -sigA) *
                     std::pow(N, g.mu + 2.0 - sigA) / (d_large * N);

    long long mstar = 4;
    while (c_small * std::pow((double)mstar, -sig1) +
               c_large * std::pow((double)mstar, g.mu + 2.0 - sigA) >
           0.25 * tol) {
        mstar *= 2;
        if (mstar > 4000000)
            throw OutOfDomain("h2n direct: certified m-cutoff infeasible");
    }
    double m_tail = c_small * std::pow((double)mstar, -sig1) +
                    c_large * std::pow((double)mstar, g.mu + 2.0 - sigA);

    const double z13 = 3.93;  // zeta(1.3), per-m error-budget split
    double n_tail_pref =
        klg * g.C * std::pow(kTwoPi / N, -sigA) / (sigA - g.mu - 1.0);
    cplx acc{0.0, 0.0};
    double err = m_tail;
    for (long long m = 1; m <= mstar; ++m) {
        double tolm = 0.25 * tol * std::pow((double)m, -1.3) / z13;
        cplx mpow = pow_principal((double)m, -A);
        long long n = 1;
        while (true) {
            cplx an = ft.a(n);
            if (an != cplx(0.0, 0.0)) {
                cplx x(0.0, sign * kTwoPi * (double)n / (N * (double)m));
                PsiResult pr = psi_for_sum(A, s2, x, policy);
                acc += mpow * an * pr.value;
                err += std::abs(mpow * an) * pr.err;
            }
            double nt = n_tail_pref * std::pow((double)n, g.mu + 1.0 - sigA);
            if (n >= (long long)(2.0 * N * m) + 4 && nt < tolm) {
                err += nt;
                break;
            }
            ++n;
            if (n > 2000000)
                throw OutOfDomain("h2n direct: n-cutoff runaway");
        }
    }

    Eval e;
    e.value = acc;
    e.err = err;
    e.region = make_tag(Region::direct_series,
                        {"Re s1 = " + num(sig1) + " > 0",
                         "Re s2 = " + num(sig2) + " > " +
                             num((kappa + 3.0) / 2.0),
                         "m-cutoff = " + std::to_string(mstar)});
    return e;
}

struct MbWindow {
    double lo = 0.0, hi = 0.0;
    bool ok = false;
};

MbWindow mb_window(double kappa, double sig1, double sig2) {
    MbWindow w;
    w.lo = std::max((kappa + 1.0) / 2.0, sig2 - 1.0);
    w.hi = sig1 + sig2 - 1.0;
    w.ok = (w.lo + 0.02 < w.hi);
    return w;
}

Eval h2n_mb(const FrickePair& pair, int sign, cplx s1, cplx s2,
            const EvalPolicy& policy) {
    const double kappa = pair.f.kappa();
    const double N = (double)pair.f.level();
    const double sig1 = s1.real(), sig2 = s2.real();
    MbWindow w = mb_window(kappa, sig1, sig2);
    double c;
    if (policy.mb_abscissa_c != 0.0) {
        c = policy.mb_abscissa_c;
        if (!(w.ok && c > w.lo && c < w.hi) || !(sig2 < c + 1.0))
            throw OutOfDomain(
                "h2n mellin_barnes: abscissa c = " + num(c) +
                " violates sigma1+sigma2-1 > c > (kappa+1)/2, sigma2 < c+1");
    } else {
        if (!w.ok)
            throw OutOfDomain("h2n mellin_barnes: empty abscissa window (" +
                              num(w.lo) + ", " + num(w.hi) + ")");
        c = 0.5 * (w.lo + w.hi);
        if (!(sig2 < c + 1.0))
            throw OutOfDomain("h2n mellin_barnes: sigma2 < c+1 fails at the "
                              "midpoint abscissa c = " + num(c));
    }

    const cplx A = s1 + s2;
    // The series terms Psi(A,s2; sign*2*pi*i*n/(N m)) open on the ray
    // phi = -sign*pi/2, so the substitution y = -sign*i*eta contributes a
    // factor -sign*i.  Hence the phase is e^{pi i (1-u)/2} with overall -1
    // for sign +, and e^{pi i (u-1)/2} with overall +1 for sign -.
    const double phase_sign = (sign > 0) ? +1.0 : -1.0;
    auto integrand = [&](cplx u) -> cplx {
        cplx phase = std::exp(cplx(0.0, phase_sign * kPi / 2.0) * (1.0 - u));
        return gamma(u) * gamma(u - s2 + 1.0) * gamma(A - u) * phase *
               pow_principal(N / kTwoPi, u) * riemann_zeta(A - u) *
               l_series(pair.f_tilde, u, policy);
    };
    VLinePath path;
    path.abscissa_c = c;
    path.height_T = policy.mb_height_T;
    QuadResult q = integrate_vline(integrand, path, policy);
    cplx pref = -phase_sign * recip_gamma(A) * recip_gamma(s1 + 1.0) / kTwoPi;
    Eval e;
    e.value = pref * q.value;
    e.err = std::abs(pref) * q.err;
    e.region = make_tag(Region::mellin_barnes,
                        {"abscissa c = " + num(c) + " in (" + num(w.lo) + ", " +
                             num(w.hi) + ")",
                         "Re s2 = " + num(sig2) + " < c+1"});
    return e;
}

}  // namespace

Eval h2n(const HArgs& args, const EvalPolicy& policy) {
    require_even_weight(args.pair);
    if (args.sign != 1 && args.sign != -1)
        throw OutOfDomain("h2n: sign must be +1 or -1");
    switch (args.representation) {
        case HArgs::Rep::direct:
            return h2n_direct(args.pair, args.sign, args.s1, args.s2, policy);
        case HArgs::Rep::mellin_barnes:
            return h2n_mb(args.pair, args.sign, args.s1, args.s2, policy);
        case HArgs::Rep::auto_rep: {
            MbWindow w = mb_window(args.pair.f.kappa(), args.s1.real(),
                                   args.s2.real());
            bool mb_ok = w.ok && policy.mb_abscissa_c == 0.0 &&
                         args.s2.real() < 0.5 * (w.lo + w.hi) + 1.0;
            if (policy.mb_abscissa_c != 0.0)
                mb_ok = w.ok && policy.mb_abscissa_c > w.lo &&
                        policy.mb_abscissa_c < w.hi &&
                        args.s2.real() < policy.mb_abscissa_c + 1.0;
            if (mb_ok)
                return h2n_mb(args.pair, args.sign, args.s1, args.s2, policy);
            return h2n_direct(args.pair, args.sign, args.s1, args.s2, policy);
        }
    }
    throw OutOfDomain("h2n: unknown representation");
}

FEReport mellin_f_tilde(const FrickePair& pair, cplx s, cplx u,
                        const EvalPolicy& policy) {
    require_even_weight(pair);
    const double kappa = pair.f.kappa();
    const double N = (double)pair.f.level();
    if (!(s.real() - 1.0 > u.real() + 1e-9) ||
        !(u.real() > (kappa + 1.0) / 2.0 + 1e-9))
        throw OutOfDomain("mellin_f_tilde: requires Re s - 1 > Re u > "
                          "(kappa+1)/2");

    const CoeffSeq& ft = pair.f_tilde;
    TildeGrowth g = tilde_growth(ft);
    const double sig = s.real();

    // F~(i eta, s) = sum_m f~(i eta/(N m)) m^{-s}; once eta/(Nm) < 0.35 the
    // flipped q-series bound decays doubly fast in m and certifies the stop.
    auto f_big = [&](double eta) -> cplx {
        cplx acc{0.0, 0.0};
        for (long long m = 1; m <= 200000; ++m) {
            double y = eta / (N * (double)m);
            cplx fy = f_on_imaginary_axis(ft, y);
            acc += pow_principal((double)m, -s) * fy;
            if (y < 0.35) {
                double bnd = 2.0 * g.C * std::pow(y, -kappa) *
                             std::exp(-kTwoPi / (N * y)) *
                             std::pow(N, -kappa / 2.0) *
                             std::pow((double)m, -sig);
                if (bnd < 1e-18 * (1.0 + std::abs(acc))) break;
            }
        }
        return acc;
    };

    RayPath path;
    path.angle_phi = 0.0;
    path.scale = 2.0;
    EndpointHints hints;
    hints.sing_alpha = 1.0;
    hints.tail_power = sig - u.real();
    QuadResult lq = integrate_ray(
        [&](cplx eta) -> cplx {
            double t = eta.real();
            if (t <= 0.0) return {0.0, 0.0};
            return f_big(t) * pow_principal(t, u - 1.0);
        },
        path, policy, hints);

    cplx rhs = gamma(u) * pow_principal(N / kTwoPi, u) * riemann_zeta(s - u) *
               l_series(ft, u, policy);

    FEReport r;
    r.check = "mellin_lemma";
    r.s1 = s;
    r.s2 = u;
    r.lhs = lq.value;
    r.rhs = rhs;
    r.abs_residual = std::abs(r.lhs - r.rhs);
    r.rel_residual =
        r.abs_residual / std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
    r.lhs_region = make_tag(Region::integral_rep,
                            {"Re s - 1 = " + num(sig - 1.0) + " > Re u",
                             "Re u = " + num(u.real()) + " > " +
                                 num((kappa + 1.0) / 2.0)});
    r.rhs_region = make_tag(Region::direct_series, {"closed gamma-zeta-L form"});
    r.tolerance = 1e-6;
    r.status = (std::min(r.abs_residual, r.rel_residual) <= r.tolerance)
                   ? "pass"
                   : "fail";
    return r;
}

Eval thm2_rhs(const FrickePair& pair, cplx s1, cplx s2,
              const EvalPolicy& policy) {
    require_even_weight(pair);
    const double kappa = pair.f.kappa();
    const double N = (double)pair.f.level();
    if (near_nonpositive_integer(1.0 - s1, policy.pole_tol))
        throw PoleAt(s1, "thm2_rhs: Gamma(1-s1) pole");
    if (near_nonpositive_integer(kappa - s1 - s2 + 1.0, policy.pole_tol))
        throw PoleAt(s1 + s2, "thm2_rhs: Gamma(kappa-s1-s2+1) pole");

    Eval l1 = l1_term(pair.f, s1, s2, policy);

    HArgs ha;
    ha.pair = pair;
    ha.sign = +1;
    ha.s1 = -s1;
    ha.s2 = kappa - s2 + 1.0;
    ha.representation = HArgs::Rep::auto_rep;
    Eval hp = h2n(ha, policy);
    ha.sign = -1;
    Eval hm = h2n(ha, policy);

    cplx w = s1 + s2 - 1.0;
    cplx pref = pow_principal(kTwoPi, w) * gamma(1.0 - s1) *
                gamma(kappa - s1 - s2 + 1.0) * recip_gamma(s2) *
                std::pow(N, -kappa / 2.0);
    cplx eplus = std::exp(cplx(0.0, kPi / 2.0) * (1.0 - s1 - s2));
    cplx eminus = std::exp(cplx(0.0, kPi / 2.0) * (s1 + s2 - 1.0));
    cplx hpart = eplus * hp.value + eminus * hm.value;

    Eval e;
    e.value = l1.value + pref * hpart;
    e.err = l1.err + std::abs(pref) * ((std::abs(eplus) * hp.err) +
                                       (std::abs(eminus) * hm.err)) +
            1e-14 * std::abs(pref * hpart);
    e.region = hp.region;
    e.region.constraints.insert(
        e.region.constraints.begin(),
        "H evaluated at (" + num(-s1.real()) + ", " +
            num(kappa - s2.real() + 1.0) + ")");
    return e;
}

FEReport l1_star_fe_check(const FrickePair& pair, cplx s1, cplx s2,
                          const EvalPolicy& policy) {
    require_even_weight(pair);
    const double kappa = pair.f.kappa();
    const double N = (double)pair.f.level();
    if (near_nonpositive_integer(s1, policy.pole_tol))
        throw PoleAt(s1, "l1_star: Gamma(s1) pole");
    if (near_nonpositive_integer(1.0 - s1, policy.pole_tol))
        throw PoleAt(s1, "l1_star: Gamma(1-s1) pole");
    cplx w = s1 + s2 - 1.0;
    cplx wt = kappa - s1 - s2 + 1.0;
    if (near_nonpositive_integer(w, policy.pole_tol))
        throw PoleAt(w, "l1_star: Gamma(s1+s2-1) pole");
    if (near_nonpositive_integer(wt, policy.pole_tol))
        throw PoleAt(wt, "l1_star: Gamma(kappa-s1-s2+1) pole");

    // L1*(s1,s2;g) = (2pi)^{-s1-s2} Gamma(s1) Gamma(1-s1) Gamma(s1+s2-1)
    //                L(s1+s2-1; g).
    auto l1_star = [&](cplx a, cplx b, const CoeffSeq& seq) -> cplx {
        return pow_principal(kTwoPi, -a - b) * gamma(a) * gamma(1.0 - a) *
               gamma(a + b - 1.0) * l_series(seq, a + b - 1.0, policy);
    };
    cplx s2_t = kappa - 2.0 * s1 - s2 + 2.0;
    cplx lhs = l1_star(s1, s2_t, pair.f_tilde);
    double sgn = ((((int)std::llround(kappa) / 2) % 2) == 0) ? 1.0 : -1.0;
    cplx rhs = sgn * pow_principal(N, s1 + s2 - kappa / 2.0 - 1.0) *
               l1_star(s1, s2, pair.f);

    FEReport r;
    r.check = "l1_star_fe";
    r.s1 = s1;
    r.s2 = s2;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual =
        r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.lhs_region = make_tag(Region::direct_series,
                            {"L continued at Re w = " +
                             num(kappa - s1.real() - s2.real() + 1.0)});
    r.rhs_region = make_tag(Region::direct_series,
                            {"L continued at Re w = " + num(w.real())});
    r.tolerance = 1e-8;
    r.status = (std::min(r.abs_residual, r.rel_residual) <= r.tolerance)
                   ? "pass"
                   : "fail";
    return r;
}

std::vector<FEReport> trivial_zero_scan(const FrickePair& pair, cplx s1,
                                        int l_max, const EvalPolicy& policy) {
    require_even_weight(pair);
    if (!(s1.real() < 0.0))
        throw OutOfDomain("trivial_zero_scan: requires Re s1 < 0");
    std::vector<FEReport> out;
    if (l_max < 0) return out;
    const double kappa = pair.f.kappa();
    for (int l = 0; l <= l_max; ++l) {
        cplx s2(-(double)l, 0.0);
        Eval v0 = thm2_rhs(pair, s1, s2, policy);
        Eval vh = thm2_rhs(pair, s1, s2 + 0.5, policy);
        double scale = std::abs(vh.value);

        // Finiteness certificates: both H values and the non-gamma factor
        // of L1 at this s2.
        HArgs ha;
        ha.pair = pair;
        ha.sign = +1;
        ha.s1 = -s1;
        ha.s2 = kappa - s2 + 1.0;
        ha.representation = HArgs::Rep::auto_rep;
        Eval hp = h2n(ha, policy);
        ha.sign = -1;
        Eval hm = h2n(ha, policy);
        cplx lfac = l_series(pair.f, s1 + s2 - 1.0, policy);

        FEReport r;
        r.check = "trivial_zero";
        r.s1 = s1;
        r.s2 = s2;
        r.lhs = v0.value;
        r.rhs = cplx(0.0, 0.0);
        r.abs_residual = std::abs(v0.value);
        r.rel_residual = std::abs(v0.value) / std::max(scale, 1e-300);
        r.lhs_region = v0.region;
        r.rhs_region = make_tag(
            Region::direct_series,
            {"1/Gamma(s2) = 0 at s2 = -" + std::to_string(l),
             "direct-series region: kappa+1+l = " + num(kappa + 1.0 + l) +
                 " > " + num((kappa + 3.0) / 2.0)});
        r.tolerance = 1e-8;
        r.status = (r.rel_residual <= r.tolerance) ? "pass" : "fail";
        r.note = "local scale |L2(s1, -l+1/2)| = " + num(scale) +
                 "; certificates |H+| = " + num(std::abs(hp.value)) +
                 ", |H-| = " + num(std::abs(hm.value)) +
                 ", |L(s1-l-1)| = " + num(std::abs(lfac)) + ", all finite";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bizeta
