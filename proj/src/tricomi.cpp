#include "bizeta/tricomi.hpp"

#include <cmath>
#include <limits>

namespace bizeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Ray angle giving kernel decay: 0 in the right half-plane, -sign(Im x)
// pi/2 on the imaginary axis, and a rotation keeping |phi + arg x| < pi/2
// (with margin) in the left half-plane.
double default_phi(cplx x) {
    const double ax = std::arg(x);
    if (std::abs(x.real()) <= 1e-12 * std::abs(x))
        return x.imag() >= 0.0 ? -kPi / 2.0 : kPi / 2.0;
    if (x.real() > 0.0) return 0.0;
    return ax > 0.0 ? -(ax - 0.45) : -(ax + 0.45);
}

double resolve_phi(double user_phi, cplx x) {
    if (x == cplx(0.0, 0.0))
        throw OutOfDomain("tricomi: x must be nonzero");
    const double phi =
        (user_phi == PsiArgs::kAutoPhi) ? default_phi(x) : user_phi;
    if (!(phi > -kPi && phi < kPi))
        throw OutOfDomain("tricomi: ray angle must lie in (-pi, pi)");
    if (!(std::abs(phi + std::arg(x)) < kPi / 2.0))
        throw OutOfDomain("tricomi: ray violates |phi + arg x| < pi/2");
    return phi;
}

}  // namespace

PsiResult psi_integral(const PsiArgs& args, const EvalPolicy& policy) {
    const cplx a = args.a, b = args.b, x = args.x;
    if (!(a.real() > 0.0))
        throw OutOfDomain("psi_integral: requires Re a > 0");
    const double phi = resolve_phi(args.phi, x);
    RayPath path;
    path.angle_phi = phi;
    path.scale = std::min(1.0, 4.0 / std::abs(x));
    EndpointHints hints;
    hints.sing_alpha = std::min(a.real(), 1.0);
    auto f = [a, b, x](cplx y) -> cplx {
        return std::exp(-x * y) * pow_principal(y, a - 1.0) *
               pow_principal(y + 1.0, b - a - 1.0);
    };
    const QuadResult q = integrate_ray(f, path, policy, hints);
    const cplx rg = recip_gamma(a);
    PsiResult out;
    out.value = rg * q.value;
    out.err = std::abs(rg) * q.err;
    out.rep = PsiResult::Rep::integral;
    return out;
}

cplx psi_asymptotic_sum(cplx a, cplx b, cplx x, int M) {
    cplx term = pow_principal(x, -a);
    cplx sum{0.0, 0.0};
    for (int j = 0; j < M; ++j) {
        sum += term;
        term *= -(a - b + 1.0 + cplx(j, 0.0)) * (a + cplx(j, 0.0)) /
                ((j + 1.0) * x);
    }
    return sum;
}

bool psi_asymptotic_certified(cplx a, cplx b, cplx x, double tol_rel,
                              PsiResult& out) {
    if (x == cplx(0.0, 0.0)) return false;
    cplx term = pow_principal(x, -a);
    const double scale0 = std::abs(term);
    cplx sum{0.0, 0.0};
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 64; ++j) {
        const double m = std::abs(term);
        if (m > prev) return false;  // divergent part reached first
        sum += term;
        if (m <= tol_rel * std::max(std::abs(sum), scale0)) {
            out.value = sum;
            out.err = 2.0 * m;
            out.rep = PsiResult::Rep::asymptotic;
            return true;
        }
        prev = m;
        term *= -(a - b + 1.0 + cplx(j, 0.0)) * (a + cplx(j, 0.0)) /
                ((j + 1.0) * x);
    }
    return false;
}

QuadResult rho_m(cplx a, cplx c, cplx x, int M, double phi,
                 const EvalPolicy& policy) {
    if (M < 1) throw OutOfDomain("rho_m: requires M >= 1");
    if (!(a.real() + M > 0.0))
        throw OutOfDomain("rho_m: requires Re a + M > 0");
    const double ph = resolve_phi(phi, x);
    double mfact = 1.0;
    for (int j = 2; j < M; ++j) mfact *= j;  // (M-1)!
    EvalPolicy inner_policy = policy;
    inner_policy.tol_abs = policy.tol_abs / 16.0;
    inner_policy.tol_rel = policy.tol_rel / 16.0;
    inner_policy.quad_max_depth = std::max(policy.quad_max_depth / 4, 64);
    const cplx expo = c - a - cplx(M + 1, 0.0);
    auto kernel = [&](cplx y) -> cplx {
        auto g = [&](double tau) -> cplx {
            return std::pow(1.0 - tau, M - 1) *
                   pow_principal(1.0 + tau * y, expo);
        };
        return integrate_finite(g, 0.0, 1.0, inner_policy).value / mfact;
    };
    RayPath path;
    path.angle_phi = ph;
    path.scale = std::min(1.0, 4.0 / std::abs(x));
    EndpointHints hints;
    hints.sing_alpha = std::min(a.real() + M, 1.0);
    auto f = [&](cplx y) -> cplx {
        return std::exp(-x * y) * pow_principal(y, a + cplx(M, 0.0) - 1.0) *
               kernel(y);
    };
    QuadResult q = integrate_ray(f, path, policy, hints);
    const cplx pref =
        (M % 2 == 0 ? 1.0 : -1.0) * pochhammer(a - c + 1.0, M) * recip_gamma(a);
    q.value *= pref;
    q.err *= std::abs(pref);
    return q;
}

PsiResult psi_auto(cplx a, cplx b, cplx x, const EvalPolicy& policy) {
    if (x == cplx(0.0, 0.0))
        throw OutOfDomain("psi_auto: x must be nonzero");
    if (a.real() > 0.05) {
        PsiArgs args;
        args.a = a;
        args.b = b;
        args.x = x;
        return psi_integral(args, policy);
    }
    if ((a - b + 1.0).real() > 0.05) {
        // Psi(a,b;x) = x^{1-b} Psi(a-b+1, 2-b; x)
        PsiArgs args;
        args.a = a - b + 1.0;
        args.b = 2.0 - b;
        args.x = x;
        const PsiResult inner = psi_integral(args, policy);
        const cplx fac = pow_principal(x, 1.0 - b);
        PsiResult out;
        out.value = fac * inner.value;
        out.err = std::abs(fac) * inner.err;
        out.rep = PsiResult::Rep::transformed;
        return out;
    }
    // Order chosen so the remainder integral converges: Re a + M > 0.
    int M = std::max(1, static_cast<int>(std::floor(1.0 - a.real())));
    if (policy.asymp_order_M > 0) M = std::max(M, policy.asymp_order_M);
    const QuadResult rem = rho_m(a, b, x, M, PsiArgs::kAutoPhi, policy);
    PsiResult out;
    out.value = psi_asymptotic_sum(a, b, x, M) + rem.value;
    out.err = rem.err;
    out.rep = PsiResult::Rep::asymptotic;
    return out;
}

PsiResult psi_for_sum(cplx a, cplx b, cplx x, const EvalPolicy& policy) {
    PsiResult out;
    if (psi_asymptotic_certified(a, b, x, 0.5 * policy.tol_rel, out))
        return out;
    return psi_auto(a, b, x, policy);
}

}  // namespace bizeta
