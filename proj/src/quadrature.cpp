#include "bizeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace bizeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss-Kronrod 7-15 nodes and weights on [-1,1].  The 7 Gauss nodes are
// the odd-index Kronrod nodes plus the centre.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752632851664,
    0.94910791234275852452618968404785126240,
    0.86486442335976907278971278864092620121,
    0.74153118559939443986386477328078840707,
    0.58608723546769113029414483825872959844,
    0.40584515137739716690660641207696146335,
    0.20778495500789846760068940377324491348,
    0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922496373200805896959200,
    0.06309209262997855329070066318920428667,
    0.10479001032225018383987632254151801744,
    0.14065325971552591874518959051023792040,
    0.16900472663926790282658342659855028410,
    0.19035057806478540991325640242101368283,
    0.20443294007529889241416199923464908472,
    0.20948214108472782801299917489171426369,
};
constexpr double kWg[4] = {
    0.12948496616886969327061143267908201833,
    0.27970539148927666790146777142377958249,
    0.38183005050511894495036977548897513388,
    0.41795918367346938775510204081632653061,
};

struct Panel {
    double a = 0.0, b = 0.0;
    cplx val{0.0, 0.0};
    double err = 0.0;
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.a > q.a;  // deterministic tie-break
    }
};

Panel gk15(const Integrand1& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    cplx gk{0.0, 0.0}, g{0.0, 0.0};
    for (int i = 0; i < 7; ++i) {
        const cplx fp = f(m + h * kXgk[i]);
        const cplx fm = f(m - h * kXgk[i]);
        gk += kWgk[i] * (fp + fm);
        if (i % 2 == 1) g += kWg[i / 2] * (fp + fm);
    }
    const cplx fc = f(m);
    gk += kWgk[7] * fc;
    g += kWg[3] * fc;
    Panel p;
    p.a = a;
    p.b = b;
    p.val = h * gk;
    p.err = std::abs(h * (gk - g));
    return p;
}

// Global-adaptive bisection driven by a worst-panel heap.  The final value
// is re-summed over panels sorted by left endpoint so the result does not
// depend on refinement history.
QuadResult adaptive_finite(const Integrand1& f, double a, double b,
                           const EvalPolicy& policy) {
    const int seed = 8;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    double total_err = 0.0;
    cplx total_val{0.0, 0.0};
    for (int i = 0; i < seed; ++i) {
        const double pa = a + (b - a) * i / seed;
        const double pb = a + (b - a) * (i + 1) / seed;
        Panel p = gk15(f, pa, pb);
        total_err += p.err;
        total_val += p.val;
        heap.push(p);
    }
    int budget = std::max(policy.quad_max_depth, 32);
    const double min_width = (b - a) * 1e-14;
    while (static_cast<int>(heap.size()) < budget) {
        const double target =
            std::max(policy.tol_abs, policy.tol_rel * std::abs(total_val));
        if (total_err <= target) break;
        Panel worst = heap.top();
        if (worst.b - worst.a < min_width) break;  // roundoff floor
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total_err += left.err + right.err - worst.err;
        total_val += left.val + right.val - worst.val;
        heap.push(left);
        heap.push(right);
    }
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    QuadResult out;
    out.err = 0.0;
    for (const Panel& p : panels) {
        out.value += p.val;
        out.err += p.err;
    }
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()) ||
        !std::isfinite(out.err))
        throw QuadratureFailure("integrand produced a non-finite value",
                                out.err);
    const double target =
        std::max(policy.tol_abs, policy.tol_rel * std::abs(out.value));
    if (out.err > 50.0 * target && out.err > 1e3 * policy.tol_abs)
        throw QuadratureFailure(
            "refinement budget exhausted far from tolerance", out.err);
    return out;
}

}  // namespace

QuadResult integrate_finite(const Integrand1& f, double a, double b,
                            const EvalPolicy& policy,
                            const EndpointHints& hints) {
    if (!(b > a)) throw OutOfDomain("integrate_finite: requires b > a");
    if (hints.sing_alpha > 0.0 && hints.sing_alpha < 1.0) {
        // Integrand behaves like (t-a)^{alpha-1} at the left endpoint:
        // substitute t = a + v^{1/alpha} to flatten it.
        const double al = hints.sing_alpha;
        const double vmax = std::pow(b - a, al);
        Integrand1 g = [&f, a, al](double v) -> cplx {
            const double t = a + std::pow(v, 1.0 / al);
            return f(t) * (1.0 / al) * std::pow(v, 1.0 / al - 1.0);
        };
        return adaptive_finite(g, 0.0, vmax, policy);
    }
    return adaptive_finite(f, a, b, policy);
}

namespace {

// Semi-infinite integral over t in (0, inf) of a real-parameterised
// integrand: head on (0,S] directly, tail by the inversion t = S/u.
QuadResult semi_infinite(const Integrand1& f, double scale,
                         const EvalPolicy& policy,
                         const EndpointHints& hints) {
    const double S = scale > 0.0 ? scale : 1.0;
    if (hints.tail_power <= 1.0) {
        // Probe t|f(t)| along a geometric ladder; it must die out or the
        // tail cannot be integrated.
        double peak = 0.0;
        double last = 0.0;
        for (int k = 0; k <= 12; ++k) {
            const double t = S * std::ldexp(1.0, k);
            const double m = t * std::abs(f(t));
            if (std::isfinite(m)) peak = std::max(peak, m);
            last = m;
        }
        if (!std::isfinite(last) ||
            (last > 0.01 * peak && last > policy.tol_abs))
            throw NonDecaying(
                "tail of the integrand does not decay along the path");
    }
    EvalPolicy half = policy;
    half.tol_abs = 0.5 * policy.tol_abs;
    half.tol_rel = 0.5 * policy.tol_rel;
    QuadResult head = integrate_finite(f, 0.0, S, half, hints);
    Integrand1 tail = [&f, S](double u) -> cplx {
        const double t = S / u;
        return f(t) * (S / (u * u));
    };
    EndpointHints tail_hints;
    if (hints.tail_power > 1.0) tail_hints.sing_alpha = hints.tail_power - 1.0;
    QuadResult rest = integrate_finite(tail, 0.0, 1.0, half, tail_hints);
    QuadResult out;
    out.value = head.value + rest.value;
    out.err = head.err + rest.err;
    return out;
}

}  // namespace

QuadResult integrate_ray(const ComplexIntegrand& f, const RayPath& path,
                         const EvalPolicy& policy, const EndpointHints& hints) {
    if (!(path.angle_phi > -kPi && path.angle_phi < kPi))
        throw OutOfDomain("integrate_ray: angle must lie in (-pi, pi)");
    const cplx dir = std::exp(cplx(0.0, path.angle_phi));
    Integrand1 g = [&f, dir](double t) -> cplx { return f(dir * t); };
    QuadResult out = semi_infinite(g, path.scale, policy, hints);
    out.value *= dir;
    return out;
}

QuadResult integrate_2d_iterated(const Integrand2& f, const EvalPolicy& policy,
                                 const EndpointHints& inner_hints,
                                 const EndpointHints& outer_hints) {
    // Iterated integral over (0,inf)^2, inner in x: the inner integral is
    // evaluated to an eightfold tighter tolerance so its noise stays below
    // the outer error estimate.
    EvalPolicy inner_policy = policy;
    inner_policy.tol_abs = policy.tol_abs / 8.0;
    inner_policy.tol_rel = policy.tol_rel / 8.0;
    inner_policy.quad_max_depth = std::max(policy.quad_max_depth / 4, 64);
    Integrand1 outer_f = [&](double y) -> cplx {
        Integrand1 fx = [&f, y](double x) -> cplx { return f(x, y); };
        return semi_infinite(fx, 1.0, inner_policy, inner_hints).value;
    };
    return semi_infinite(outer_f, 1.0, policy, outer_hints);
}

QuadResult integrate_vline(const ComplexIntegrand& f, const VLinePath& path,
                           const EvalPolicy& policy) {
    if (!(path.height_T > 0.0))
        throw OutOfDomain("integrate_vline: requires height_T > 0");
    const double c = path.abscissa_c;
    const double T = path.height_T;
    // Tail model |f(c+it)| <~ A e^{-pi|t|/2} gives the residual bound
    // (2/pi)(|f(c+iT)| + |f(c-iT)|) past the truncation height.
    const double tail_est =
        (2.0 / kPi) * (std::abs(f(cplx(c, T))) + std::abs(f(cplx(c, -T))));
    Integrand1 g = [&f, c](double t) -> cplx {
        return cplx(0.0, 1.0) * f(cplx(c, t));
    };
    QuadResult out = adaptive_finite(g, -T, T, policy);
    out.err += tail_est;
    if (tail_est >
        std::max(policy.tol_abs, policy.tol_rel * std::abs(out.value)))
        throw TailTooFat(
            "boundary magnitude too large for the requested tolerance",
            tail_est);
    return out;
}

}  // namespace bizeta
