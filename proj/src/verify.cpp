// Verification orchestration: fixture grids, report assembly, and the
// suites comparing independent evaluation paths of the same object.
//
// Every suite catches domain violations per point and records them as
// status "skipped" (never thrown out of a suite, never counted as a pass);
// genuine numeric failures are recorded as "fail" with the reason in the
// note.  Points are processed in parallel (BIZETA_THREADS) and assembled
// in index order, so the report vector and its serialization do not depend
// on the thread count.

#include "bizeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bizeta/errors.hpp"
#include "bizeta/quadrature.hpp"
#include "bizeta/tricomi.hpp"
#include "bizeta/zetas.hpp"

namespace bizeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

int thread_count() {
    if (const char* env = std::getenv("BIZETA_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return std::max(1u, std::min(hc, 8u));
}

// Suites call through this alias; the shared definition lives below.
template <typename F>
void par_for(std::size_t n, F&& f) {
    parallel_for(n, std::function<void(std::size_t)>(std::forward<F>(f)));
}

RegionTag domain_tag(const std::string& why) {
    RegionTag t;
    t.label = Region::out_of_domain;
    t.constraints = {why};
    return t;
}

FEReport skipped_report(const std::string& check, cplx s1, cplx s2, double tol,
                        const std::string& why) {
    FEReport r;
    r.check = check;
    r.s1 = s1;
    r.s2 = s2;
    r.lhs = r.rhs = cplx(0.0, 0.0);
    r.abs_residual = 0.0;
    r.rel_residual = 0.0;
    r.lhs_region = r.rhs_region = domain_tag(why);
    r.status = "skipped";
    r.tolerance = tol;
    r.note = why;
    return r;
}

FEReport failed_report(const std::string& check, cplx s1, cplx s2, double tol,
                       const std::string& why) {
    FEReport r = skipped_report(check, s1, s2, tol, why);
    r.status = "fail";
    return r;
}

// Wraps one point evaluation: domain errors -> skipped, numeric -> fail.
template <typename F>
FEReport guarded(const std::string& check, cplx s1, cplx s2, double tol,
                 F&& body) {
    try {
        return body();
    } catch (const PoleAt& e) {
        return skipped_report(check, s1, s2, tol, e.what());
    } catch (const OutOfDomain& e) {
        return skipped_report(check, s1, s2, tol, e.what());
    } catch (const NumericError& e) {
        return failed_report(check, s1, s2, tol, e.what());
    }
}

// The suite owns its internal accuracy: two decades below the comparison
// tolerance.  The caller's budget is not tightened further; certified
// cutoffs grow like tol^{-1/sigma}, so honoring a much tighter budget can
// make a continued evaluation infeasible without changing the verdict.
EvalPolicy scaled(const EvalPolicy& policy, double tol) {
    EvalPolicy p = policy;
    p.tol_abs = 1e-2 * tol;
    p.tol_rel = 1e-9;
    return p;
}

CheckPoint pt(double a, double b, double c, double d) {
    CheckPoint p;
    p.s1 = cplx(a, b);
    p.s2 = cplx(c, d);
    return p;
}

// zeta(s, a) by Hermite's integral, independent of both the summation and
// the functional-equation paths:
//   a^-s/2 + a^{1-s}/(s-1)
//   + 2 int_0^inf sin(s atan(t/a)) (a^2+t^2)^{-s/2} / (e^{2 pi t}-1) dt.
cplx hurwitz_hermite(cplx s, double a, const EvalPolicy& policy) {
    cplx head = 0.5 * pow_principal(a, -s) + pow_principal(a, 1.0 - s) / (s - 1.0);
    RayPath path;
    path.angle_phi = 0.0;
    path.scale = 1.0;
    EndpointHints hints;
    hints.sing_alpha = 1.0;
    hints.tail_power = 0.0;
    QuadResult q = integrate_ray(
        [&](cplx z) -> cplx {
            double t = z.real();
            if (t <= 0.0) return {0.0, 0.0};
            cplx ang = s * std::atan2(t, a);
            return std::sin(ang) *
                   pow_principal(a * a + t * t, -0.5 * s) /
                   std::expm1(kTwoPi * t);
        },
        path, policy, hints);
    return head + 2.0 * q.value;
}

// Classical double-zeta right side assembled from divisor_sigma and the
// order-M remainder quadrature; shares only the low-level Psi machinery
// with thm1_rhs, not the coefficient or L-function paths.
cplx euler_double_classical(cplx s1, cplx s2, const EvalPolicy& policy) {
    cplx w = s1 + s2 - 1.0;
    cplx l1 = gamma(1.0 - s1) * gamma(w) * recip_gamma(s2) * riemann_zeta(w);

    cplx a1 = 1.0 - s2, a2 = 1.0 - s1;  // F_pm arguments
    cplx c = a1 + a2 - 1.0;
    const int M = 8;
    const double qc = c.real();
    const double p = 0.25 + std::max(0.0, qc);
    const double sig2 = a2.real();
    double crho = 2.0 *
                  std::abs(pochhammer(1.0 - a1, M) * pochhammer(a2, M)) /
                  40320.0 * std::exp(kPi * std::abs(a2.imag()) / 2.0);
    double texp = sig2 + M - p;
    double pref = 24.0 * crho * std::pow(kTwoPi, -sig2 - M);
    long long L = 8;
    while (pref * std::pow((double)L, 1.0 - texp) / (texp - 1.0) > 1e-12 &&
           L < 4096)
        L *= 2;

    EvalPolicy pq = policy;
    pq.tol_abs = 1e-13;
    pq.tol_rel = 1e-12;
    cplx fsum{0.0, 0.0};
    for (int sign = +1; sign >= -1; sign -= 2) {
        cplx i2pi(0.0, sign * kTwoPi);
        cplx jsum{0.0, 0.0};
        double fact = 1.0;
        for (int j = 0; j < M; ++j) {
            if (j > 1) fact *= j;
            double par = (j % 2 == 0) ? 1.0 : -1.0;
            jsum += par * pochhammer(1.0 - a1, j) * pochhammer(a2, j) / fact *
                    pow_principal(i2pi, -a2 - (double)j) *
                    riemann_zeta(a2 + (double)j) *
                    riemann_zeta(1.0 - a1 + (double)j);
        }
        cplx lsum{0.0, 0.0};
        for (long long l = 1; l <= L; ++l) {
            cplx x(0.0, sign * kTwoPi * (double)l);
            QuadResult rq = rho_m(a2, a1 + a2, x, M, PsiArgs::kAutoPhi, pq);
            lsum += divisor_sigma(c, l) * rq.value;
        }
        fsum += jsum + lsum;
    }
    return l1 + gamma(1.0 - s1) * fsum;
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    std::size_t t = std::min<std::size_t>(thread_count(), n);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                f(i);
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<CheckPoint> default_riemann_points() {
    return {pt(0.5, 14.1, 0, 0),  pt(0.5, -14.1, 0, 0), pt(0.5, 21.02, 0, 0),
            pt(2.2, 0.0, 0, 0),   pt(3.3, 1.0, 0, 0),   pt(-1.5, 0.0, 0, 0),
            pt(-2.5, 3.0, 0, 0),  pt(0.3, 2.0, 0, 0),   pt(0.7, -3.0, 0, 0),
            pt(-0.5, 8.0, 0, 0),  pt(4.4, -2.0, 0, 0),  pt(1.5, 5.0, 0, 0),
            pt(-3.3, 0.0, 0, 0),  pt(2.6, -7.0, 0, 0),  pt(0.25, 1.3, 0, 0),
            pt(-1.1, -2.2, 0, 0), pt(3.7, 0.4, 0, 0),   pt(-4.2, 1.5, 0, 0),
            pt(1.2, -0.8, 0, 0),  pt(5.5, 2.5, 0, 0)};
}

std::vector<CheckPoint> default_hurwitz_points() {
    std::vector<CheckPoint> out;
    for (double alpha : {1.0 / 3.0, 0.25}) {
        for (auto s : {cplx(-1.5, 0.0), cplx(-2.5, 1.0), cplx(-0.5, -2.0)}) {
            CheckPoint p;
            p.s1 = s;
            p.alpha = alpha;
            out.push_back(p);
        }
    }
    return out;
}

std::vector<CheckPoint> default_euler_double_points() {
    return {pt(-0.5, 0.0, 3.0, 0.0), pt(-0.8, 0.0, 3.3, 0.0),
            pt(-0.3, 0.2, 2.9, 0.0)};
}

std::vector<CheckPoint> default_thm1_grid() {
    return {pt(-1.45, 0.0, 3.85, 0.0), pt(-1.05, 0.0, 3.85, 0.0),
            pt(-0.45, 0.0, 2.60, 0.0), pt(-0.45, 0.0, 3.85, 0.0),
            pt(-0.15, 0.0, 2.60, 0.0), pt(-0.15, 0.0, 3.85, 0.0),
            pt(-1.85, 0.0, 4.00, 0.0), pt(-1.20, 0.3, 3.50, 0.0),
            pt(-0.80, 0.0, 3.10, 0.0), pt(-0.30, 0.0, 2.50, 0.3)};
}

std::vector<CheckPoint> default_thm2_grid() {
    return {pt(-0.70, 0.0, 3.20, 0.0), pt(-1.30, 0.0, 4.00, 0.6),
            pt(-0.45, 0.0, 2.80, 0.0), pt(-2.10, 0.0, 3.40, 0.0),
            pt(-1.80, 0.0, 4.90, -0.4), pt(-0.90, 0.0, 5.15, 0.0)};
}

std::vector<CheckPoint> default_h2n_overlap_grid() {
    // Re s1 >= 1.8 throughout: the certified direct cutoff grows like
    // tol^{-1/sigma1}, so smaller sigma1 makes the direct side infeasible.
    return {pt(2.2, 0.0, 8.2, 0.0), pt(2.5, 0.0, 9.1, 0.0),
            pt(4.2, 0.0, 7.9, 0.0), pt(3.0, 0.0, 8.2, 0.5),
            pt(5.0, 0.0, 8.6, 0.0), pt(1.8, 0.0, 8.5, 0.0)};
}

std::vector<CheckPoint> default_mellin_lemma_points() {
    return {pt(15.0, 0.0, 7.0, 0.0), pt(16.0, 1.0, 7.5, -0.5),
            pt(14.2, 0.0, 6.8, 0.0)};
}

std::vector<CheckPoint> default_l1star_points() {
    return {pt(2.0, 1.0, 5.0, 0.0), pt(0.5, 0.0, 6.5, -2.0),
            pt(2.5, 0.0, 6.5, 0.0)};
}

std::vector<CheckPoint> default_prop2_points() {
    return {pt(2.0, 0.0, 3.0, 0.0), pt(1.3, 0.0, 2.6, 0.0),
            pt(0.8, 0.4, 3.1, 0.0)};
}

FEReport make_report(const std::string& check, cplx s1, cplx s2, cplx lhs,
                     cplx rhs, const RegionTag& lt, const RegionTag& rt,
                     double tol) {
    FEReport r;
    r.check = check;
    r.s1 = s1;
    r.s2 = s2;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual /
                     std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.lhs_region = lt;
    r.rhs_region = rt;
    r.tolerance = tol;
    r.status = (std::min(r.abs_residual, r.rel_residual) <= tol) ? "pass"
                                                                 : "fail";
    return r;
}

std::vector<FEReport> check_classical(const std::string& which,
                                      const std::vector<CheckPoint>& points,
                                      const EvalPolicy& policy) {
    std::vector<FEReport> out(points.size());
    if (which == "riemann") {
        const double tol = 1e-10;
        par_for(points.size(), [&](std::size_t i) {
            cplx s = points[i].s1;
            out[i] = guarded("riemann_fe", s, cplx(0, 0), tol, [&]() {
                cplx lhs = riemann_zeta(s);
                cplx rhs = pow_principal(2.0, s) *
                           pow_principal(kPi, s - 1.0) * sin_pi(0.5 * s) *
                           gamma(1.0 - s) * riemann_zeta(1.0 - s);
                RegionTag lt, rt;
                lt.label = rt.label = Region::direct_series;
                lt.constraints = {"zeta(s)"};
                rt.constraints = {"chi(s) zeta(1-s)"};
                return make_report("riemann_fe", s, cplx(0, 0), lhs, rhs, lt,
                                   rt, tol);
            });
        });
    } else if (which == "hurwitz") {
        const double tol = 1e-8;
        par_for(points.size(), [&](std::size_t i) {
            cplx s = points[i].s1;
            double a = points[i].alpha;
            out[i] = guarded("hurwitz_fe", s, cplx(a, 0), tol, [&]() {
                cplx lhs = hurwitz_hermite(s, a, scaled(policy, tol));
                cplx pref = gamma(1.0 - s) /
                            (cplx(0.0, 1.0) *
                             pow_principal(kTwoPi, 1.0 - s));
                cplx eip = std::exp(cplx(0.0, kPi / 2.0) * s);
                cplx rhs = pref * (eip * lerch_phi(1.0 - s, a) -
                                   (1.0 / eip) * lerch_phi(1.0 - s, -a));
                RegionTag lt, rt;
                lt.label = Region::integral_rep;
                lt.constraints = {"Hermite integral"};
                rt.label = Region::direct_series;
                rt.constraints = {"Gamma-phi assembly at 1-s"};
                return make_report("hurwitz_fe", s, cplx(a, 0), lhs, rhs, lt,
                                   rt, tol);
            });
        });
    } else if (which == "euler_double") {
        const double tol = 1e-10;
        CoeffSeq ones = CoeffSeq::make_all_ones();
        par_for(points.size(), [&](std::size_t i) {
            cplx s1 = points[i].s1, s2 = points[i].s2;
            out[i] = guarded("euler_double", s1, s2, tol, [&]() {
                Eval lhs = thm1_rhs(ones, s1, s2, scaled(policy, tol));
                cplx rhs = euler_double_classical(s1, s2, scaled(policy, tol));
                RegionTag rt;
                rt.label = Region::asymp_continuation;
                rt.constraints = {"divisor_sigma assembly, M = 8"};
                return make_report("euler_double", s1, s2, lhs.value, rhs,
                                   lhs.region, rt, tol);
            });
        });
    } else {
        throw OutOfDomain("check_classical: unknown check '" + which + "'");
    }
    return out;
}

std::vector<FEReport> check_thm1(const CoeffSeq& seq,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(points.size());
    par_for(points.size(), [&](std::size_t i) {
        cplx s1 = points[i].s1, s2 = points[i].s2;
        out[i] = guarded("thm1", s1, s2, tol, [&]() {
            Eval lhs = l2_direct(seq, s1, s2, p);
            Eval rhs = thm1_rhs(seq, s1, s2, p);
            return make_report("thm1", s1, s2, lhs.value, rhs.value,
                               lhs.region, rhs.region, tol);
        });
    });
    return out;
}

std::vector<FEReport> check_thm2(const FrickePair& pair,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(points.size());
    par_for(points.size(), [&](std::size_t i) {
        cplx s1 = points[i].s1, s2 = points[i].s2;
        out[i] = guarded("thm2", s1, s2, tol, [&]() {
            Eval lhs = thm1_rhs(pair.f, s1, s2, p);
            Eval rhs = thm2_rhs(pair, s1, s2, p);
            return make_report("thm2", s1, s2, lhs.value, rhs.value,
                               lhs.region, rhs.region, tol);
        });
    });
    return out;
}

std::vector<FEReport> check_cor1(const std::vector<long long>& n_list,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(n_list.size() * points.size());
    par_for(out.size(), [&](std::size_t k) {
        long long n = n_list[k / points.size()];
        const CheckPoint& cp = points[k % points.size()];
        cplx s1 = cp.s1, s2 = cp.s2;
        out[k] = guarded("cor1", s1, s2, tol, [&]() {
            Eval lhs = l2_single_series(n, s1, s2, p);
            CoeffSeq dn = CoeffSeq::make_delta(n);
            Eval rhs = thm1_rhs(dn, s1, s2, p);
            FEReport r = make_report("cor1", s1, s2, lhs.value, rhs.value,
                                     lhs.region, rhs.region, tol);
            r.note = "n = " + std::to_string(n);
            return r;
        });
    });
    return out;
}

std::vector<FEReport> check_cor2(const FrickePair& pair,
                                 const std::vector<cplx>& s1_list, int l_max,
                                 const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out;
    for (cplx s1 : s1_list) {
        std::vector<FEReport> scan;
        try {
            scan = trivial_zero_scan(pair, s1, l_max, p);
        } catch (const OutOfDomain& e) {
            scan.push_back(skipped_report("trivial_zero", s1, cplx(0, 0), tol,
                                          e.what()));
        }
        for (FEReport& r : scan) {
            r.tolerance = tol;
            if (r.status != "skipped")
                r.status = (r.rel_residual <= tol) ? "pass" : "fail";
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<FEReport> check_prop2(const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    struct Case {
        CoeffSeq seq;
        cplx s1, s2;
    };
    std::vector<Case> cases;
    for (const CheckPoint& cp : default_prop2_points())
        cases.push_back(Case{CoeffSeq::make_all_ones(), cp.s1, cp.s2});
    cases.push_back(Case{CoeffSeq::make_ramanujan_delta(), cplx(1.0, 0.0),
                     cplx(8.0, 0.0)});
    std::vector<FEReport> out(cases.size());
    par_for(cases.size(), [&](std::size_t i) {
        const Case& c = cases[i];
        out[i] = guarded("prop2", c.s1, c.s2, tol, [&]() {
            Eval lhs = l2_direct(c.seq, c.s1, c.s2, p);
            Eval lam = lambda_integral(c.seq, c.s1, c.s2, p);
            cplx rhs = pow_principal(kTwoPi, c.s1 + c.s2) *
                       recip_gamma(c.s1) * recip_gamma(c.s2) * lam.value;
            FEReport r = make_report("prop2", c.s1, c.s2, lhs.value, rhs,
                                     lhs.region, lam.region, tol);
            r.note = c.seq.describe();
            return r;
        });
    });
    return out;
}

std::vector<FEReport> check_psi_coherence(const EvalPolicy& policy) {
    struct TFix {
        cplx a, b, x;
    };
    std::vector<TFix> tf = {
        {cplx(1.5, 0), cplx(2.2, 0), cplx(0, kTwoPi)},
        {cplx(1.5, 0), cplx(2.2, 0), cplx(0, -kTwoPi)},
        {cplx(0.8, 0), cplx(1.1, 0), cplx(0, 2 * kTwoPi)},
        {cplx(0.8, 0), cplx(1.1, 0), cplx(0, -2 * kTwoPi)},
        {cplx(2.3, 0.4), cplx(2.9, 0), cplx(0, kTwoPi)},
        {cplx(2.3, 0.4), cplx(2.9, 0), cplx(0, -kTwoPi)},
        {cplx(3.1, 0), cplx(3.5, 0), cplx(0, 5 * kTwoPi)},
        {cplx(3.1, 0), cplx(3.5, 0), cplx(0, -5 * kTwoPi)},
        {cplx(1.2, -0.7), cplx(1.8, 0), cplx(0, 3 * kTwoPi)},
        {cplx(1.2, -0.7), cplx(1.8, 0), cplx(0, -3 * kTwoPi)},
        {cplx(2.0, 0), cplx(2.5, 0.6), cplx(0, kTwoPi)},
        {cplx(2.0, 0), cplx(2.5, 0.6), cplx(0, -kTwoPi)},
        {cplx(1.7, 0), cplx(1.2, 0), cplx(4.0, 0)},
        {cplx(2.4, 0), cplx(2.0, 0), cplx(7.5, 0)},
        {cplx(0.9, 0), cplx(0.4, 0), cplx(3.0, 2.0)},
        {cplx(1.1, 0), cplx(1.6, 0), cplx(5.0, -3.0)},
        {cplx(2.8, 0), cplx(3.3, 0), cplx(1.5, 0.5)},
        {cplx(3.6, 0), cplx(2.9, 0), cplx(0, 2 * kTwoPi)},
        {cplx(1.4, 1.1), cplx(2.0, 0), cplx(6.0, 0)},
        {cplx(2.2, 0), cplx(2.7, 0), cplx(0, -4 * kTwoPi)}};

    EvalPolicy p = policy;
    p.tol_abs = std::min(p.tol_abs, 1e-12);
    p.tol_rel = std::min(p.tol_rel, 1e-12);

    std::vector<FEReport> out;
    // b -> 2-b transformation on 20 fixtures, both sides by the ray
    // integral at shifted parameters.
    {
        std::vector<FEReport> part(tf.size());
        par_for(tf.size(), [&](std::size_t i) {
            const TFix& f = tf[i];
            part[i] = guarded("psi_transformation", f.a, f.b, 1e-9, [&]() {
                PsiArgs la;
                la.a = f.a;
                la.b = f.b;
                la.x = f.x;
                PsiResult lr = psi_integral(la, p);
                PsiArgs ra;
                ra.a = f.a - f.b + 1.0;
                ra.b = 2.0 - f.b;
                ra.x = f.x;
                PsiResult rr = psi_integral(ra, p);
                cplx rhs = pow_principal(f.x, 1.0 - f.b) * rr.value;
                RegionTag lt, rt;
                lt.label = rt.label = Region::integral_rep;
                lt.constraints = {"Re a > 0"};
                rt.constraints = {"x^{1-b} Psi(a-b+1, 2-b; x)"};
                FEReport r = make_report("psi_transformation", f.a, f.b,
                                         lr.value, rhs, lt, rt, 1e-9);
                r.note = "x = (" + std::to_string(f.x.real()) + ", " +
                         std::to_string(f.x.imag()) + ")";
                return r;
            });
        });
        out.insert(out.end(), part.begin(), part.end());
    }
    // Truncated sum + remainder reconstructs the integral, M in {1,2,4,8},
    // x = 2 pi i l.
    {
        const cplx a(1.5, 0.0), b(2.3, 0.0);
        std::vector<std::pair<int, int>> combos;
        for (int M : {1, 2, 4, 8})
            for (int l : {1, 2, 5}) combos.emplace_back(M, l);
        std::vector<FEReport> part(combos.size());
        par_for(combos.size(), [&](std::size_t i) {
            int M = combos[i].first, l = combos[i].second;
            part[i] = guarded("psi_reconstruction", a, b, 1e-9, [&]() {
                cplx x(0.0, kTwoPi * l);
                PsiArgs la;
                la.a = a;
                la.b = b;
                la.x = x;
                PsiResult lr = psi_integral(la, p);
                cplx sum = psi_asymptotic_sum(a, b, x, M);
                QuadResult rq = rho_m(a, b, x, M, PsiArgs::kAutoPhi, p);
                RegionTag lt, rt;
                lt.label = Region::integral_rep;
                lt.constraints = {"Re a > 0"};
                rt.label = Region::asymp_continuation;
                rt.constraints = {"M = " + std::to_string(M)};
                FEReport r = make_report("psi_reconstruction", a, b, lr.value,
                                         sum + rq.value, lt, rt, 1e-9);
                r.note = "M = " + std::to_string(M) +
                         ", l = " + std::to_string(l);
                return r;
            });
        });
        out.insert(out.end(), part.begin(), part.end());
    }
    // U(a, a+1, x) = x^-a.
    {
        std::vector<std::pair<cplx, cplx>> cf;
        for (cplx a : {cplx(0.7, 0), cplx(1.3, 0), cplx(2.6, 0.8),
                       cplx(1.9, -1.2)})
            for (cplx x : {cplx(0.0, kTwoPi), cplx(3.0, 0.0)})
                cf.emplace_back(a, x);
        std::vector<FEReport> part(cf.size());
        par_for(cf.size(), [&](std::size_t i) {
            cplx a = cf[i].first, x = cf[i].second;
            part[i] = guarded("psi_closed_form", a, x, 1e-10, [&]() {
                PsiResult lr = psi_auto(a, a + 1.0, x, p);
                cplx rhs = pow_principal(x, -a);
                RegionTag lt, rt;
                lt.label = Region::integral_rep;
                lt.constraints = {"b = a+1"};
                rt.label = Region::direct_series;
                rt.constraints = {"x^-a"};
                return make_report("psi_closed_form", a, x, lr.value, rhs, lt,
                                   rt, 1e-10);
            });
        });
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<FEReport> check_mellin_lemma(const FrickePair& pair,
                                         const std::vector<CheckPoint>& points,
                                         const EvalPolicy& policy,
                                         double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(points.size());
    par_for(points.size(), [&](std::size_t i) {
        cplx s = points[i].s1, u = points[i].s2;
        out[i] = guarded("mellin_lemma", s, u, tol, [&]() {
            FEReport r = mellin_f_tilde(pair, s, u, p);
            r.tolerance = tol;
            r.status = (std::min(r.abs_residual, r.rel_residual) <= tol)
                           ? "pass"
                           : "fail";
            return r;
        });
    });
    return out;
}

std::vector<FEReport> check_l1star(const FrickePair& pair,
                                   const std::vector<CheckPoint>& points,
                                   const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(points.size());
    par_for(points.size(), [&](std::size_t i) {
        cplx s1 = points[i].s1, s2 = points[i].s2;
        out[i] = guarded("l1_star_fe", s1, s2, tol, [&]() {
            FEReport r = l1_star_fe_check(pair, s1, s2, p);
            r.tolerance = tol;
            r.status = (std::min(r.abs_residual, r.rel_residual) <= tol)
                           ? "pass"
                           : "fail";
            return r;
        });
    });
    return out;
}

std::vector<FEReport> check_h2n_overlap(const FrickePair& pair,
                                        const std::vector<CheckPoint>& points,
                                        const EvalPolicy& policy, double tol) {
    EvalPolicy p = scaled(policy, tol);
    std::vector<FEReport> out(2 * points.size());
    par_for(out.size(), [&](std::size_t k) {
        const CheckPoint& cp = points[k / 2];
        int sign = (k % 2 == 0) ? +1 : -1;
        cplx s1 = cp.s1, s2 = cp.s2;
        out[k] = guarded("h2n_overlap", s1, s2, tol, [&]() {
            HArgs ha;
            ha.pair = pair;
            ha.sign = sign;
            ha.s1 = s1;
            ha.s2 = s2;
            ha.representation = HArgs::Rep::direct;
            Eval lhs = h2n(ha, p);
            ha.representation = HArgs::Rep::mellin_barnes;
            Eval rhs = h2n(ha, p);
            FEReport r = make_report("h2n_overlap", s1, s2, lhs.value,
                                     rhs.value, lhs.region, rhs.region, tol);
            r.note = (sign > 0) ? "sign = +1" : "sign = -1";
            return r;
        });
    });
    return out;
}

std::string reports_to_json(const std::vector<FEReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const FEReport& r : reports) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["point"] = {{"s1", {r.s1.real(), r.s1.imag()}},
                      {"s2", {r.s2.real(), r.s2.imag()}}};
        j["lhs"] = {r.lhs.real(), r.lhs.imag()};
        j["rhs"] = {r.rhs.real(), r.rhs.imag()};
        j["abs_residual"] = r.abs_residual;
        j["rel_residual"] = r.rel_residual;
        j["status"] = r.status;
        j["lhs_region"] = to_string(r.lhs_region.label);
        j["rhs_region"] = to_string(r.rhs_region.label);
        j["tolerance"] = r.tolerance;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace bizeta
