// Quadrature layer against closed-form integrals, including endpoint
// singularities, ray rotation, algebraic tails, and the vertical-line path
// (Cahen-Mellin as the oracle).

#include <doctest.h>

#include <cmath>
#include <complex>

#include "bizeta/complex_core.hpp"
#include "bizeta/errors.hpp"
#include "bizeta/quadrature.hpp"

using namespace bizeta;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("finite interval basics") {
    EvalPolicy p;
    QuadResult q = integrate_finite([](double x) { return cplx(x * x, 0.0); },
                                    0.0, 1.0, p);
    CHECK(near(q.value, cplx(1.0 / 3.0, 0.0), 1e-14));
    CHECK(q.err >= 0.0);

    // oscillatory complex integrand: int_0^{2pi} e^{ix} dx = 0
    q = integrate_finite(
        [](double x) { return std::exp(cplx(0.0, x)); }, 0.0, 2.0 * kPi, p);
    CHECK(near(q.value, cplx(0.0, 0.0), 1e-12));
}

TEST_CASE("finite interval with endpoint singularity") {
    EvalPolicy p;
    EndpointHints h;
    h.sing_alpha = 0.5;  // integrand ~ t^{-1/2}
    QuadResult q = integrate_finite(
        [](double x) { return cplx(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0, p,
        h);
    CHECK(near(q.value, cplx(2.0, 0.0), 1e-11));

    h.sing_alpha = 0.25;  // t^{-3/4}
    q = integrate_finite(
        [](double x) { return cplx(std::pow(x, -0.75), 0.0); }, 0.0, 1.0, p,
        h);
    CHECK(near(q.value, cplx(4.0, 0.0), 1e-10));
}

TEST_CASE("semi-infinite ray with exponential decay") {
    EvalPolicy p;
    RayPath path;
    QuadResult q = integrate_ray(
        [](cplx y) { return std::exp(-y); }, path, p);
    CHECK(near(q.value, cplx(1.0, 0.0), 1e-12));

    // gamma integral with endpoint singularity: int e^-t t^{-1/2} = sqrt(pi)
    EndpointHints h;
    h.sing_alpha = 0.5;
    q = integrate_ray(
        [](cplx y) { return std::exp(-y) * pow_principal(y, -0.5); }, path, p,
        h);
    CHECK(near(q.value, cplx(std::sqrt(kPi), 0.0), 1e-11));
}

TEST_CASE("rotated ray reproduces the contour-shifted value") {
    // int_0^inf e^-y dy along arg y = pi/4 still equals 1 (decay on the ray).
    EvalPolicy p;
    RayPath path;
    path.angle_phi = kPi / 4.0;
    QuadResult q = integrate_ray([](cplx y) { return std::exp(-y); }, path, p);
    CHECK(near(q.value, cplx(1.0, 0.0), 1e-11));
}

TEST_CASE("algebraic tail via tail_power hint") {
    EvalPolicy p;
    RayPath path;
    EndpointHints h;
    h.tail_power = 3.0;  // integrand ~ t^-3
    QuadResult q = integrate_ray(
        [](cplx y) {
            double t = y.real();
            return cplx(t / ((1.0 + t * t) * (1.0 + t * t)), 0.0);
        },
        path, p, h);
    CHECK(near(q.value, cplx(0.5, 0.0), 1e-11));
}

TEST_CASE("non-integrable tail raises NonDecaying") {
    EvalPolicy p;
    RayPath path;
    CHECK_THROWS_AS(
        integrate_ray([](cplx y) { return 1.0 / (1.0 + y); }, path, p),
        NonDecaying);
}

TEST_CASE("iterated double integral") {
    EvalPolicy p;
    QuadResult q = integrate_2d_iterated(
        [](double x, double y) { return cplx(std::exp(-x - y), 0.0); }, p);
    CHECK(near(q.value, cplx(1.0, 0.0), 1e-10));

    EndpointHints hx;
    hx.sing_alpha = 0.5;
    q = integrate_2d_iterated(
        [](double x, double y) {
            return cplx(std::exp(-x - y) / std::sqrt(x), 0.0);
        },
        p, hx);
    CHECK(near(q.value, cplx(std::sqrt(kPi), 0.0), 1e-9));
}

TEST_CASE("vertical line against Cahen-Mellin") {
    // int_(c) Gamma(u) x^-u du = 2 pi i e^-x for c > 0, x > 0.
    EvalPolicy p;
    VLinePath path;
    path.abscissa_c = 1.5;
    path.height_T = 40.0;
    double x = 2.0;
    QuadResult q = integrate_vline(
        [&](cplx u) { return gamma(u) * pow_principal(x, -u); }, path, p);
    cplx expect = cplx(0.0, 2.0 * kPi) * std::exp(-x);
    CHECK(near(q.value, expect, 1e-9));
    CHECK(std::abs(q.value - expect) <= std::max(q.err * 20.0, 1e-10));
}

TEST_CASE("vertical line refuses fat truncation tails") {
    EvalPolicy p;
    p.tol_abs = 1e-11;
    VLinePath path;
    path.abscissa_c = 0.5;
    path.height_T = 30.0;
    CHECK_THROWS_AS(
        integrate_vline([](cplx) { return cplx(1.0, 0.0); }, path, p),
        TailTooFat);
}

TEST_CASE("quadrature failure surfaces the error estimate") {
    // A needle the panel budget cannot resolve at the requested tolerance.
    EvalPolicy p;
    p.tol_abs = 1e-15;
    p.tol_rel = 1e-15;
    p.quad_max_depth = 4;
    bool threw = false;
    try {
        integrate_finite(
            [](double x) {
                double d = x - 0.3141592653589793;
                return cplx(1.0 / (1e-12 + d * d), 0.0);
            },
            0.0, 1.0, p);
    } catch (const QuadratureFailure& e) {
        threw = true;
        CHECK(e.error_estimate > 0.0);
    }
    CHECK(threw);
}
