// Gamma / power primitives against closed forms and identities that do not
// share code with the implementations under test.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "bizeta/complex_core.hpp"
#include "bizeta/errors.hpp"

using namespace bizeta;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

bool near_rel(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}
}  // namespace

TEST_CASE("pow_principal basics and branch") {
    CHECK(near(pow_principal(2.0, 3.0), cplx(8.0, 0.0), 1e-14));
    CHECK(near(pow_principal(cplx(0.0, 1.0), 2.0), cplx(-1.0, 0.0), 1e-14));
    // principal branch: (-2)^{1/2} = i sqrt(2)
    CHECK(near(pow_principal(cplx(-2.0, 0.0), 0.5),
               cplx(0.0, std::sqrt(2.0)), 1e-14));
    CHECK(pow_principal(cplx(0.0, 0.0), cplx(2.5, 0.0)) == cplx(0.0, 0.0));
    // x^{a+b} = x^a x^b away from the cut
    cplx x(3.0, 1.5), a(0.7, -0.4), b(1.9, 0.8);
    CHECK(near_rel(pow_principal(x, a + b),
                   pow_principal(x, a) * pow_principal(x, b), 1e-13));
}

TEST_CASE("sin_pi and cos_pi hit exact zeros") {
    CHECK(sin_pi(cplx(3.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(sin_pi(cplx(-7.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(cos_pi(cplx(0.5, 0.0)) == cplx(0.0, 0.0));
    CHECK(cos_pi(cplx(-2.5, 0.0)) == cplx(0.0, 0.0));
    CHECK(near(sin_pi(cplx(0.5, 0.0)), cplx(1.0, 0.0), 1e-15));
    cplx z(0.25, 2.0);
    CHECK(near_rel(sin_pi(z), std::sin(kPi * z), 1e-13));
    CHECK(near_rel(cos_pi(z), std::cos(kPi * z), 1e-13));
}

TEST_CASE("near_nonpositive_integer") {
    CHECK(near_nonpositive_integer(cplx(-3.0, 1e-8), 1e-6));
    CHECK(near_nonpositive_integer(cplx(0.0, 0.0), 1e-6));
    CHECK(!near_nonpositive_integer(cplx(0.5, 0.0), 1e-6));
    CHECK(!near_nonpositive_integer(cplx(-3.0, 0.1), 1e-6));
    CHECK(!near_nonpositive_integer(cplx(2.0, 0.0), 1e-6));
}

TEST_CASE("gamma closed values") {
    CHECK(near_rel(gamma(cplx(0.5, 0.0)), cplx(std::sqrt(kPi), 0.0), 1e-13));
    CHECK(near_rel(gamma(cplx(6.0, 0.0)), cplx(120.0, 0.0), 1e-13));
    // Gamma(-1.5) = 4 sqrt(pi) / 3
    CHECK(near_rel(gamma(cplx(-1.5, 0.0)),
                   cplx(4.0 * std::sqrt(kPi) / 3.0, 0.0), 1e-12));
    // |Gamma(1+i)|^2 = pi / sinh(pi)
    double m = std::abs(gamma(cplx(1.0, 1.0)));
    CHECK(std::abs(m * m - kPi / std::sinh(kPi)) < 1e-13);
}

TEST_CASE("gamma reflection identity at generic complex points") {
    for (cplx z : {cplx(0.3, 2.0), cplx(-1.2, 0.7), cplx(0.9, -3.4)}) {
        cplx prod = gamma(z) * gamma(1.0 - z);
        CHECK(near_rel(prod, kPi / sin_pi(z), 1e-12));
    }
}

TEST_CASE("gamma pole behaviour") {
    CHECK_THROWS_AS(gamma(cplx(0.0, 0.0)), PoleAt);
    CHECK_THROWS_AS(gamma(cplx(-3.0, 0.0)), PoleAt);
    CHECK(recip_gamma(cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(recip_gamma(cplx(-1.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(recip_gamma(cplx(-5.0, 0.0)) == cplx(0.0, 0.0));
    for (cplx z : {cplx(2.3, 0.0), cplx(0.4, 1.7), cplx(-2.6, -0.9)})
        CHECK(near_rel(recip_gamma(z) * gamma(z), cplx(1.0, 0.0), 1e-12));
}

TEST_CASE("log_gamma magnitude matches gamma") {
    for (cplx z : {cplx(3.7, 2.0), cplx(0.3, -1.0), cplx(7.2, 0.4)})
        CHECK(near_rel(std::exp(log_gamma(z)), gamma(z), 1e-11));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(cplx(2.7, 0.4), 0) == cplx(1.0, 0.0));
    CHECK(near_rel(pochhammer(cplx(1.0, 0.0), 5), cplx(120.0, 0.0), 1e-14));
    cplx a(1.3, -0.6);
    CHECK(near_rel(pochhammer(a, 3), a * (a + 1.0) * (a + 2.0), 1e-14));
    // matches the gamma-ratio definition
    CHECK(near_rel(pochhammer(a, 7), gamma(a + 7.0) / gamma(a), 1e-12));
}

TEST_CASE("upper incomplete gamma closed forms") {
    // Gamma(1,x) = e^-x, Gamma(2,x) = e^-x (1+x)
    CHECK(near_rel(upper_incomplete_gamma(cplx(1.0, 0.0), 2.3),
                   cplx(std::exp(-2.3), 0.0), 1e-13));
    CHECK(near_rel(upper_incomplete_gamma(cplx(2.0, 0.0), 1.7),
                   cplx(std::exp(-1.7) * 2.7, 0.0), 1e-13));
    // Gamma(1/2,x) = sqrt(pi) erfc(sqrt(x))
    CHECK(near_rel(upper_incomplete_gamma(cplx(0.5, 0.0), 1.0),
                   cplx(std::sqrt(kPi) * std::erfc(1.0), 0.0), 1e-12));
}

TEST_CASE("upper incomplete gamma recurrence at complex s") {
    // Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x
    for (cplx s : {cplx(1.3, 0.7), cplx(-0.8, 1.2), cplx(3.4, -2.1)}) {
        double x = 2.5;
        cplx lhs = upper_incomplete_gamma(s + 1.0, x);
        cplx rhs = s * upper_incomplete_gamma(s, x) +
                   pow_principal(x, s) * std::exp(-x);
        CHECK(near_rel(lhs, rhs, 1e-12));
    }
    // entire in s: finite at negative half-integers
    cplx v = upper_incomplete_gamma(cplx(-2.5, 0.0), 1.0);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
}

TEST_CASE("policy validity") {
    EvalPolicy p;
    CHECK(p.valid());
    p.tol_abs = 0.0;
    CHECK(!p.valid());
    p = EvalPolicy{};
    p.asymp_order_M = -1;
    CHECK(!p.valid());
}
