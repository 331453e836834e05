// Tricomi Psi evaluator against closed forms, the contiguous argument
// transformation, and reconstruction of the ray integral from the truncated
// asymptotic sum plus its exact remainder term.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "bizeta/complex_core.hpp"
#include "bizeta/errors.hpp"
#include "bizeta/tricomi.hpp"

using namespace bizeta;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
bool near_rel(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}
}  // namespace

TEST_CASE("Psi(a, a+1; x) = x^-a") {
    EvalPolicy p;
    for (cplx a : {cplx(0.7, 0.0), cplx(1.3, 0.0), cplx(2.6, 0.8),
                   cplx(1.9, -1.2)}) {
        for (cplx x : {cplx(3.0, 0.0), cplx(0.0, 2.0 * kPi),
                       cplx(1.5, -4.0)}) {
            PsiResult r = psi_auto(a, a + 1.0, x, p);
            CHECK(near_rel(r.value, pow_principal(x, -a), 1e-10));
        }
    }
}

TEST_CASE("Psi(1, 1; x) = e^x Gamma(0, x)") {
    EvalPolicy p;
    double x = 2.5;
    PsiResult r = psi_auto(cplx(1.0), cplx(1.0), cplx(x), p);
    cplx expect = std::exp(x) * upper_incomplete_gamma(cplx(0.0), x);
    CHECK(near(r.value, expect, 1e-11));
}

TEST_CASE("argument transformation ties the two integral representations") {
    // Psi(a,b;x) = x^{1-b} Psi(a-b+1, 2-b; x); pick parameters so both
    // sides admit the direct ray integral (Re a > 0, Re(a-b+1) > 0).
    EvalPolicy p;
    struct Fix {
        cplx a, b, x;
    };
    const Fix fixes[] = {
        {cplx(2.0, 0.0), cplx(1.5, 0.0), cplx(3.0, 0.0)},
        {cplx(2.5, 0.5), cplx(1.2, -0.3), cplx(0.0, 6.0)},
        {cplx(3.0, 0.0), cplx(2.2, 0.0), cplx(0.0, -4.0)},
        {cplx(1.8, -0.6), cplx(0.9, 0.4), cplx(2.0, 2.0)},
    };
    for (const Fix& f : fixes) {
        PsiArgs lhs{f.a, f.b, f.x};
        PsiArgs rhs{f.a - f.b + 1.0, 2.0 - f.b, f.x};
        cplx left = psi_integral(lhs, p).value;
        cplx right =
            pow_principal(f.x, 1.0 - f.b) * psi_integral(rhs, p).value;
        CHECK(near_rel(left, right, 1e-10));
    }
}

TEST_CASE("asymptotic branch self-certifies at large |x|") {
    EvalPolicy p;
    cplx a(1.4, 0.0), b(3.1, 0.0), x(0.0, 200.0);
    PsiResult asym;
    REQUIRE(psi_asymptotic_certified(a, b, x, 1e-12, asym));
    PsiResult direct = psi_integral(PsiArgs{a, b, x}, p);
    CHECK(near_rel(asym.value, direct.value, 1e-10));
    CHECK(asym.rep == PsiResult::Rep::asymptotic);
}

TEST_CASE("remainder integral completes the truncated sum") {
    // Psi = S_M + rho_M exactly; at |x| = 30 with small M the remainder
    // is O(x^{-a-M}), far above cancellation noise.
    EvalPolicy p;
    cplx a(1.5, 0.0), b(2.3, 0.0);
    cplx x(0.0, 30.0);
    cplx full = psi_integral(PsiArgs{a, b, x}, p).value;
    for (int M : {1, 2, 3}) {
        cplx sum = psi_asymptotic_sum(a, b, x, M);
        QuadResult rem = rho_m(a, b, x, M, PsiArgs::kAutoPhi, p);
        CHECK(near(sum + rem.value, full, 1e-10));
    }
}

TEST_CASE("summation helper agrees with the dispatcher across |x|") {
    EvalPolicy p;
    cplx a(2.5, 0.0), b(4.0, 0.0);
    for (double l : {1.0, 5.0, 400.0}) {
        cplx x(0.0, 2.0 * kPi * l);
        PsiResult fast = psi_for_sum(a, b, x, p);
        PsiResult ref = psi_integral(PsiArgs{a, b, x}, p);
        CHECK(near_rel(fast.value, ref.value, 1e-9));
    }
}

TEST_CASE("inadmissible rays are rejected") {
    EvalPolicy p;
    // x on the positive imaginary axis: phi = +pi/2 makes |phi + arg x| = pi.
    PsiArgs bad{cplx(1.5), cplx(2.0), cplx(0.0, 5.0), kPi / 2.0};
    CHECK_THROWS_AS(psi_integral(bad, p), OutOfDomain);
    // Re a <= 0 has no direct integral.
    PsiArgs bada{cplx(-0.5), cplx(2.0), cplx(3.0)};
    CHECK_THROWS_AS(psi_integral(bada, p), OutOfDomain);
    // x = 0 never admissible.
    CHECK_THROWS_AS(psi_auto(cplx(1.0), cplx(2.0), cplx(0.0), p), OutOfDomain);
}

TEST_CASE("dispatcher covers Re a <= 0 through the transformation") {
    // a = -0.4, b = 0.2: transformed parameters a-b+1 = 0.4, Re > 0.
    EvalPolicy p;
    cplx a(-0.4, 0.0), b(0.2, 0.0), x(0.0, 8.0);
    PsiResult r = psi_auto(a, b, x, p);
    cplx expect =
        pow_principal(x, 1.0 - b) *
        psi_integral(PsiArgs{a - b + 1.0, 2.0 - b, x}, p).value;
    CHECK(near_rel(r.value, expect, 1e-10));
    CHECK(r.rep == PsiResult::Rep::transformed);
}
