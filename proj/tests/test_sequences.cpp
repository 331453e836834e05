// Coefficient sequences: exact tau arithmetic (values, Hecke
// multiplicativity, the square-root bound at primes), divisor-weighted sums,
// Dirichlet series continuation, and the Fricke flip of the q-expansion.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "bizeta/complex_core.hpp"
#include "bizeta/errors.hpp"
#include "bizeta/sequences.hpp"
#include "bizeta/zetas.hpp"

using namespace bizeta;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
bool near_rel(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}
}  // namespace

TEST_CASE("tau values") {
    struct KV {
        long long n;
        long long tau;
    };
    const KV table[] = {{1, 1},      {2, -24},     {3, 252},  {4, -1472},
                        {5, 4830},   {6, -6048},   {7, -16744},
                        {9, -113643}, {10, -115920}, {12, -370944}};
    for (const KV& kv : table) {
        CHECK(ramanujan_tau_int64(kv.n) == kv.tau);
        CHECK(ramanujan_tau_str(kv.n) == std::to_string(kv.tau));
        CHECK(ramanujan_tau_double(kv.n) == doctest::Approx(double(kv.tau)));
    }
}

TEST_CASE("tau multiplicativity on coprime pairs") {
    // tau(49)*tau(100) overflows int64, so compare decimal renderings of
    // the exact __int128 product against the bignum evaluation
    auto to_dec = [](__int128 v) {
        if (v == 0) return std::string("0");
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : v;
        std::string s;
        while (u) {
            s.insert(s.begin(), char('0' + int(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    };
    const std::pair<long long, long long> pairs[] = {
        {2, 3},  {3, 4},  {4, 5},   {5, 8},   {7, 9},
        {8, 25}, {9, 16}, {11, 13}, {27, 32}, {49, 100}};
    for (auto [m, n] : pairs) {
        __int128 prod = (__int128)ramanujan_tau_int64(m) *
                        (__int128)ramanujan_tau_int64(n);
        CHECK(ramanujan_tau_str(m * n) == to_dec(prod));
    }
}

TEST_CASE("tau prime-power recursion") {
    // tau(p^2) = tau(p)^2 - p^11
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        long long p11 = 1;
        for (int i = 0; i < 11; ++i) p11 *= p;
        CHECK(ramanujan_tau_int64(p * p) ==
              ramanujan_tau_int64(p) * ramanujan_tau_int64(p) - p11);
    }
}

TEST_CASE("tau square-root bound at primes up to 200") {
    for (long long p = 2; p <= 200; ++p) {
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        double bound = 2.0 * std::pow(double(p), 5.5);
        CHECK(std::abs(ramanujan_tau_double(p)) <= bound);
    }
}

TEST_CASE("tau int64 overflow detection") {
    // tau(63001) = tau(251)^2 - 251^11 overflows int64
    CHECK_FALSE(tau_fits_int64(63001));
    CHECK_THROWS_AS(ramanujan_tau_int64(63001), NumericError);
    std::string s = ramanujan_tau_str(63001);
    CHECK(s == "-80561663527802406257321747");
    // the decimal string and the double agree to double precision
    double d = std::strtod(s.c_str(), nullptr);
    CHECK(ramanujan_tau_double(63001) == doctest::Approx(d));
}

TEST_CASE("divisor-weighted sums") {
    CoeffSeq ones = CoeffSeq::make_all_ones();
    // A_c(l) for a(n) = 1 is sigma_c(l)
    CHECK(near(a_c(ones, cplx(1.0), 12), cplx(28.0), 1e-12));
    CHECK(near(a_c(ones, cplx(0.0), 12), cplx(6.0), 1e-12));

    // sieve table matches pointwise values
    std::vector<cplx> table = a_c_table(ones, cplx(1.0), 24);
    for (long long l = 1; l <= 24; ++l)
        CHECK(near(table[size_t(l)], a_c(ones, cplx(1.0), l), 1e-12));

    // A^0_c(l) = l^c A_{-c}(l) at complex c
    CoeffSeq tau = CoeffSeq::make_ramanujan_delta();
    cplx c(1.3, -0.7);
    long long l = 36;
    cplx lhs = a_c0(tau, c, l);
    cplx rhs = pow_principal(cplx(double(l)), c) * a_c(tau, -c, l);
    CHECK(near_rel(lhs, rhs, 1e-12));
}

TEST_CASE("finite sequences from json") {
    CoeffSeq s = CoeffSeq::from_json_text(
        R"({"kind":"finite","kappa":1.0,"coeffs":[1,[0,2],0.5]})");
    CHECK(s.finite_support() == 3);
    CHECK(near(s.a(1), cplx(1.0), 0.0));
    CHECK(near(s.a(2), cplx(0.0, 2.0), 0.0));
    CHECK(near(s.a(3), cplx(0.5), 0.0));
    CHECK(near(s.a(4), cplx(0.0), 0.0));
    CHECK_FALSE(s.modular());

    // delta sequence
    CoeffSeq d3 = CoeffSeq::make_delta(3);
    CHECK(d3.finite_support() == 3);
    CHECK(near(d3.a(3), cplx(1.0), 0.0));
    CHECK(near(d3.a(2), cplx(0.0), 0.0));
}

TEST_CASE("fricke companion") {
    CoeffSeq tau = CoeffSeq::make_ramanujan_delta();
    FrickePair pair = fricke_tilde(tau);
    // level 1: the companion is the form itself
    CHECK(pair.f_tilde.modular());
    for (long long n : {1LL, 2LL, 7LL})
        CHECK(near(pair.f_tilde.a(n), pair.f.a(n), 0.0));
    CHECK(near(pair.f.a_tilde(5), pair.f.a(5), 0.0));

    // non-modular sequences have no companion
    CHECK_THROWS_AS(fricke_tilde(CoeffSeq::make_all_ones()), MissingTildeData);
}

TEST_CASE("dirichlet series of the basic kinds") {
    EvalPolicy p;
    CoeffSeq ones = CoeffSeq::make_all_ones();
    CHECK(near_rel(l_series(ones, cplx(2.0), p),
                   riemann_zeta(cplx(2.0)), 1e-12));
    CHECK(near_rel(l_series(ones, cplx(-1.5), p),
                   riemann_zeta(cplx(-1.5)), 1e-12));
    CHECK_THROWS_AS(l_series(ones, cplx(1.0), p), PoleAt);

    CoeffSeq d3 = CoeffSeq::make_delta(3);
    cplx s(0.3, -1.1);
    CHECK(near_rel(l_series(d3, s, p), pow_principal(cplx(3.0), -s), 1e-13));
}

TEST_CASE("cusp form L-series against direct summation") {
    EvalPolicy p;
    CoeffSeq tau = CoeffSeq::make_ramanujan_delta();

    // s = 9: direct tail beyond 1e5 is ~ sum d(n) n^{-3.5} < 1e-11
    cplx s(9.0, 0.0);
    cplx direct = 0.0;
    for (long long n = 1; n <= 100000; ++n)
        direct += ramanujan_tau_double(n) * std::pow(double(n), -9.0);
    CHECK(near_rel(l_series(tau, s, p), direct, 1e-9));

    // complex point, longer sum
    s = cplx(8.5, 1.0);
    direct = 0.0;
    for (long long n = 1; n <= 100000; ++n)
        direct += ramanujan_tau_double(n) * pow_principal(cplx(double(n)), -s);
    CHECK(near_rel(l_series(tau, s, p), direct, 1e-7));
}

TEST_CASE("cusp form L-series satisfies its completed reflection") {
    // (2 pi)^{-s} Gamma(s) L(s) = (2 pi)^{s-12} Gamma(12-s) L(12-s)
    EvalPolicy p;
    CoeffSeq tau = CoeffSeq::make_ramanujan_delta();
    cplx s(7.3, 0.0);
    cplx lhs = pow_principal(cplx(2.0 * kPi), -s) * gamma(s) *
               l_series(tau, s, p);
    cplx rhs = pow_principal(cplx(2.0 * kPi), s - 12.0) * gamma(12.0 - s) *
               l_series(tau, 12.0 - s, p);
    CHECK(near_rel(lhs, rhs, 1e-9));
}

TEST_CASE("q-expansion on the imaginary axis") {
    EvalPolicy p;
    CoeffSeq tau = CoeffSeq::make_ramanujan_delta();

    // moderate y: compare against the raw q-series
    double y = 1.2;
    cplx direct = 0.0;
    for (long long n = 1; n <= 60; ++n)
        direct += ramanujan_tau_double(n) * std::exp(-2.0 * kPi * n * y);
    CHECK(near_rel(f_on_imaginary_axis(tau, y), direct, 1e-13));

    // small y: the flip path must agree with a long direct summation
    y = 0.3;
    direct = 0.0;
    for (long long n = 1; n <= 400; ++n)
        direct += ramanujan_tau_double(n) * std::exp(-2.0 * kPi * n * y);
    CHECK(near_rel(f_on_imaginary_axis(tau, y), direct, 1e-10));

    // all-ones: closed form 1/(e^{2 pi y} - 1)
    CoeffSeq ones = CoeffSeq::make_all_ones();
    CHECK(near_rel(f_on_imaginary_axis(ones, 0.7),
                   cplx(1.0 / std::expm1(2.0 * kPi * 0.7)), 1e-13));
    (void)p;
}

TEST_CASE("describe is stable and human readable") {
    CHECK(CoeffSeq::make_all_ones().describe() ==
          CoeffSeq::make_all_ones().describe());
    CHECK(CoeffSeq::make_ramanujan_delta().describe().find("12") !=
          std::string::npos);
}
