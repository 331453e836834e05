// Modular-companion functional equation layer: the H sums in both
// representations, the Mellin transform identity for the flipped form,
// the explicit continuation through the weight line, and the resulting
// trivial zeros on s2 = -l.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bizeta/complex_core.hpp"
#include "bizeta/doublezeta.hpp"
#include "bizeta/errors.hpp"
#include "bizeta/modularfe.hpp"
#include "bizeta/sequences.hpp"

using namespace bizeta;

namespace {
bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

FrickePair delta_pair() {
    return fricke_tilde(CoeffSeq::make_ramanujan_delta());
}
}  // namespace

TEST_CASE("H vanishes when the companion coefficients vanish") {
    // cusp_file with an all-zero a-tilde: every term of the double sum is 0.
    // Enough entries that the growth probe and the certified n-cutoff both
    // stay inside the file.
    EvalPolicy p;
    std::string json = R"({"kind":"cusp_file","weight":12,"level":1,"a":[1,-24,252)";
    for (int i = 0; i < 317; ++i) json += ",0";
    json += R"(],"a_tilde":[0)";
    for (int i = 0; i < 319; ++i) json += ",0";
    json += "]}";
    CoeffSeq z = CoeffSeq::from_json_text(json);
    FrickePair pair = fricke_tilde(z);
    HArgs args;
    args.pair = pair;
    args.sign = +1;
    args.s1 = cplx(1.5, 0.0);
    args.s2 = cplx(8.0, 0.0);
    args.representation = HArgs::Rep::direct;
    Eval e = h2n(args, p);
    CHECK(std::abs(e.value) < 1e-12);
}

TEST_CASE("H conjugation symmetry") {
    // real coefficients: H^-(conj s) = conj(H^+(s)).  The certified direct
    // cutoff grows like tol^{-1/sigma1}; a loose budget keeps it small.
    EvalPolicy p;
    p.tol_abs = 1e-8;
    p.tol_rel = 1e-8;
    FrickePair pair = delta_pair();
    HArgs plus;
    plus.pair = pair;
    plus.sign = +1;
    plus.s1 = cplx(1.5, 0.0);
    plus.s2 = cplx(8.0, 0.7);
    plus.representation = HArgs::Rep::direct;
    HArgs minus = plus;
    minus.sign = -1;
    minus.s1 = std::conj(plus.s1);
    minus.s2 = std::conj(plus.s2);
    Eval a = h2n(plus, p);
    Eval b = h2n(minus, p);
    CHECK(near(b.value, std::conj(a.value), 2e-7));
}

TEST_CASE("direct summation meets the contour representation") {
    EvalPolicy p;
    p.tol_abs = 1e-8;
    p.tol_rel = 1e-8;
    FrickePair pair = delta_pair();
    HArgs args;
    args.pair = pair;
    args.sign = -1;
    args.s1 = cplx(1.8, 0.0);
    args.s2 = cplx(8.5, 0.0);
    args.representation = HArgs::Rep::direct;
    Eval direct = h2n(args, p);
    args.representation = HArgs::Rep::mellin_barnes;
    Eval contour = h2n(args, p);
    CHECK(direct.region.label == Region::direct_series);
    CHECK(contour.region.label == Region::mellin_barnes);
    CHECK(near(direct.value, contour.value, 1e-7));
}

TEST_CASE("contour value does not depend on the abscissa") {
    EvalPolicy p;
    FrickePair pair = delta_pair();
    HArgs args;
    args.pair = pair;
    args.sign = +1;
    args.s1 = cplx(3.0, 0.0);
    args.s2 = cplx(8.2, 0.0);
    args.representation = HArgs::Rep::mellin_barnes;

    EvalPolicy pa = p;
    pa.mb_abscissa_c = 8.0;
    Eval a = h2n(args, pa);
    EvalPolicy pb = p;
    pb.mb_abscissa_c = 8.25;
    Eval b = h2n(args, pb);
    CHECK(std::abs(a.value - b.value) <= 10.0 * (a.err + b.err) + 1e-9);
    CHECK(near(a.value, b.value, 1e-7));
}

TEST_CASE("contour abscissa window is validated") {
    EvalPolicy p;
    FrickePair pair = delta_pair();
    HArgs args;
    args.pair = pair;
    args.sign = +1;
    args.s1 = cplx(1.2, 0.0);
    args.s2 = cplx(8.5, 0.0);
    args.representation = HArgs::Rep::mellin_barnes;
    // c = 7 satisfies the window bounds on c itself but violates
    // sigma2 < c + 1
    EvalPolicy bad = p;
    bad.mb_abscissa_c = 7.0;
    CHECK_THROWS_AS(h2n(args, bad), OutOfDomain);
    // direct representation refuses sigma1 <= 0
    args.representation = HArgs::Rep::direct;
    args.s1 = cplx(-0.5, 0.0);
    CHECK_THROWS_AS(h2n(args, p), OutOfDomain);
}

TEST_CASE("Mellin transform of the flipped form") {
    EvalPolicy p;
    FrickePair pair = delta_pair();
    FEReport r = mellin_f_tilde(pair, cplx(15.0, 0.0), cplx(7.0, 0.0), p);
    CHECK(r.pass());
    CHECK(r.rel_residual < 1e-6);

    // u below the growth line
    CHECK_THROWS_AS(
        mellin_f_tilde(pair, cplx(15.0, 0.0), cplx(6.4, 0.0), p),
        OutOfDomain);
    // s too close to u + 1
    CHECK_THROWS_AS(mellin_f_tilde(pair, cplx(8.0, 0.0), cplx(7.0, 0.0), p),
                    OutOfDomain);
}

TEST_CASE("continuation pole at the weight line") {
    // kappa - s1 - s2 + 1 = 0 is a genuine gamma pole of the continued L2
    EvalPolicy p;
    FrickePair pair = delta_pair();
    CHECK_THROWS_AS(thm2_rhs(pair, cplx(-0.5, 0.0), cplx(13.5, 0.0), p),
                    PoleAt);
}

TEST_CASE("both continuations agree below the critical strip") {
    // budget keeps the continued Psi-remainder l-sum within the tau table
    EvalPolicy p;
    p.tol_abs = 1e-8;
    p.tol_rel = 1e-8;
    FrickePair pair = delta_pair();
    cplx s1(-0.7, 0.0), s2(3.2, 0.0);
    Eval one = thm1_rhs(pair.f, s1, s2, p);
    Eval two = thm2_rhs(pair, s1, s2, p);
    CHECK(near(one.value, two.value, 1e-6));
}

TEST_CASE("trivial zeros on the non-positive integer line") {
    EvalPolicy p;
    FrickePair pair = delta_pair();
    std::vector<FEReport> reports =
        trivial_zero_scan(pair, cplx(-1.5, 0.0), 2, p);
    REQUIRE(reports.size() == 3);
    for (const FEReport& r : reports) {
        CHECK(r.pass());
        CHECK(r.rel_residual <= 1e-8);
        CHECK(r.note.find("certificates") != std::string::npos);
    }

    // empty scan
    CHECK(trivial_zero_scan(pair, cplx(-1.5, 0.0), -1, p).empty());
    // continuation region requires sigma1 < 0
    CHECK_THROWS_AS(trivial_zero_scan(pair, cplx(0.5, 0.0), 1, p),
                    OutOfDomain);
}

TEST_CASE("completed-L1 reflection") {
    EvalPolicy p;
    FrickePair pair = delta_pair();
    FEReport r = l1_star_fe_check(pair, cplx(2.0, 1.0), cplx(5.0, 0.0), p);
    CHECK(r.pass());
    CHECK(r.rel_residual < 1e-8);

    // s1 = 0 hits Gamma(s1)
    CHECK_THROWS_AS(l1_star_fe_check(pair, cplx(0.0, 0.0), cplx(5.0, 0.0), p),
                    PoleAt);
}

TEST_CASE("non-modular or odd-weight input is refused") {
    // odd weight never gets past the parser
    CHECK_THROWS_AS(CoeffSeq::from_json_text(
                        R"({"kind":"cusp_file","weight":11,"level":1,
                            "a":[1,0,0],"a_tilde":[1,0,0]})"),
                    OutOfDomain);

    // a hand-rolled pair around a non-modular sequence has weight 0
    EvalPolicy p;
    CoeffSeq fin = CoeffSeq::make_finite({cplx(1.0), cplx(2.0)});
    FrickePair pair{fin, fin};
    HArgs args;
    args.pair = pair;
    args.sign = +1;
    args.s1 = cplx(1.5, 0.0);
    args.s2 = cplx(8.0, 0.0);
    CHECK_THROWS_AS(h2n(args, p), OutOfDomain);
}
