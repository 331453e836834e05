// Verification harness: fixture grid hygiene (sizes and margins), the
// classical cross-checks, skip semantics at singular points, and the
// deterministic JSON serialization of residual reports.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bizeta/complex_core.hpp"
#include "bizeta/sequences.hpp"
#include "bizeta/verify.hpp"

using namespace bizeta;

TEST_CASE("default grid sizes") {
    CHECK(default_riemann_points().size() == 20);
    CHECK(default_hurwitz_points().size() == 6);
    CHECK(default_euler_double_points().size() == 3);
    CHECK(default_thm1_grid().size() == 10);
    CHECK(default_thm2_grid().size() == 6);
    CHECK(default_h2n_overlap_grid().size() == 6);
    CHECK(default_mellin_lemma_points().size() == 3);
    CHECK(default_l1star_points().size() == 3);
    CHECK(default_prop2_points().size() == 3);
}

TEST_CASE("grid margins stay inside the proven regions") {
    // continuation grid: sigma1 < 0 with margin, convergent s2 side,
    // joint abscissa above the double-series boundary
    for (const CheckPoint& pt : default_thm1_grid()) {
        CHECK(pt.s1.real() <= -0.1);
        CHECK(pt.s1.real() >= -2.0);
        CHECK(pt.s2.real() >= 2.5);
        CHECK(pt.s2.real() <= 4.0);
        CHECK(pt.s1.real() + pt.s2.real() >= 2.1);
    }
    for (const CheckPoint& pt : default_thm2_grid()) {
        CHECK(pt.s1.real() <= -0.1);
        CHECK(pt.s2.real() <= 5.4);  // below (kappa-1)/2 at kappa = 12
    }
    for (const CheckPoint& pt : default_hurwitz_points()) {
        CHECK(pt.s1.real() < 0.0);
        CHECK((pt.alpha == 1.0 / 3.0 || pt.alpha == 0.25));
    }
    for (const CheckPoint& pt : default_h2n_overlap_grid()) {
        CHECK(pt.s1.real() > 0.1);               // direct needs sigma1 > 0
        CHECK(pt.s2.real() > 7.6);               // direct needs sigma2 > 7.5
        // contour window nonempty: sigma1+sigma2-1 > max(6.5, sigma2-1)
        CHECK(pt.s1.real() + pt.s2.real() - 1.0 >
              std::max(6.5, pt.s2.real() - 1.0) + 0.02);
    }
}

TEST_CASE("classical reflection checks pass on the default grids") {
    EvalPolicy p;
    for (const FEReport& r :
         check_classical("riemann", default_riemann_points(), p)) {
        CHECK(r.pass());
        CHECK(r.abs_residual < 1e-10);
    }
    for (const FEReport& r :
         check_classical("hurwitz", default_hurwitz_points(), p)) {
        CHECK(r.pass());
    }
}

TEST_CASE("singular fixture points are skipped, not passed") {
    EvalPolicy p;
    std::vector<CheckPoint> pts;
    CheckPoint bad;
    bad.s1 = cplx(1.0, 0.0);  // zeta pole
    pts.push_back(bad);
    CheckPoint good;
    good.s1 = cplx(2.2, 0.0);
    pts.push_back(good);
    std::vector<FEReport> rs = check_classical("riemann", pts, p);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].status == "skipped");
    CHECK_FALSE(rs[0].pass());
    CHECK(rs[1].status == "pass");
}

TEST_CASE("first functional equation on a subgrid") {
    EvalPolicy p;
    std::vector<CheckPoint> pts;
    for (int i : {0, 3, 5}) pts.push_back(default_thm1_grid()[size_t(i)]);
    CoeffSeq ones = CoeffSeq::make_all_ones();
    for (const FEReport& r : check_thm1(ones, pts, p)) {
        CHECK(r.pass());
        CHECK(r.tolerance == doctest::Approx(1e-7));
    }
}

TEST_CASE("single-series reduction with a nontrivial shift") {
    EvalPolicy p;
    std::vector<CheckPoint> pts = {default_thm1_grid()[2]};
    for (const FEReport& r : check_cor1({2}, pts, p)) {
        CHECK(r.pass());
        CHECK(r.note.find("n = 2") != std::string::npos);
    }
}

TEST_CASE("report json is deterministic and schema-stable") {
    EvalPolicy p;
    std::vector<CheckPoint> pts = {default_riemann_points()[0],
                                   default_riemann_points()[1]};
    std::string a = reports_to_json(check_classical("riemann", pts, p));
    std::string b = reports_to_json(check_classical("riemann", pts, p));
    CHECK(a == b);

    // schema: required keys present, in fixed order
    const char* keys[] = {"\"check\"",        "\"point\"",
                          "\"lhs\"",          "\"rhs\"",
                          "\"abs_residual\"", "\"rel_residual\"",
                          "\"status\"",       "\"lhs_region\"",
                          "\"rhs_region\"",   "\"tolerance\""};
    size_t pos = 0;
    for (const char* k : keys) {
        size_t found = a.find(k);
        REQUIRE(found != std::string::npos);
        CHECK(found > pos);
        pos = found;
    }
    // LF endings only, trailing newline
    CHECK(a.find('\r') == std::string::npos);
    CHECK(a.back() == '\n');
}
