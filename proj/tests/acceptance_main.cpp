// Acceptance gate: one line per criterion, PASS/FAIL, exit code equals the
// number of failed criteria.  Criterion 11 (byte-identical verify output)
// shells out to the CLI binary; pass its path as argv[1].

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bizeta/complex_core.hpp"
#include "bizeta/doublezeta.hpp"
#include "bizeta/errors.hpp"
#include "bizeta/modularfe.hpp"
#include "bizeta/sequences.hpp"
#include "bizeta/verify.hpp"

using namespace bizeta;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta3 = 1.2020569031595942854;

int failures = 0;

void run(int n, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        why = std::string(" (") + e.what() + ")";
    }
    if (ok) {
        std::printf("PASS criterion %d: %s\n", n, what.c_str());
    } else {
        std::printf("FAIL criterion %d: %s%s\n", n, what.c_str(), why.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

bool all_pass(const std::vector<FEReport>& rs) {
    for (const FEReport& r : rs)
        if (!r.pass()) return false;
    return !rs.empty();
}

double worst_residual(const std::vector<FEReport>& rs) {
    double w = 0.0;
    for (const FEReport& r : rs)
        w = std::max(w, std::min(r.abs_residual, r.rel_residual));
    return w;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./bizeta";
    EvalPolicy policy;
    FrickePair delta = fricke_tilde(CoeffSeq::make_ramanujan_delta());

    run(1, "classical zeta reflection formulas", [&] {
        auto r = check_classical("riemann", default_riemann_points(), policy);
        auto h = check_classical("hurwitz", default_hurwitz_points(), policy);
        return all_pass(r) && all_pass(h) && worst_residual(r) < 1e-10 &&
               worst_residual(h) < 1e-8;
    });

    run(2, "confluent-Psi transformation, reconstruction, closed form", [&] {
        return all_pass(check_psi_coherence(policy));
    });

    run(3, "double-series integral representation", [&] {
        return all_pass(check_prop2(policy, 1e-5));
    });

    run(4, "first functional equation across coefficient kinds", [&] {
        std::vector<CheckPoint> grid = default_thm1_grid();
        if (!all_pass(check_thm1(CoeffSeq::make_all_ones(), grid, policy,
                                 1e-7)))
            return false;
        for (long long n : {1LL, 2LL, 3LL})
            if (!all_pass(
                    check_thm1(CoeffSeq::make_delta(n), grid, policy, 1e-7)))
                return false;
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<cplx> coeffs;
        for (int i = 0; i < 8; ++i) coeffs.emplace_back(u(rng), u(rng));
        if (!all_pass(check_thm1(CoeffSeq::make_finite(coeffs), grid, policy,
                                 1e-7)))
            return false;
        // independent classical assembly for the all-ones case
        auto ed = check_classical("euler_double", default_euler_double_points(),
                                  policy);
        return all_pass(ed) && worst_residual(ed) < 1e-10;
    });

    run(5, "special-value closed forms", [&] {
        CoeffSeq ones = CoeffSeq::make_all_ones();
        cplx a = l2_direct(ones, cplx(1.0), cplx(2.0), policy).value;
        cplx b = l2_direct(ones, cplx(2.0), cplx(2.0), policy).value;
        cplx c = l2_single_series(1, cplx(2.0), cplx(2.0), policy).value;
        return std::abs(a - kZeta3) < 1e-10 &&
               std::abs(b - std::pow(kPi, 4) / 120.0) < 1e-10 &&
               std::abs(c - (kPi * kPi / 3.0 - 3.0)) < 1e-10;
    });

    run(6, "second functional equation and contour representation", [&] {
        if (!all_pass(check_thm2(delta, default_thm2_grid(), policy, 1e-6)))
            return false;
        if (!all_pass(check_h2n_overlap(delta, default_h2n_overlap_grid(),
                                        policy, 1e-6)))
            return false;
        // abscissa-shift invariance of the contour integral
        HArgs args;
        args.pair = delta;
        args.sign = +1;
        args.s1 = cplx(3.0, 0.0);
        args.s2 = cplx(8.2, 0.0);
        args.representation = HArgs::Rep::mellin_barnes;
        EvalPolicy pa = policy;
        pa.mb_abscissa_c = 8.0;
        EvalPolicy pb = policy;
        pb.mb_abscissa_c = 8.25;
        Eval ea = h2n(args, pa);
        Eval eb = h2n(args, pb);
        return std::abs(ea.value - eb.value) <=
               std::max(3.0 * (ea.err + eb.err), 1e-10);
    });

    run(7, "Mellin transform identity for the flipped form", [&] {
        return all_pass(check_mellin_lemma(delta, default_mellin_lemma_points(),
                                           policy, 1e-6));
    });

    run(8, "trivial zeros on the non-positive integer line", [&] {
        auto rs = check_cor2(delta, {cplx(-1.5, 0.0), cplx(-2.0, 0.3)}, 2,
                             policy, 1e-8);
        return rs.size() == 6 && all_pass(rs);
    });

    run(9, "completed-L1 reflection formula", [&] {
        return all_pass(
            check_l1star(delta, default_l1star_points(), policy, 1e-8));
    });

    run(10, "coefficient arithmetic invariants", [&] {
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
            if (ramanujan_tau_str(m * n) != to_dec(prod)) return false;
        }
        // square-root cancellation bound at primes: tau(p)^2 <= 4 p^11,
        // exact integer comparison
        for (long long p = 2; p <= 200; ++p) {
            bool prime = true;
            for (long long d = 2; d * d <= p; ++d)
                if (p % d == 0) prime = false;
            if (!prime) continue;
            __int128 t = ramanujan_tau_int64(p);
            __int128 b = 4;
            for (int i = 0; i < 11; ++i) b *= p;
            if (t * t > b) return false;
        }
        // refinement of the double series over a finite coefficient list
        std::vector<cplx> coeffs = {cplx(2.0), cplx(-1.0, 1.0), cplx(0.5),
                                    cplx(0.0), cplx(0.0, 3.0)};
        CoeffSeq fin = CoeffSeq::make_finite(coeffs);
        for (cplx s1 : {cplx(1.2, 0.0), cplx(2.0, 0.5)}) {
            cplx s2 = (s1.real() < 1.5) ? cplx(2.6, 0.0) : cplx(3.1, -0.2);
            cplx whole = l2_direct(fin, s1, s2, policy).value;
            cplx refined = 0.0;
            for (long long n = 1; n <= 5; ++n)
                refined +=
                    coeffs[size_t(n - 1)] *
                    l2_single_series(n, s1, s2, policy).value;
            if (std::abs(whole - refined) > 1e-12) return false;
        }
        return true;
    });

    run(11, "byte-identical verification output across runs", [&] {
        const std::string out1 = "acceptance_run1.json";
        const std::string out2 = "acceptance_run2.json";
        std::string cmd1 =
            cli + " verify thm1 --seq all-ones --out " + out1;
        std::string cmd2 =
            cli + " verify thm1 --seq all-ones --out " + out2;
        if (std::system(cmd1.c_str()) != 0) return false;
        if (std::system(cmd2.c_str()) != 0) return false;
        std::string a = slurp(out1);
        std::string b = slurp(out2);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        return !a.empty() && a == b;
    });

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
