// Command-line front end: point evaluation (eval), verification suites
// (verify), and grid sweeps (sweep).  Output is a pure function of argv and
// input files: no timestamps, LF line endings, '.' decimal separator,
// shortest round-trip float formatting.  Exit codes: 0 success / all pass,
// 2 usage, 3 domain violation, 4 numeric failure.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bizeta/tricomi.hpp"
#include "bizeta/verify.hpp"
#include "bizeta/zetas.hpp"

namespace {

using bizeta::CheckPoint;
using bizeta::CoeffSeq;
using bizeta::cplx;
using bizeta::Eval;
using bizeta::EvalPolicy;
using bizeta::FEReport;
using bizeta::FrickePair;
using nlohmann::ordered_json;

// Shortest round-trip decimal form; NaN prints as "nan".
std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

cplx parse_cplx(const std::string& s) {
    std::size_t comma = s.find(',');
    try {
        if (comma == std::string::npos)
            return cplx(std::stod(s), 0.0);
        return cplx(std::stod(s.substr(0, comma)),
                    std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected complex literal \"re,im\", got '" +
                                   s + "'");
    }
}

// Range literal "a:b:step" (inclusive of b up to rounding) or bare "v".
std::vector<double> parse_range(const std::string& s) {
    if (s.find(':') == std::string::npos) return {std::stod(s)};
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stod(tok));
    if (parts.size() != 3)
        throw CLI::ValidationError("expected range \"a:b:step\", got '" + s +
                                   "'");
    double a = parts[0], b = parts[1], step = parts[2];
    if (!(step > 0.0))
        throw CLI::ValidationError("range step must be positive in '" + s +
                                   "'");
    std::vector<double> out;
    for (double v = a; v <= b + 1e-12 * std::max(1.0, step); v += step)
        out.push_back(v);
    return out;
}

CoeffSeq load_seq(const std::string& spec) {
    if (spec == "all-ones") return CoeffSeq::make_all_ones();
    if (spec == "ramanujan-delta") return CoeffSeq::make_ramanujan_delta();
    if (spec.rfind("delta-", 0) == 0)
        return CoeffSeq::make_delta(std::stoll(spec.substr(6)));
    return CoeffSeq::from_json_file(spec);
}

FrickePair load_form(const std::string& spec) {
    if (spec == "delta")
        return fricke_tilde(CoeffSeq::make_ramanujan_delta());
    return fricke_tilde(CoeffSeq::from_json_file(spec));
}

std::vector<CheckPoint> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open points file " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<CheckPoint> out;
    for (const auto& e : doc) {
        CheckPoint p;
        if (e.contains("s1"))
            p.s1 = cplx(e["s1"][0].get<double>(), e["s1"][1].get<double>());
        if (e.contains("s2"))
            p.s2 = cplx(e["s2"][0].get<double>(), e["s2"][1].get<double>());
        if (e.contains("alpha")) p.alpha = e["alpha"].get<double>();
        out.push_back(p);
    }
    return out;
}

ordered_json value_record(const std::string& target, cplx v, double err,
                          const bizeta::RegionTag& tag) {
    ordered_json j;
    j["target"] = target;
    j["value"] = {v.real(), v.imag()};
    j["error"] = err;
    j["region"] = bizeta::to_string(tag.label);
    j["constraints"] = tag.constraints;
    return j;
}

bizeta::RegionTag simple_tag(bizeta::Region r, const std::string& c) {
    bizeta::RegionTag t;
    t.label = r;
    t.constraints = {c};
    return t;
}

struct EvalOpts {
    std::string target;
    std::string s = "2,0", s1 = "0,0", s2 = "0,0", a = "1,0", b = "2,0",
                x = "1,0";
    std::string seq = "all-ones", form = "delta", rep = "auto";
    double alpha = 1.0;
    long long n = 1;
    int sign = 1;
};

int cmd_eval(const EvalOpts& o, const EvalPolicy& policy) {
    ordered_json j;
    if (o.target == "tau") {
        j["target"] = "tau";
        j["n"] = o.n;
        if (bizeta::tau_fits_int64(o.n))
            j["value"] = bizeta::ramanujan_tau_int64(o.n);
        else
            j["value"] = bizeta::ramanujan_tau_str(o.n);
        j["exact"] = true;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (o.target == "psi") {
        bizeta::PsiResult r =
            bizeta::psi_auto(parse_cplx(o.a), parse_cplx(o.b), parse_cplx(o.x),
                             policy);
        const char* rep = r.rep == bizeta::PsiResult::Rep::integral
                              ? "integral"
                              : (r.rep == bizeta::PsiResult::Rep::transformed
                                     ? "transformed"
                                     : "asymptotic");
        j = value_record("psi", r.value, r.err,
                         simple_tag(bizeta::Region::integral_rep, rep));
        j["region"] = rep;
    } else if (o.target == "zeta") {
        cplx v = bizeta::riemann_zeta(parse_cplx(o.s));
        j = value_record("zeta", v, 1e-13 * (1.0 + std::abs(v)),
                         simple_tag(bizeta::Region::direct_series,
                                    "Euler-Maclaurin / reflection"));
    } else if (o.target == "hurwitz") {
        cplx v = bizeta::hurwitz_zeta(parse_cplx(o.s), o.alpha);
        j = value_record("hurwitz", v, 1e-11 * (1.0 + std::abs(v)),
                         simple_tag(bizeta::Region::direct_series,
                                    "Euler-Maclaurin / reflection"));
    } else if (o.target == "lerch") {
        cplx v = bizeta::lerch_phi(parse_cplx(o.s), o.alpha);
        j = value_record("lerch", v, 1e-10 * (1.0 + std::abs(v)),
                         simple_tag(bizeta::Region::direct_series,
                                    "windowed direct / rational-alpha"));
    } else if (o.target == "lseries") {
        CoeffSeq seq = load_seq(o.seq);
        cplx v = bizeta::l_series(seq, parse_cplx(o.s), policy);
        j = value_record("lseries", v, 1e-10 * (1.0 + std::abs(v)),
                         simple_tag(bizeta::Region::direct_series,
                                    seq.describe()));
    } else if (o.target == "l2") {
        CoeffSeq seq = load_seq(o.seq);
        Eval e = bizeta::l2_direct(seq, parse_cplx(o.s1), parse_cplx(o.s2),
                                   policy);
        j = value_record("l2", e.value, e.err, e.region);
    } else if (o.target == "l1") {
        CoeffSeq seq = load_seq(o.seq);
        Eval e = bizeta::l1_term(seq, parse_cplx(o.s1), parse_cplx(o.s2),
                                 policy);
        j = value_record("l1", e.value, e.err, e.region);
    } else if (o.target == "fpm") {
        CoeffSeq seq = load_seq(o.seq);
        Eval e;
        if (o.rep == "direct")
            e = bizeta::f_pm_direct(seq, o.sign, parse_cplx(o.s1),
                                    parse_cplx(o.s2), policy);
        else
            e = bizeta::f_pm(seq, o.sign, parse_cplx(o.s1), parse_cplx(o.s2),
                             policy);
        j = value_record("fpm", e.value, e.err, e.region);
    } else if (o.target == "h2n") {
        bizeta::HArgs ha;
        ha.pair = load_form(o.form);
        ha.sign = o.sign;
        ha.s1 = parse_cplx(o.s1);
        ha.s2 = parse_cplx(o.s2);
        ha.representation = o.rep == "direct"
                                ? bizeta::HArgs::Rep::direct
                                : (o.rep == "mb"
                                       ? bizeta::HArgs::Rep::mellin_barnes
                                       : bizeta::HArgs::Rep::auto_rep);
        Eval e = bizeta::h2n(ha, policy);
        j = value_record("h2n", e.value, e.err, e.region);
    } else {
        std::cerr << "unknown eval target '" << o.target << "'\n";
        return 2;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

struct VerifyOpts {
    std::string check;
    std::string seq = "all-ones", form = "delta";
    std::string points_file, out_file;
    std::vector<long long> n_list = {1, 2, 3};
    std::vector<std::string> s1_list;
    int lmax = 2;
};

int cmd_verify(const VerifyOpts& o, const EvalPolicy& policy) {
    std::vector<CheckPoint> pts;
    bool have_pts = !o.points_file.empty();
    if (have_pts) pts = load_points(o.points_file);

    std::vector<FEReport> reports;
    if (o.check == "riemann") {
        reports = bizeta::check_classical(
            "riemann", have_pts ? pts : bizeta::default_riemann_points(),
            policy);
    } else if (o.check == "hurwitz") {
        reports = bizeta::check_classical(
            "hurwitz", have_pts ? pts : bizeta::default_hurwitz_points(),
            policy);
    } else if (o.check == "euler-double") {
        reports = bizeta::check_classical(
            "euler_double",
            have_pts ? pts : bizeta::default_euler_double_points(), policy);
    } else if (o.check == "thm1") {
        reports = bizeta::check_thm1(load_seq(o.seq),
                                     have_pts ? pts
                                              : bizeta::default_thm1_grid(),
                                     policy);
    } else if (o.check == "thm2") {
        reports = bizeta::check_thm2(load_form(o.form),
                                     have_pts ? pts
                                              : bizeta::default_thm2_grid(),
                                     policy);
    } else if (o.check == "cor1") {
        reports = bizeta::check_cor1(o.n_list,
                                     have_pts ? pts
                                              : bizeta::default_thm1_grid(),
                                     policy);
    } else if (o.check == "cor2") {
        std::vector<cplx> s1s;
        for (const auto& s : o.s1_list) s1s.push_back(parse_cplx(s));
        if (s1s.empty()) s1s = {cplx(-1.5, 0.0), cplx(-2.0, 0.3)};
        reports = bizeta::check_cor2(load_form(o.form), s1s, o.lmax, policy);
    } else if (o.check == "mellin-lemma") {
        reports = bizeta::check_mellin_lemma(
            load_form(o.form),
            have_pts ? pts : bizeta::default_mellin_lemma_points(), policy);
    } else if (o.check == "l1star-fe") {
        reports = bizeta::check_l1star(
            load_form(o.form), have_pts ? pts : bizeta::default_l1star_points(),
            policy);
    } else if (o.check == "psi-asymp") {
        reports = bizeta::check_psi_coherence(policy);
    } else if (o.check == "prop2") {
        reports = bizeta::check_prop2(policy);
    } else {
        std::cerr << "unknown verify check '" << o.check << "'\n";
        return 2;
    }

    std::string json = bizeta::reports_to_json(reports);
    if (!o.out_file.empty()) {
        std::ofstream out(o.out_file, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file " << o.out_file << "\n";
            return 2;
        }
        out << json;
    } else {
        std::cout << json;
    }

    int nfail = 0, nskip = 0;
    for (const FEReport& r : reports) {
        if (r.status == "fail") ++nfail;
        if (r.status == "skipped") ++nskip;
    }
    if (nskip > 0)
        std::cerr << "warning: " << nskip << " point(s) skipped (out of "
                  << reports.size() << ")\n";
    if (nfail > 0) {
        std::cerr << nfail << " point(s) failed\n";
        return 1;
    }
    return 0;
}

struct SweepOpts {
    std::string target = "l2";
    std::string seq = "all-ones";
    std::string s1_re = "0:0:1", s1_im = "0:0:1", s2_re = "0:0:1",
                s2_im = "0:0:1";
    std::string out_file;
};

int cmd_sweep(const SweepOpts& o, const EvalPolicy& policy) {
    if (o.target != "l2" && o.target != "l1" && o.target != "fpm" &&
        o.target != "thm1")
        throw CLI::ValidationError("unknown sweep target '" + o.target + "'");
    std::vector<double> r1 = parse_range(o.s1_re), i1 = parse_range(o.s1_im),
                        r2 = parse_range(o.s2_re), i2 = parse_range(o.s2_im);
    CoeffSeq seq = load_seq(o.seq);
    bool modular = seq.modular();
    FrickePair pair;
    if (modular) pair = fricke_tilde(seq);

    struct Cell {
        cplx s1, s2;
    };
    std::vector<Cell> cells;
    for (double a : r1)
        for (double b : i1)
            for (double c : r2)
                for (double d : i2)
                    cells.push_back({cplx(a, b), cplx(c, d)});

    std::vector<std::string> rows(cells.size());
    // Continued L2: direct series where it converges, else the functional
    // equation (second form for modular sequences, first otherwise).
    auto l2_continued = [&](cplx s1, cplx s2) -> Eval {
        try {
            return bizeta::l2_direct(seq, s1, s2, policy);
        } catch (const bizeta::OutOfDomain&) {
        }
        if (modular) return bizeta::thm2_rhs(pair, s1, s2, policy);
        return bizeta::thm1_rhs(seq, s1, s2, policy);
    };
    // Cells are independent; rows land in preassigned slots so the emitted
    // order stays row-major regardless of scheduling.
    bizeta::parallel_for(cells.size(), [&](std::size_t k) {
        cplx s1 = cells[k].s1, s2 = cells[k].s2;
        std::string row = fmt(s1.real()) + "," + fmt(s1.imag()) + "," +
                          fmt(s2.real()) + "," + fmt(s2.imag()) + ",";
        try {
            cplx v;
            double err;
            std::string region;
            if (o.target == "l2") {
                Eval e = l2_continued(s1, s2);
                v = e.value;
                err = e.err;
                region = bizeta::to_string(e.region.label);
            } else if (o.target == "l1") {
                Eval e = bizeta::l1_term(seq, s1, s2, policy);
                v = e.value;
                err = e.err;
                region = bizeta::to_string(e.region.label);
            } else if (o.target == "fpm") {
                Eval e = bizeta::f_pm(seq, +1, s1, s2, policy);
                v = e.value;
                err = e.err;
                region = bizeta::to_string(e.region.label);
            } else {
                Eval lhs = bizeta::l2_direct(seq, s1, s2, policy);
                Eval rhs = bizeta::thm1_rhs(seq, s1, s2, policy);
                v = lhs.value - rhs.value;
                err = lhs.err + rhs.err;
                region = bizeta::to_string(rhs.region.label);
            }
            row += fmt(v.real()) + "," + fmt(v.imag()) + "," + fmt(err) + "," +
                   region;
        } catch (const bizeta::NumericError&) {
            // per-cell failure (pole, domain, or numeric): error row
            double nan = std::numeric_limits<double>::quiet_NaN();
            row += fmt(nan) + "," + fmt(nan) + "," + fmt(nan) + ",error";
        }
        rows[k] = row;
    });

    std::ostringstream csv;
    csv << "s1_re,s1_im,s2_re,s2_im,value_re,value_im,abs_err,region\n";
    for (const std::string& r : rows) csv << r << "\n";
    if (!o.out_file.empty()) {
        std::ofstream out(o.out_file, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file " << o.out_file << "\n";
            return 2;
        }
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double zeta-function evaluator"};
    app.require_subcommand(1);

    EvalPolicy policy;
    app.add_option("--tol-abs", policy.tol_abs, "absolute tolerance");
    app.add_option("--tol-rel", policy.tol_rel, "relative tolerance");
    app.add_option("--order", policy.asymp_order_M,
                   "force asymptotic order M (0 = auto)");
    app.add_option("--abscissa", policy.mb_abscissa_c,
                   "Mellin-Barnes abscissa c (0 = auto midpoint)");
    app.add_option("--mb-height", policy.mb_height_T,
                   "Mellin-Barnes truncation height T");

    EvalOpts eo;
    CLI::App* ev = app.add_subcommand("eval", "evaluate one target at a point");
    ev->add_option("target", eo.target,
                   "psi|zeta|hurwitz|lerch|l2|l1|fpm|h2n|lseries|tau")
        ->required();
    ev->add_option("--s", eo.s, "complex s as re,im");
    ev->add_option("--s1", eo.s1, "complex s1 as re,im");
    ev->add_option("--s2", eo.s2, "complex s2 as re,im");
    ev->add_option("--a", eo.a, "Psi parameter a");
    ev->add_option("--b", eo.b, "Psi parameter b");
    ev->add_option("--x", eo.x, "Psi argument x");
    ev->add_option("--alpha", eo.alpha, "Hurwitz/Lerch parameter");
    ev->add_option("--n", eo.n, "index n");
    ev->add_option("--seq", eo.seq,
                   "all-ones|delta-N|ramanujan-delta|file.json");
    ev->add_option("--form", eo.form, "delta|file.json");
    ev->add_option("--sign", eo.sign, "+1 or -1");
    ev->add_option("--rep", eo.rep, "auto|direct|asymp|mb");

    VerifyOpts vo;
    CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("check", vo.check,
                   "riemann|hurwitz|euler-double|thm1|thm2|cor1|cor2|"
                   "mellin-lemma|l1star-fe|psi-asymp|prop2")
        ->required();
    vf->add_option("--seq", vo.seq, "sequence for thm1");
    vf->add_option("--form", vo.form, "cusp form for thm2/cor2/mellin/l1star");
    vf->add_option("--points", vo.points_file, "JSON points file");
    vf->add_option("--out", vo.out_file, "report output path (default stdout)");
    vf->add_option("--n", vo.n_list, "indices for cor1");
    vf->add_option("--s1", vo.s1_list, "s1 values for cor2 (re,im)");
    vf->add_option("--lmax", vo.lmax, "largest trivial-zero index for cor2");

    SweepOpts so;
    CLI::App* sw = app.add_subcommand("sweep", "CSV sweep over a rectangle");
    sw->add_option("--target", so.target, "l2|l1|fpm|thm1");
    sw->add_option("--seq", so.seq,
                   "all-ones|delta-N|ramanujan-delta|file.json");
    sw->add_option("--s1-re", so.s1_re, "range a:b:step");
    sw->add_option("--s1-im", so.s1_im, "range a:b:step");
    sw->add_option("--s2-re", so.s2_re, "range a:b:step");
    sw->add_option("--s2-im", so.s2_im, "range a:b:step");
    sw->add_option("--out", so.out_file, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return (code == 0) ? 0 : 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(eo, policy);
        if (vf->parsed()) return cmd_verify(vo, policy);
        if (sw->parsed()) return cmd_sweep(so, policy);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bizeta::PoleAt& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const bizeta::OutOfDomain& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const bizeta::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
