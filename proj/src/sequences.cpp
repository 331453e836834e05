#include "bizeta/sequences.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <utility>

#include "bizeta/zetas.hpp"
#include "json.hpp"

namespace bizeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long long kTauMax = 100000;

std::mutex g_tau_mutex;
std::vector<mpz_class> g_tau;  // g_tau[i] = coefficient of q^i in eta^24
long long g_tau_limit = 0;

// Coefficients of prod (1-q^m)^24 up to q^{limit-1}, exactly.  The cube of
// the product is the sparse series sum_k (-1)^k (2k+1) q^{k(k+1)/2}; eight
// copies of it are combined by seven dense-by-sparse multiplications.
void build_tau_locked(long long need) {
    long long lim = g_tau_limit > 0 ? g_tau_limit : 10000;
    while (lim < need) lim *= 2;
    lim = std::min(lim, kTauMax);
    std::vector<std::pair<long long, long>> sparse;
    for (long long k = 0;; ++k) {
        const long long e = k * (k + 1) / 2;
        if (e >= lim) break;
        sparse.emplace_back(e, (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1));
    }
    std::vector<mpz_class> p(lim), q(lim);
    for (const auto& [e, c] : sparse) p[e] = c;
    for (int iter = 0; iter < 7; ++iter) {
        for (auto& v : q) v = 0;
        for (const auto& [e, c] : sparse) {
            const unsigned long cu = static_cast<unsigned long>(std::labs(c));
            for (long long i = 0; i + e < lim; ++i) {
                if (mpz_sgn(p[i].get_mpz_t()) == 0) continue;
                if (c > 0)
                    mpz_addmul_ui(q[i + e].get_mpz_t(), p[i].get_mpz_t(), cu);
                else
                    mpz_submul_ui(q[i + e].get_mpz_t(), p[i].get_mpz_t(), cu);
            }
        }
        std::swap(p, q);
    }
    g_tau = std::move(p);
    g_tau_limit = lim;
}

mpz_class tau_exact(long long n) {
    if (n < 1 || n > kTauMax)
        throw OutOfDomain("ramanujan_tau: supported for 1 <= n <= 100000");
    std::lock_guard<std::mutex> lock(g_tau_mutex);
    if (n > g_tau_limit) build_tau_locked(n);
    return g_tau[n - 1];
}

cplx parse_coeff(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw OutOfDomain("coefficient entries must be numbers or [re,im] pairs");
}

cplx i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// Growth constant C with |a(n)| <= C n^{(kappa-1)/2 + 0.01}, fitted over
// the first 100 coefficients with a 3x safety factor.
double growth_constant(const CoeffSeq& seq) {
    const double mu = (seq.kappa() - 1.0) / 2.0 + 0.01;
    double c = 1e-30;
    const long long top =
        seq.finite_support() > 0 ? seq.finite_support() : 100;
    for (long long n = 1; n <= std::min<long long>(top, 100); ++n)
        c = std::max(c, std::abs(seq.a(n)) / std::pow(n, mu));
    return 3.0 * c;
}

}  // namespace

std::string ramanujan_tau_str(long long n) { return tau_exact(n).get_str(); }

bool tau_fits_int64(long long n) {
    return mpz_fits_slong_p(tau_exact(n).get_mpz_t()) != 0;
}

long long ramanujan_tau_int64(long long n) {
    const mpz_class t = tau_exact(n);
    if (!mpz_fits_slong_p(t.get_mpz_t()))
        throw NumericError("ramanujan_tau_int64: value exceeds 64 bits");
    return mpz_get_si(t.get_mpz_t());
}

double ramanujan_tau_double(long long n) { return tau_exact(n).get_d(); }

CoeffSeq CoeffSeq::make_all_ones() {
    CoeffSeq s;
    s.kind_ = Kind::all_ones;
    s.kappa_ = 1.0;
    return s;
}

CoeffSeq CoeffSeq::make_delta(long long n0) {
    if (n0 < 1) throw OutOfDomain("make_delta: requires n0 >= 1");
    CoeffSeq s;
    s.kind_ = Kind::delta;
    s.kappa_ = 1.0;
    s.delta_n_ = n0;
    return s;
}

CoeffSeq CoeffSeq::make_finite(std::vector<cplx> coeffs, double kappa) {
    CoeffSeq s;
    s.kind_ = Kind::finite;
    s.kappa_ = kappa;
    s.coeffs_ = std::move(coeffs);
    return s;
}

CoeffSeq CoeffSeq::make_ramanujan_delta() {
    CoeffSeq s;
    s.kind_ = Kind::ramanujan_delta;
    s.kappa_ = 12.0;
    s.weight_ = 12;
    s.level_ = 1;
    return s;
}

CoeffSeq CoeffSeq::from_json_text(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "all_ones") return make_all_ones();
    if (kind == "delta") return make_delta(j.at("n").get<long long>());
    if (kind == "ramanujan_delta") return make_ramanujan_delta();
    if (kind == "finite") {
        std::vector<cplx> coeffs;
        for (const auto& e : j.at("coeffs")) coeffs.push_back(parse_coeff(e));
        const double kappa = j.value("kappa", 1.0);
        return make_finite(std::move(coeffs), kappa);
    }
    if (kind == "cusp_file") {
        CoeffSeq s;
        s.kind_ = Kind::cusp_file;
        s.weight_ = j.at("weight").get<int>();
        s.level_ = j.at("level").get<long>();
        s.kappa_ = s.weight_;
        if (s.weight_ < 2 || s.weight_ % 2 != 0 || s.level_ < 1)
            throw OutOfDomain("cusp_file: weight must be even >= 2, level >= 1");
        for (const auto& e : j.at("a")) s.coeffs_.push_back(parse_coeff(e));
        if (j.contains("a_tilde")) {
            for (const auto& e : j.at("a_tilde"))
                s.coeffs_tilde_.push_back(parse_coeff(e));
            s.tilde_from_file_ = true;
        }
        return s;
    }
    throw OutOfDomain("unknown sequence kind: " + kind);
}

CoeffSeq CoeffSeq::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutOfDomain("cannot open sequence file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

long long CoeffSeq::finite_support() const {
    switch (kind_) {
        case Kind::delta: return delta_n_;
        case Kind::finite: return static_cast<long long>(coeffs_.size());
        default: return 0;
    }
}

cplx CoeffSeq::a(long long n) const {
    if (n < 1) throw OutOfDomain("a(n): requires n >= 1");
    switch (kind_) {
        case Kind::all_ones: return {1.0, 0.0};
        case Kind::delta: return n == delta_n_ ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        case Kind::finite:
            return n <= static_cast<long long>(coeffs_.size())
                       ? coeffs_[n - 1]
                       : cplx{0.0, 0.0};
        case Kind::ramanujan_delta: return {ramanujan_tau_double(n), 0.0};
        case Kind::cusp_file:
            if (n > static_cast<long long>(coeffs_.size()))
                throw OutOfDomain(
                    "cusp_file: coefficient index beyond file length");
            return coeffs_[n - 1];
    }
    throw OutOfDomain("a(n): unknown kind");
}

bool CoeffSeq::has_tilde() const {
    if (kind_ == Kind::ramanujan_delta) return true;
    if (kind_ == Kind::cusp_file) return level_ == 1 || tilde_from_file_;
    return false;
}

cplx CoeffSeq::a_tilde(long long n) const {
    if (kind_ == Kind::ramanujan_delta) return a(n);
    if (kind_ == Kind::cusp_file) {
        if (tilde_from_file_) {
            if (n < 1 || n > static_cast<long long>(coeffs_tilde_.size()))
                throw OutOfDomain(
                    "cusp_file: tilde coefficient index beyond file length");
            return coeffs_tilde_[n - 1];
        }
        if (level_ == 1) return a(n);  // Fricke involution fixes level 1
    }
    throw MissingTildeData("a_tilde: no Fricke companion for " + describe());
}

std::string CoeffSeq::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::all_ones: os << "all_ones"; break;
        case Kind::delta: os << "delta(n0=" << delta_n_ << ")"; break;
        case Kind::finite:
            os << "finite(len=" << coeffs_.size() << ",kappa=" << kappa_ << ")";
            break;
        case Kind::ramanujan_delta: os << "ramanujan_delta(weight=12)"; break;
        case Kind::cusp_file:
            os << "cusp_file(weight=" << weight_ << ",level=" << level_
               << ",len=" << coeffs_.size()
               << (tilde_from_file_ ? ",tilde" : "") << ")";
            break;
    }
    return os.str();
}

FrickePair fricke_tilde(const CoeffSeq& seq) {
    if (!seq.modular())
        throw MissingTildeData("fricke_tilde: " + seq.describe() +
                               " is not modular");
    if (!seq.has_tilde())
        throw MissingTildeData("fricke_tilde: no companion data for " +
                               seq.describe());
    if (seq.kind() == CoeffSeq::Kind::ramanujan_delta ||
        (seq.level() == 1 && !seq.tilde_from_file_))
        return FrickePair{seq, seq};  // the involution fixes level 1
    // Explicit companion data: swap the coefficient roles.  For even weight
    // the involution is self-inverse, so the companion of the companion is
    // the original list.
    CoeffSeq tilde = seq;
    std::swap(tilde.coeffs_, tilde.coeffs_tilde_);
    return FrickePair{seq, tilde};
}

cplx a_c(const CoeffSeq& seq, cplx c, long long l) {
    if (l < 1) throw OutOfDomain("a_c: requires l >= 1");
    cplx sum{0.0, 0.0};
    for (long long n = 1; n * n <= l; ++n) {
        if (l % n != 0) continue;
        sum += pow_principal(cplx(n, 0.0), c) * seq.a(n);
        const long long m = l / n;
        if (m != n) sum += pow_principal(cplx(m, 0.0), c) * seq.a(m);
    }
    return sum;
}

cplx a_c0(const CoeffSeq& seq, cplx c, long long l) {
    if (l < 1) throw OutOfDomain("a_c0: requires l >= 1");
    cplx sum{0.0, 0.0};
    for (long long m = 1; m * m <= l; ++m) {
        if (l % m != 0) continue;
        const long long n = l / m;
        sum += pow_principal(cplx(m, 0.0), c) * seq.a(n);
        if (m != n) sum += pow_principal(cplx(n, 0.0), c) * seq.a(m);
    }
    return sum;
}

std::vector<cplx> a_c_table(const CoeffSeq& seq, cplx c, long long lmax) {
    if (lmax < 1) throw OutOfDomain("a_c_table: requires lmax >= 1");
    std::vector<cplx> table(lmax + 1, cplx{0.0, 0.0});
    const long long support = seq.finite_support();
    const long long top = support > 0 ? std::min(support, lmax) : lmax;
    if (support == 0 && seq.kind() == CoeffSeq::Kind::ramanujan_delta &&
        lmax > kTauMax)
        throw OutOfDomain("a_c_table: tau coefficients end at 1e5");
    for (long long n = 1; n <= top; ++n) {
        const cplx an = seq.a(n);
        if (an == cplx{0.0, 0.0}) continue;
        const cplx w = pow_principal(cplx(n, 0.0), c) * an;
        for (long long l = n; l <= lmax; l += n) table[l] += w;
    }
    return table;
}

cplx l_series(const CoeffSeq& seq, cplx s, const EvalPolicy& policy) {
    switch (seq.kind()) {
        case CoeffSeq::Kind::all_ones: return riemann_zeta(s);
        case CoeffSeq::Kind::delta:
            return pow_principal(cplx(seq.finite_support(), 0.0), -s);
        case CoeffSeq::Kind::finite: {
            cplx sum{0.0, 0.0};
            for (long long n = 1; n <= seq.finite_support(); ++n)
                sum += seq.a(n) * pow_principal(cplx(n, 0.0), -s);
            return sum;
        }
        default: break;
    }
    const double kappa = seq.kappa();
    if (!seq.has_tilde()) {
        // No companion: only the absolutely convergent half-plane.
        const double sigma = s.real();
        if (sigma <= (kappa + 1.0) / 2.0 + 0.5)
            throw OutOfDomain(
                "l_series: no continuation data and Re s too small");
        const double mu = (kappa - 1.0) / 2.0 + 0.01;
        const double c0 = growth_constant(seq);
        cplx sum{0.0, 0.0};
        for (long long n = 1;; ++n) {
            sum += seq.a(n) * pow_principal(cplx(n, 0.0), -s);
            const double tail =
                c0 * std::pow(n, mu + 1.0 - sigma) / (sigma - mu - 1.0);
            if (tail < policy.tol_abs) break;
            if (n > 2'000'000)
                throw OutOfDomain("l_series: direct tail will not converge");
        }
        return sum;
    }
    // Completed-series evaluation through the incomplete gamma:
    //   (2pi)^{-s} Gamma(s) L(s) =
    //     sum a(n) (2pi n)^{-s} Gamma(s, 2pi n / sqrt(N))
    //   + i^kappa N^{kappa/2-s} sum a~(n) (2pi n)^{-(kappa-s)}
    //                                   Gamma(kappa-s, 2pi n / sqrt(N)),
    // entire in s; both sums cut off once the growth bound times the
    // incomplete-gamma factor drops below tolerance.
    const int weight = seq.weight();
    const long level = seq.level();
    const double sqn = std::sqrt(static_cast<double>(level));
    const double mu = (kappa - 1.0) / 2.0 + 0.01;
    const double c0 = growth_constant(seq);
    const cplx ks = cplx(kappa, 0.0) - s;
    auto half = [&](bool tilde) -> cplx {
        const cplx expo = tilde ? ks : s;
        cplx sum{0.0, 0.0};
        for (long long n = 1;; ++n) {
            const double x = 2.0 * kPi * n / sqn;
            const cplx g = upper_incomplete_gamma(expo, x);
            const cplx an = tilde ? seq.a_tilde(n) : seq.a(n);
            sum += an * pow_principal(cplx(2.0 * kPi * n, 0.0), -expo) * g;
            const double bound = c0 * std::pow(n + 1.0, mu) *
                                 std::pow(2.0 * kPi * (n + 1.0), -expo.real()) *
                                 std::abs(upper_incomplete_gamma(
                                     cplx(expo.real(), 0.0),
                                     2.0 * kPi * (n + 1) / sqn));
            if (bound < 0.1 * policy.tol_abs && n >= 2) break;
            if (n > 10000)
                throw QuadratureFailure("l_series: completed sum stalled");
        }
        return sum;
    };
    const cplx first = half(false);
    const cplx second = i_power(weight) *
                        pow_principal(cplx(level, 0.0), kappa / 2.0 - s) *
                        half(true);
    return pow_principal(cplx(2.0 * kPi, 0.0), s) * recip_gamma(s) *
           (first + second);
}

cplx f_on_imaginary_axis(const CoeffSeq& seq, double y) {
    if (!(y > 0.0))
        throw OutOfDomain("f_on_imaginary_axis: requires y > 0");
    if (seq.kind() == CoeffSeq::Kind::all_ones)
        return 1.0 / std::expm1(2.0 * kPi * y);
    const long long support = seq.finite_support();
    if (support > 0) {
        cplx sum{0.0, 0.0};
        for (long long n = 1; n <= support; ++n)
            sum += seq.a(n) * std::exp(-2.0 * kPi * n * y);
        return sum;
    }
    const double sqn = std::sqrt(static_cast<double>(seq.level()));
    if (seq.modular() && y < 1.0 / sqn && seq.has_tilde()) {
        // f(iy) = i^kappa N^{-kappa/2} y^{-kappa} f~(i/(N y))
        const double y2 = 1.0 / (seq.level() * y);
        cplx sum{0.0, 0.0};
        const double mu = (seq.kappa() - 1.0) / 2.0 + 0.01;
        const double c0 = growth_constant(seq);
        for (long long n = 1;; ++n) {
            sum += seq.a_tilde(n) * std::exp(-2.0 * kPi * n * y2);
            const double bound =
                c0 * std::pow(n + 1.0, mu) * std::exp(-2.0 * kPi * (n + 1) * y2);
            if (bound < 1e-18 * (1.0 + std::abs(sum))) break;
            if (n > 200000)
                throw QuadratureFailure("f_on_imaginary_axis: slow decay");
        }
        return i_power(seq.weight()) *
               std::pow(static_cast<double>(seq.level()), -seq.kappa() / 2.0) *
               std::pow(y, -seq.kappa()) * sum;
    }
    const double mu = (seq.kappa() - 1.0) / 2.0 + 0.01;
    const double c0 = growth_constant(seq);
    cplx sum{0.0, 0.0};
    for (long long n = 1;; ++n) {
        sum += seq.a(n) * std::exp(-2.0 * kPi * n * y);
        const double bound =
            c0 * std::pow(n + 1.0, mu) * std::exp(-2.0 * kPi * (n + 1) * y);
        if (bound < 1e-18 * (1.0 + std::abs(sum))) break;
        if (n > 200000)
            throw QuadratureFailure("f_on_imaginary_axis: slow decay");
    }
    return sum;
}

}  // namespace bizeta
