#ifndef BIZETA_SEQUENCES_HPP
#define BIZETA_SEQUENCES_HPP

#include <memory>
#include <string>
#include <vector>

#include "bizeta/complex_core.hpp"

namespace bizeta {

// Exact integer n-th coefficient of q prod_{m>=1} (1-q^m)^24 (weight-12
// level-1 cusp form), arbitrary-size arithmetic, cached with doubling
// growth.  1 <= n <= 1e5.  Returned as a decimal string plus a lossy
// double; tau_fits_int64/tau_int64 give the exact value when it fits.
std::string ramanujan_tau_str(long long n);
long long ramanujan_tau_int64(long long n);   // throws NumericError on overflow
bool tau_fits_int64(long long n);
double ramanujan_tau_double(long long n);

// Coefficient sequence A = {a(n)} with growth exponent kappa:
// |a(n)| <= C n^{(kappa-1)/2+eps}.  Concrete kinds:
//   all_ones        a(n) = 1, kappa = 1
//   delta(n0)       a(n0) = 1, all others 0, kappa = 1
//   finite(list)    finitely supported, kappa declared (default 1)
//   ramanujan_delta tau(n), weight 12, level 1
//   cusp_file       coefficients (and optionally a-tilde) from a JSON file
struct FrickePair;

class CoeffSeq {
  public:
    enum class Kind { all_ones, delta, finite, ramanujan_delta, cusp_file };

    static CoeffSeq make_all_ones();
    static CoeffSeq make_delta(long long n0);
    static CoeffSeq make_finite(std::vector<cplx> coeffs, double kappa = 1.0);
    static CoeffSeq make_ramanujan_delta();
    // JSON: {"kind":"finite","kappa":1.0,"coeffs":[[re,im],...]} or
    //       {"kind":"cusp_file","weight":k,"level":N,"a":[...],"a_tilde":[...]}
    // Coefficient lists are 1-based (position i holds a(i)); plain numbers
    // are accepted in place of [re,im] pairs.
    static CoeffSeq from_json_file(const std::string& path);
    static CoeffSeq from_json_text(const std::string& text);

    Kind kind() const { return kind_; }
    double kappa() const { return kappa_; }
    int weight() const { return weight_; }
    long level() const { return level_; }
    bool modular() const {
        return kind_ == Kind::ramanujan_delta || kind_ == Kind::cusp_file;
    }
    long long finite_support() const;  // 0 = infinite support

    cplx a(long long n) const;
    // a-tilde(n); only for modular kinds with companion data (level 1 uses
    // a itself), else MissingTildeData.
    cplx a_tilde(long long n) const;
    bool has_tilde() const;

    std::string describe() const;

  private:
    friend FrickePair fricke_tilde(const CoeffSeq& seq);

    Kind kind_ = Kind::all_ones;
    double kappa_ = 1.0;
    int weight_ = 0;
    long level_ = 1;
    long long delta_n_ = 1;
    std::vector<cplx> coeffs_;
    std::vector<cplx> coeffs_tilde_;
    bool tilde_from_file_ = false;
};

// A modular sequence together with its image under the Fricke involution.
struct FrickePair {
    CoeffSeq f;
    CoeffSeq f_tilde;
};

// f-tilde companion: level 1 returns f itself; cusp_file with a_tilde data
// echoes the file; everything else raises MissingTildeData.
FrickePair fricke_tilde(const CoeffSeq& seq);

// Divisor-weighted sums
//   a_c:  A_c(l)  = sum_{0<n|l} n^c a(n)
//   a_c0: A^0_c(l) = sum_{mn=l} m^c a(n)   (satisfies A^0_c(l) l^{-c} = A_{-c}(l))
cplx a_c(const CoeffSeq& seq, cplx c, long long l);
cplx a_c0(const CoeffSeq& seq, cplx c, long long l);

// A_c(l) for all l = 1..lmax by a divisor sieve (slot [0] unused, 1-based).
std::vector<cplx> a_c_table(const CoeffSeq& seq, cplx c, long long lmax);

// Analytically continued Dirichlet series L(s, A) = sum a(n) n^{-s}:
//   all_ones -> riemann_zeta (PoleAt(1));  delta/finite -> entire Dirichlet
//   polynomial;  modular kinds -> completed-L (incomplete-gamma) series,
//   entire.  Generic kinds outside absolute convergence: OutOfDomain.
cplx l_series(const CoeffSeq& seq, cplx s, const EvalPolicy& policy);

// f(iy) = sum a(n) e^{-2 pi n y} for y > 0.  For modular kinds with small y
// the sum is routed through the Fricke flip
//   f(iy) = i^kappa N^{-kappa/2} y^{-kappa} f~(i/(N y))
// to avoid the catastrophic cancellation of the raw q-series.
cplx f_on_imaginary_axis(const CoeffSeq& seq, double y);

}  // namespace bizeta

#endif
