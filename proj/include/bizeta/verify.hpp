#ifndef BIZETA_VERIFY_HPP
#define BIZETA_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bizeta/modularfe.hpp"

namespace bizeta {

// Index-parallel loop shared by frontiers that evaluate independent points
// (verification suites, sweep cells).  Worker count comes from the
// BIZETA_THREADS environment variable, default min(hardware, 8); results
// must be written to disjoint slots and f(i) must not throw.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// A point of a verification grid (s2 unused for single-variable checks).
struct CheckPoint {
    cplx s1{0.0, 0.0};
    cplx s2{0.0, 0.0};
    double alpha = 0.0;  // Hurwitz parameter where applicable
};

// Default fixture grids: hardcoded points inside the proven regions with
// margin >= 0.1 from every boundary and pole hyperplane.
std::vector<CheckPoint> default_riemann_points();      // 20 points
std::vector<CheckPoint> default_hurwitz_points();      // alpha in {1/3,1/4}, Re s < 0
std::vector<CheckPoint> default_euler_double_points();
std::vector<CheckPoint> default_thm1_grid();           // 10 points
std::vector<CheckPoint> default_thm2_grid();           // 6 points in region10
std::vector<CheckPoint> default_h2n_overlap_grid();    // 6 points, both reps
std::vector<CheckPoint> default_mellin_lemma_points(); // 3 points
std::vector<CheckPoint> default_l1star_points();       // 3 points
std::vector<CheckPoint> default_prop2_points();        // 3 points (all_ones)

// Classical sanity checks.  which in {"riemann", "hurwitz", "euler_double"}.
// Out-of-region points are recorded as status "skipped", never thrown.
std::vector<FEReport> check_classical(const std::string& which,
                                      const std::vector<CheckPoint>& points,
                                      const EvalPolicy& policy);

// First functional equation: l2_direct (LHS) against thm1_rhs (RHS).
std::vector<FEReport> check_thm1(const CoeffSeq& seq,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol = 1e-7);

// Second functional equation, verified against thm1_rhs (the direct series
// never converges in region10, so the first form is the reference).
std::vector<FEReport> check_thm2(const FrickePair& pair,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol = 1e-6);

// Single-series reduction: l2_single_series(n,...) against
// thm1_rhs(delta(n), ...).
std::vector<FEReport> check_cor1(const std::vector<long long>& n_list,
                                 const std::vector<CheckPoint>& points,
                                 const EvalPolicy& policy, double tol = 1e-7);

// Trivial-zero scan over s1_list x {0..l_max}.
std::vector<FEReport> check_cor2(const FrickePair& pair,
                                 const std::vector<cplx>& s1_list, int l_max,
                                 const EvalPolicy& policy, double tol = 1e-8);

// Integral representation check: l2_direct against
// (2pi)^{s1+s2} / (Gamma(s1) Gamma(s2)) * lambda_integral, on the default
// all-ones points plus (1,8) for the weight-12 cusp form.
std::vector<FEReport> check_prop2(const EvalPolicy& policy, double tol = 1e-5);

// Confluent-Psi coherence suite: the b -> 2-b transformation identity,
// reconstruction of the ray integral from truncated sum + remainder for
// M in {1,2,4,8} at x = 2 pi i l, and the closed form U(a,a+1,x) = x^-a.
std::vector<FEReport> check_psi_coherence(const EvalPolicy& policy);

// Mellin lemma on a point list ((s1,s2) read as (s,u)).
std::vector<FEReport> check_mellin_lemma(const FrickePair& pair,
                                         const std::vector<CheckPoint>& points,
                                         const EvalPolicy& policy,
                                         double tol = 1e-6);

// Completed-L1 functional equation on a point list.
std::vector<FEReport> check_l1star(const FrickePair& pair,
                                   const std::vector<CheckPoint>& points,
                                   const EvalPolicy& policy, double tol = 1e-8);

// H^{pm}_{2,N} representation agreement on the overlap grid: direct series
// against Mellin-Barnes, both signs.
std::vector<FEReport> check_h2n_overlap(const FrickePair& pair,
                                        const std::vector<CheckPoint>& points,
                                        const EvalPolicy& policy,
                                        double tol = 1e-6);

// Helpers used by several checks.
FEReport make_report(const std::string& check, cplx s1, cplx s2, cplx lhs,
                     cplx rhs, const RegionTag& lt, const RegionTag& rt,
                     double tol);

// Deterministic JSON serialization (stable key order, shortest round-trip
// numbers): identical inputs and policy give byte-identical output.
std::string reports_to_json(const std::vector<FEReport>& reports);

}  // namespace bizeta

#endif
