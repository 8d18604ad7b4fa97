#pragma once

#include <string>
#include <vector>

#include "renyi/interval.hpp"
#include "renyi/transfer_matrix.hpp"

namespace renyi {

using IntervalVector = std::vector<Interval>;

Interval dot(const IntervalVector& a, const IntervalVector& b);
Interval l1_norm(const IntervalVector& v);
Interval linf_norm(const IntervalVector& v);
IntervalVector matvec(const TruncatedMatrix& M, const IntervalVector& x);

/// Right eigenvector enclosure: v with v0 = 1 and (lambda - core) v̊ = col0,
/// solved by back substitution on the upper-triangular core.
/// Requires lambda.lo > 1/2 + log 2 so every diagonal pivot excludes zero.
IntervalVector solve_right(const TruncatedMatrix& M, Interval lambda);

/// Left eigenvector enclosure: w with w0 = 1, forward substitution.
/// w1 = -1/(lambda - A_{1,1}) and ||w||_inf = |w1|.
IntervalVector solve_left(const TruncatedMatrix& M, Interval lambda);

/// Rigorous bisection (trisection fallback) on the row-0 compatibility
/// residual g(lambda) = lambda - 1/2 + v1(lambda).  Returns a bracket of
/// width <= tol whose endpoint residuals have certified opposite signs.
Interval find_lambda(int m, Interval bracket = Interval{1.20, 1.26}, double tol = 1e-12);

struct RenormalizedPair {
    IntervalVector w_adjusted;
    Interval perturbation_bound;  // alpha / (1 - alpha)
};

/// Given sum v_i w_i enclosed within alpha < 1/2 of 1, widens w entrywise by
/// the relative bound alpha/(1-alpha) so the result certifiably contains an
/// exact w* with w* . v = 1.
RenormalizedPair renormalize_pair(const IntervalVector& v, const IntervalVector& w);

/// Similarity deflation about pivot j via the entrywise identity:
/// (j,j) holds the eigenvalue, row/column j vanish, and elsewhere
/// (i,k) = A_{ik} - v_i A_{jk}.  Requires v_j = 1 and w.v containing 1.
std::vector<Interval> deflate(const TruncatedMatrix& M, const IntervalVector& v,
                              const IntervalVector& w, int j);

struct GershgorinDisc {
    Interval center;
    Interval radius;
    bool isolated = false;  // provably disjoint from every other disc
};

struct GershgorinReport {
    std::vector<GershgorinDisc> discs;
};

/// Column discs of a square interval matrix (row-major, n x n).
GershgorinReport gershgorin(const std::vector<Interval>& M, int n);

struct CertCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Certified enclosure of the dominant eigenvalue and eigenvectors of A_m.
/// The lambda interval is valid for every truncation order >= m and for the
/// limit operator (the column-0 tail beyond m is included in the disc radius).
struct EigenCertificate {
    int m = 0;
    int h = 7;  // pivot-block order used for the extension
    Interval lambda;
    Interval r_half;          // lambda / 2
    Interval gap_bound;       // |z| bound for the rest of the spectrum
    IntervalVector v;         // right eigenvector, v0 = 1
    IntervalVector w;         // left eigenvector, w0 = 1
    Interval zeta;            // w . v
    Interval norm_W;          // column-sum norm of the similarity factor W
    Interval norm_V;
    std::vector<CertCheck> checks;

    bool all_checks_pass() const;
};

/// Full certification pipeline: find lambda on A_h, solve the eigenvector
/// pair, renormalize, deflate, extend the transform with diagonal blocks 8
/// and 1/8 beyond index h, and bound every Gershgorin disc of the extended
/// matrix.  Throws CertificationFailed naming the first failing check.
EigenCertificate certify(int m, int h = 7, double bisect_tol = 1e-12);

struct PowerResult {
    IntervalVector direction;  // A^n u normalized to unit l1 mass
    double residual = 0.0;     // certified upper bound on the l1 distance to ±v/||v||
    Interval ratio;            // ||A^{n+1} u|| / ||A^n u||
};

/// Power iteration diagnostic for the convergence theorem.  Requires the
/// certificate's w . u enclosure to exclude zero.
PowerResult power_converge(const std::vector<double>& u, int n, const TruncatedMatrix& M,
                           const EigenCertificate& cert);

/// Rigorous enclosure of the dominant eigenvalue from the power-iteration
/// ratio at step n plus the theorem's geometric error bound.  Built from the
/// certificate's own similarity pair on A_m, so it is independent of the
/// Gershgorin route it cross-checks.
Interval power_ratio_lambda_enclosure(const std::vector<double>& u, int n,
                                      const TruncatedMatrix& M, const EigenCertificate& cert);

std::string certificate_to_json(const EigenCertificate& cert, bool timestamp = true);
EigenCertificate certificate_from_json(const std::string& text);

}  // namespace renyi
