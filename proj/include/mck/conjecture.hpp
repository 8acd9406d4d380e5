#pragma once

#include <map>
#include <vector>

#include "mck/laurent.hpp"
#include "mck/partition.hpp"
#include "mck/rational_expr.hpp"
#include "mck/report.hpp"
#include "mck/rng.hpp"

namespace mck {

// Formal series on the nonnegative cone of a rank-`rank` lattice, truncated
// at total key degree <= order. Keys are simple-root coordinates; for the
// hyperoctahedral ladder of rank n the key k corresponds to the monomial
//   prod_{i<n} (x_{i+1}/x_i)^{k_i} * (1/x_n^2)^{k_n},
// for type A to prod (x_{i+1}/x_i)^{k_i}. The unit series has coefficient 1
// at the zero key.
struct TruncSeries {
  int rank = 0;
  int order = 0;
  std::map<std::vector<int>, RationalExpr> coef;

  void add(const std::vector<int>& key, const RationalExpr& c);
  RationalExpr coeff(const std::vector<int>& key) const;
};

// Coefficient of the type A hypergeometric series in the branching
// variables theta (a strict upper-triangular n x n matrix of nonnegative
// integers): the column recursion
//   c_1 = 1,
//   c_n(theta; s) = c_{n-1}(theta'; q^{-theta_{1n}} s_1, ...,
//                           q^{-theta_{n-1,n}} s_{n-1})
//     * prod_{1<=i<=j<=n-1} (t s_{j+1}/s_i; q)_{theta_{in}}
//                           / (q s_{j+1}/s_i; q)_{theta_{in}}
//                         * (q^{1-theta_{jn}} s_j / (t s_i); q)_{theta_{in}}
//                           / (q^{-theta_{jn}} s_j / s_i; q)_{theta_{in}},
// where theta' is the leading principal (n-1) x (n-1) block. The series
//   sum_theta c_n(theta) prod_{i<j} (x_j/x_i)^{theta_{ij}}
// multiplied by x^lambda is the monic Macdonald polynomial P_lambda when
// s_i = t^{n-i} q^{lambda_i}.
RationalExpr phi_A_coeff(int n, const std::vector<std::vector<int>>& theta,
                         const std::vector<RationalExpr>& s,
                         const RationalExpr& q, const RationalExpr& t);

// Monic type A Macdonald polynomial by brute force: triangular eigen-solve
// of sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i} over the
// same-weight dominated monomial sums, eigenvalue sum_i q^{lambda_i} t^{n-i}.
// Verifies the residual; throws std::domain_error on eigenvalue collision.
LaurentX macdonald_A(const Partition& lambda, int n, const RationalExpr& q,
                     const RationalExpr& t);

// Compares x^lambda times the truncated type A series against macdonald_A
// at s_i = t^{n-i} q^{lambda_i}. Every coefficient inside the polynomial
// support must match and every series key within the truncation must map
// into the support. Throws std::domain_error when `order` cannot cover the
// support of P_lambda.
Report phi_A_eigencheck(int n, const Partition& lambda, const Rational& q,
                        const Rational& t, int order);

// Coefficient of the explicit rank-2 hyperoctahedral series at the key
// (x_2/x_1)^{th} (1/x_1 x_2)^{mu} (1/x_1^2)^{r1} (1/x_2^2)^{r2}: a product
// of twelve base-q Pochhammer ratios in (s_1, s_2) and the gauge powers
// (q/t)^{th + mu + r1 + r2}.
RationalExpr psi_C2_coeff(int th, int mu, int r1, int r2,
                          const RationalExpr& s1, const RationalExpr& s2,
                          const RationalExpr& q, const RationalExpr& t);

// Asymptotically free eigenfunction of the scaled hyperoctahedral operator
// at the self-dual parameter point (a,b,c,d) = (rt, -rt, rq rt, -rq rt),
// q = rq^2, t = rt^2, written over (q, t) only: coefficients are solved
// order by order on the ladder cone from the eigen-equation at the spectral
// point s (s_i plays t^{n-i+1} q^{lambda_i}). Symbolic s entries give the
// generic solution; throws std::domain_error when a denominator of the
// triangular solve vanishes at numeric arguments.
TruncSeries phi_C_series(int n, const std::vector<RationalExpr>& s,
                         const RationalExpr& q, const RationalExpr& t,
                         int order);

// Rank-2 conjecture at a partition point: with q = u_q^2, t = u_t^2,
// s_1 = t^2 q^{lambda_1}, s_2 = t q^{lambda_2}, the assembled Laurent
// polynomial x^lambda sum psi_C2_coeff(...) must equal the monic
// one-parameter Koornwinder polynomial P_lambda at
// (a,b,c,d) = (u_t, -u_t, u_q u_t, -u_q u_t). All index tuples with total
// <= window are enumerated; a surviving coefficient past the analytic
// support bound makes the verdict INCONCLUSIVE (window too small), an exact
// in-support mismatch makes it FAIL.
Report verify_C2_conjecture(const Partition& lambda, const Rational& u_q,
                            const Rational& u_t, int window);

// Rank-3 rectangular conjecture: the two-index outer sum times the rank-2
// series at the shifted spectral point (t s_3, q^{-mu} s_3), multiplied by
// (x_1 x_2 x_3)^{lambda_3}, must equal P_{(lambda_3^3)} at the same
// parameter point. Same window and verdict semantics as the rank-2 check.
Report verify_C3_rect(int lambda3, const Rational& u_q, const Rational& u_t,
                      int window);

// Folded type A decomposition checks, coefficientwise on the ladder cone up
// to total degree <= order, with s_1..s_n symbolic and q = u_q^2, t = u_t^2
// numeric:
//   n = 1: the folded A_1 series collapses to the rank-1 ladder series in
//          closed form (proven; must pass). Checked symbolically in
//          (s, q, t) and, at the given numeric point, against the
//          polynomial oracle.
//   n = 2: folded A_3 = sum_mu e_2(s; mu) (1/x_1 x_2)^mu times the rank-2
//          ladder series at q^{-mu} s. order <= 4.
//   n = 3: folded A_5 = sum over pair indices mu_{ij} of e_3(s; mu) times
//          the rank-3 ladder series at the shifted spectral point.
//          order <= 3.
Report verify_folded_A(int n, const Rational& u_q, const Rational& u_t,
                       int order);

// Canonical conjecture suite: type A eigenchecks, ladder series validation
// at partition points, the rank-2 series identity in symbolic s, the
// partition-point checks for lambda up to (2,2) and rectangles up to
// lambda_3 = 2, and the three folded decompositions. `trials` parameter
// points per check, drawn from rng with degeneracy rejection.
Report verify_conjectures(int trials, Rng& rng, int window = 8);

}  // namespace mck
