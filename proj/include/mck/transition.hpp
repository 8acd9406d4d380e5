#pragma once

#include <array>
#include <vector>

#include "mck/qprod.hpp"
#include "mck/report.hpp"
#include "mck/rng.hpp"
#include "mck/specfield.hpp"
#include "mck/trimatrix.hpp"

namespace mck {

// Multiplicative parameter point (a^2, c^2, t) as monomials. The generic
// point keeps all three symbolic; specialization fields whose images are
// monomials (Schur points, the D_n point) plug in here. Degenerate limits
// with vanishing c^2 go through the closed forms in hl_limit_B instead.
struct ParamDict {
  Mono a2, c2, t;

  static ParamDict generic();
  // Throws std::invalid_argument when the field maps a^2, c^2 or t to
  // something that is not a single monomial (e.g. the Hall-Littlewood points
  // where c^2 -> 0).
  static ParamDict from_spec(const SpecField& spec);
  static ParamDict numeric(const Rational& a2v, const Rational& c2v,
                           const Rational& tv);
};

// Elementary weight f(s) and its shifts F(s, l) = f(s / t^l). The QProd form
// takes s as a monomial and cancels syntactically equal numerator/denominator
// binomials, so removable singularities at specialized points disappear
// before any division happens.
QProd F_qprod(const Mono& s, int l, const ParamDict& P);
RationalExpr f_def(const RationalExpr& s);
RationalExpr F_def(const RationalExpr& s, int l);

// Summand lists for the one-column transition coefficients. Each element is
// one term of the defining terminating series (prefactor folded in); summing
// with QProd::sum gives the exact coefficient value.
std::vector<QProd> B_terms(const Mono& s, int j, const ParamDict& P);
std::vector<QProd> Btilde_terms(const Mono& s, int j, const ParamDict& P);
// Sears-transformed alternate series; must sum to the same values.
std::vector<QProd> B_alt_terms(const Mono& s, int j, const ParamDict& P);
std::vector<QProd> Btilde_alt_terms(const Mono& s, int j, const ParamDict& P);
// C(s, j) = sum_i B(s, i) * binom(m + 2j, j - i) for integer m >= -1, and the
// extended variant whose binomial argument is a symbolic expression (the
// three-term relation is a polynomial identity in that argument).
std::vector<QProd> C_terms(const Mono& s, int m, int j, const ParamDict& P);
std::vector<QProd> C_terms_m(const Mono& s, const RationalExpr& m_expr, int j,
                             const ParamDict& P);

// Coefficient values with s = t^{m+1}. m = -1 (s = 1) is allowed; the special
// values B(1, .) and C(1, .) come out of the same code path.
RationalExpr B_coeff(int m, int j, const ParamDict& P = ParamDict::generic());
RationalExpr Btilde_coeff(int m, int j,
                          const ParamDict& P = ParamDict::generic());
RationalExpr B_alt(int m, int j, const ParamDict& P = ParamDict::generic());
RationalExpr Btilde_alt(int m, int j,
                        const ParamDict& P = ParamDict::generic());
RationalExpr C_coeff(int m, int j, const ParamDict& P = ParamDict::generic());

// Interpolation connection coefficient e(t^p, m) in the ring with atomic a.
std::vector<QProd> e_terms(int p, int m);
RationalExpr e_coeff(int p, int m);

// Lattice paths (d_1, ..., d_i) with 0 <= d_1 <= r and d_k - 1 <= d_{k+1} <= r.
// Entries past the first may go negative; the count equals catalan_ballot(r,i).
using PathTuple = std::vector<int>;
std::vector<PathTuple> enumerate_paths(int r, int i);

// Sum over enumerate_paths(r, i) of prod_k F(t^{r+1}, d_k). Since
// F(t^{r+1}, d) = f(t^{r+1-d}), the sum is evaluated by grouping paths on the
// exponent r+1-d of the last step (exact dynamic programming over suffix
// sums); the regrouping is pure reassociation of the same finite sum.
RationalExpr C_via_paths(int r, int i,
                         const ParamDict& P = ParamDict::generic());
// Literal term-by-term sum over the enumerated paths; exponentially larger
// term count, used to validate the grouped evaluation on small instances.
RationalExpr C_via_paths_literal(int r, int i,
                                 const ParamDict& P = ParamDict::generic());

// Even lower-triangular inversion pair and composition law (entries at rows
// r, columns r-2i).
TriMatrix bressoud_M(const RationalExpr& u, const RationalExpr& v,
                     const RationalExpr& x, const RationalExpr& y,
                     const RationalExpr& q, int size);
// Conjugated bibasic variant; u and v enter through their square roots so the
// half-integer powers stay in the ring.
TriMatrix bressoud_M_tilde(const RationalExpr& sqrt_u,
                           const RationalExpr& sqrt_v, const RationalExpr& x,
                           const RationalExpr& y, const RationalExpr& t,
                           int size);

// Full lower-triangular inversion pair N(x, y; q), N(y, x; q), and the
// four-parameter conjugated variant used for the interpolation transitions.
// y = 0 is admitted in the conjugated variant (the entry formula has a finite
// limit there).
TriMatrix krattenthaler_N(const RationalExpr& x, const RationalExpr& y,
                          const RationalExpr& q, int size);
TriMatrix kratt_N_tilde(const std::array<RationalExpr, 4>& u,
                        const RationalExpr& v, const RationalExpr& x,
                        const RationalExpr& y, const RationalExpr& t,
                        int size);

enum class MatrixKind { B, Btilde, C };

// Assembles the truncated transition matrices entrywise (no recursion):
// C: upper-even, entry (r, r+2i) = C(t^{r+1}, i), independent of size;
// B / Btilde: lower-even at the base point s = t^size, entry (r, r-2i) =
// B(t^{size-r+1}, i) resp. Btilde. Hall-Littlewood fields use the q -> 0
// closed forms. Size is capped by the MCK_MAX_SIZE environment override
// (default 16).
TriMatrix build_matrices(MatrixKind kind, int size, const SpecField& spec);

int max_matrix_size();

// One-column Kostka polynomial, family C or D, with m = n - r. Both closed
// forms (difference/split form and ratio form) are evaluated and must agree;
// the result must be a polynomial in t with nonnegative integer coefficients.
RationalExpr kostka(char family, int n, int r, int j);

// q -> 0 limits of B (tilde = false) and Btilde (tilde = true) at the two
// Hall-Littlewood points: family 'C' is a = t^{1/2}, c = (qt)^{1/2}; family
// 'D' is a = 1, c = q^{1/2}. Rational in t.
RationalExpr hl_limit_B(char family, bool tilde, int m, int j);

// Identity suites. Each returns one CheckResult per identity instance group;
// failures carry the offending indices in `detail`.
Report verify_recursions(int size, const SpecField& spec = SpecField::generic());
Report verify_inverse(int size);
Report verify_fourterm(int maxi, const SpecField& spec = SpecField::generic());
Report verify_sears(int maxj);
Report verify_paths(int max_value, int max_count);
Report verify_kostka(int max_n);
Report verify_bressoud(int size, int draws, Rng& rng);
Report verify_krattenthaler(int size, int draws, Rng& rng);

}  // namespace mck
