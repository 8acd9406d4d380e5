#pragma once

#include "mck/laurent.hpp"
#include "mck/partition.hpp"
#include "mck/rational_expr.hpp"
#include "mck/report.hpp"
#include "mck/rng.hpp"
#include "mck/specfield.hpp"
#include "mck/symfunc.hpp"
#include "mck/transition.hpp"

namespace mck {

// Parameter tuple of the q-difference operator. The scaling constant
// alpha = (abcd/q)^{1/2} enters every computation through its square only,
// so the tuple stays inside the rational field.
struct KoornwinderParams {
  RationalExpr a, b, c, d, q, t;

  RationalExpr alpha_sq() const;

  // All six entries as free atoms.
  static KoornwinderParams generic();
};

// Random rational tuple with numerators/denominators up to `height`,
// resampled until a, b, c, d, q, t are nonzero, q and t are not roots of
// unity of small order (q^i t^j != 1 for 0 <= i, j <= 2n+2), and abcd != q.
KoornwinderParams draw_params(Rng& rng, int n, long height = 50);

// Coefficient families of the one-column expansion over the E-basis at the
// shifted argument s. The even family carries its removable (1 - s/t)
// singularity in cancelled form, so s = t is an admissible argument.
RationalExpr one_col_even_coeff(int k, int l, const RationalExpr& s,
                                const KoornwinderParams& prm);
RationalExpr one_col_odd_coeff(int i, int j, const RationalExpr& s,
                               const KoornwinderParams& prm);

// alpha t^{n-1} D applied to a W_n-invariant Laurent polynomial. Works over
// the product of all term denominators in x and ends with an exact-division
// assertion; throws std::domain_error when the denominators fail to cancel
// (non-invariant input or degenerate parameters).
LaurentSym apply_D_scaled(const LaurentSym& p, const KoornwinderParams& prm);

// alpha t^{n-1} d_lambda
//   = sum_j [ alpha^2 t^{2n-j-1} (q^{lambda_j} - 1) + t^{j-1} (q^{-lambda_j} - 1) ].
RationalExpr eigenvalue_scaled(const Partition& lambda,
                               const KoornwinderParams& prm, int n);

// Brute-force P_lambda: the unique m_lambda + (dominance-lower terms)
// eigenvector of the scaled operator, solved as a triangular linear system
// over the dominated basis. Verifies the eigen-equation residual on the
// result. Throws std::domain_error on eigenvalue collision or a singular
// system (degenerate parameters; callers resample).
LaurentSym oracle_P(const Partition& lambda, int n,
                    const KoornwinderParams& prm);

// One-column P_{(1^r)} from the closed fourfold expansion over the E-basis.
LaurentSym P_one_column_fourfold(int n, int r, const KoornwinderParams& prm);

// The b = -a, d = -c degeneration: only the even coefficient family
// survives. Depends on (a^2, c^2, t) alone.
LaurentSym P_one_column_twofold(int n, int r, const RationalExpr& a,
                                const RationalExpr& c, const RationalExpr& t);

// The same degenerate polynomial through the transition rows, under a
// parameter dictionary (monomial or numeric): m-basis row C(t^{n-r+1}, j)
// and E-basis row B(t^{n-r+1}, j).
LaurentSym P_one_column_via_C(int n, int r, const ParamDict& dict);
LaurentSym P_one_column_via_E(int n, int r, const ParamDict& dict);
// Specialization-field variants; entries are folded back into the display
// variable when the field goes through u.
LaurentSym P_one_column_via_C(int n, int r, const SpecField& spec);
LaurentSym P_one_column_via_E(int n, int r, const SpecField& spec);

// Inverse row: E_r = sum_j Btilde(t^{n-r+1}, j) P_{(1^{r-2j})} at the
// degenerate parameter point.
LaurentSym E_from_P(int n, int r, const ParamDict& dict);

// The three transitions touching the interpolation basis E_r(x; a|t).
struct InterpTransitions {
  LaurentSym P_from_interp;  // P_{(1^r)} assembled from E_l(x; a|t)
  LaurentSym interp_from_P;  // E_r(x; a|t) assembled from the P_{(1^l)}
  LaurentSym interp_from_E;  // E_r(x; a|t) assembled from E_l(x) via e(s, m)
};
InterpTransitions interp_transitions(int n, int r,
                                     const KoornwinderParams& prm);

// One-column Hall-Littlewood polynomial (q -> 0 limit) via the closed-form
// E-basis coefficients; family 'C' or 'D'. Coefficients are polynomials in
// the supplied t.
LaurentSym hall_littlewood_P(char family, int n, int r, const RationalExpr& t);

// One-column Schur polynomial: E_r - E_{r-2} for family C, E_r for family D.
LaurentSym schur_one_column(char family, int n, int r);

// Identity suites. verify_oracle covers the eigenfunction characterization
// against the closed expansions (random draws plus symbolic route
// comparisons); verify_interp the interpolation-basis round trips at n = 3;
// verify_hl_schur the Hall-Littlewood/Schur/Kostka expansion identities.
Report verify_oracle(int max_n, int trials, Rng& rng);
Report verify_interp(int trials, Rng& rng);
Report verify_hl_schur(int max_n);

}  // namespace mck
