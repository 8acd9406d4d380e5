#pragma once

#include <optional>
#include <string>

#include "mck/rational_expr.hpp"

namespace mck {

// Parameter specialization map. Atom images send a variable to a signed
// monomial (possibly in the auxiliary variable u); square images send the
// square of a variable to a polynomial and require the expression to be even
// in that variable. Square images are applied first.
struct SpecField {
  std::string name = "generic";
  std::array<std::optional<Mono>, kNumVars> atom;
  std::array<std::optional<MultiPoly>, kNumVars> square;

  RationalExpr apply(const RationalExpr& e) const;
  Rational apply_to_rational(const RationalExpr& e) const;

  bool is_generic() const;

  static SpecField generic();
  // (C_n,C_n) Schur point b=q=t: a^2->t, c^2->t^2, q->t, realized in u with
  // t->u^2 so the odd variables stay polynomial.
  static SpecField schur_c();
  // (D_n,D_n) Schur point t=q: a^2->1, c^2->t.
  static SpecField schur_d();
  // Hall-Littlewood degenerations (q->0 with the C/D parameter dictionaries).
  static SpecField hl_c();
  static SpecField hl_d();
  // (D_n,D_n): (a,b,c,d) = (1,-1,q^{1/2},-q^{1/2}) via q=u^2.
  static SpecField dn();
  // (C_n,C_n) with Macdonald parameter b: a^2->b, c^2->q*b (square images).
  static SpecField cnb(const MultiPoly& b_expr);

  // Parses one of: generic | cnb:<expr> | dn | schur-c | schur-d | hl-c |
  // hl-d, where <expr> is a rational, "t", "q", or "p/q*t^k"-style monomial.
  static SpecField parse(const std::string& s);
};

// Rewrites even powers of u as powers of target_var for display (u^2 ->
// target). Returns the input unchanged when u occurs to an odd power.
RationalExpr fold_u_squared(const RationalExpr& e, int target_var);

// Variable that u-powered specialization images fold back into for display
// (t for the Schur and Hall-Littlewood points, q for the D_n point), or -1
// when the spec introduces no u.
int fold_target(const SpecField& spec);

// fold_u_squared when the spec has a fold target, identity otherwise.
RationalExpr fold_for_spec(const RationalExpr& e, const SpecField& spec);

}  // namespace mck
