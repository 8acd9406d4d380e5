#pragma once

#include <map>
#include <vector>

#include "mck/rational_expr.hpp"

namespace mck {

// Fraction kept in factored form: coef * x^mono * prod_i f_i^{e_i} with the
// f_i canonical polynomials (min exponent zero, coprime integer coefficients,
// positive lex-leading coefficient). Because the project does not implement
// multivariate gcd, sums of fractions are accumulated over the factor-multiset
// common denominator instead of by pairwise cross-multiplication; factors
// produced by the q-Pochhammer constructors match syntactically, which keeps
// denominators from growing multiplicatively.
class QProd {
 public:
  QProd() = default;  // one
  explicit QProd(Rational c) : coef_(std::move(c)) {}
  explicit QProd(const Mono& m) : coef_(m.coef), mono_(m.exp) {
    if (coef_.is_zero()) *this = zero();
  }

  static QProd one() { return QProd(); }
  static QProd zero() {
    QProd z;
    z.coef_ = Rational(0);
    return z;
  }

  bool is_zero() const { return coef_.is_zero(); }
  const Rational& coef() const { return coef_; }
  const ExpVec& mono() const { return mono_; }
  const std::map<MultiPoly, int>& factors() const { return fac_; }

  // Multiplies in f^k after canonicalizing f. f == 0 with k > 0 gives zero;
  // f == 0 with k < 0 throws.
  QProd& mul_factor(const MultiPoly& f, int k = 1);
  QProd& mul_mono(const Mono& m);

  QProd operator*(const QProd& o) const;
  QProd operator/(const QProd& o) const;
  QProd& operator*=(const QProd& o) { return *this = *this * o; }
  QProd pow(int k) const;
  QProd operator-() const {
    QProd r = *this;
    r.coef_ = -r.coef_;
    return r;
  }

  RationalExpr to_rational_expr() const;

  // Exact sum over the factor-multiset common denominator. The numerator is
  // fully expanded, so is_zero() on the result is an exact zero test.
  static QProd sum(const std::vector<QProd>& terms);

 private:
  Rational coef_ = Rational(1);
  ExpVec mono_{};
  std::map<MultiPoly, int> fac_;
};

}  // namespace mck
