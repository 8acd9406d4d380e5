#pragma once

#include <array>
#include <optional>
#include <string>

#include "mck/multipoly.hpp"

namespace mck {

class Rng;

// Quotient of two multivariate polynomials in canonical form. No multivariate
// gcd is attempted: canonicalization only clears Laurent monomials, removes
// the joint integer content, and makes the denominator's lex-leading
// coefficient positive. Equality is decided by cross-multiplication.
class RationalExpr {
 public:
  RationalExpr() : num_(), den_(Rational(1)) {}
  RationalExpr(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalExpr(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RationalExpr(const MultiPoly& p) : num_(p), den_(Rational(1)) { normalize(); }
  RationalExpr(MultiPoly num, MultiPoly den);
  static RationalExpr var(int v, int power = 1) {
    return RationalExpr(MultiPoly::var(v, power));
  }
  static RationalExpr mono(const Mono& m);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  RationalExpr operator+(const RationalExpr& o) const;
  RationalExpr operator-(const RationalExpr& o) const;
  RationalExpr operator*(const RationalExpr& o) const;
  RationalExpr operator/(const RationalExpr& o) const;
  RationalExpr operator-() const;
  RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
  RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
  RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }

  RationalExpr inv() const;
  RationalExpr pow(int k) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const;

  // Structural equality of the reduced pair is not canonical; equality is
  // decided exactly by cross-multiplication.
  bool operator==(const RationalExpr& o) const;
  bool operator!=(const RationalExpr& o) const { return !(*this == o); }

  // nullopt when the denominator vanishes at the point.
  std::optional<Rational> eval_checked(
      const std::array<Rational, kNumVars>& point) const;

  RationalExpr subst_mono(int var, const Mono& image) const;
  using SubstMap = std::array<std::optional<RationalExpr>, kNumVars>;
  RationalExpr substitute(const SubstMap& images) const;
  RationalExpr fold_even(int var, const MultiPoly& image_of_square) const;

  unsigned vars_used() const { return num_.vars_used() | den_.vars_used(); }

  // Canonical text form, e.g. "(1 - 2*t^2 + t^4)/(1 - t^3)"; a trivial
  // denominator prints as the bare numerator polynomial.
  std::string str() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

RationalExpr substitute(const MultiPoly& p, const RationalExpr::SubstMap& im);

// Schwartz-Zippel style randomized zero test: evaluates at `points` random
// rational points (coordinates p/q, 1 <= p,q <= height), redrawing any point
// where the denominator vanishes. Exact zero short-circuits to true.
bool probably_zero(const RationalExpr& e, Rng& rng, int points = 20,
                   long height = 10000);

}  // namespace mck
