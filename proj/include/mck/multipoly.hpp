#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mck/expvec.hpp"
#include "mck/rational.hpp"

namespace mck {

// Signed monomial in the parameter alphabet: coef * a^e0 * ... * s^e7.
// Exponents may be negative.
struct Mono {
  Rational coef = Rational(1);
  ExpVec exp{};

  Mono() = default;
  Mono(Rational c, ExpVec e) : coef(std::move(c)), exp(e) {}
  static Mono one() { return Mono(); }
  static Mono var(int v, int power = 1) {
    return Mono(Rational(1), ExpVec::unit(v, power));
  }
  static Mono constant(Rational c) { return Mono(std::move(c), ExpVec{}); }

  Mono operator*(const Mono& o) const {
    return Mono(coef * o.coef, exp + o.exp);
  }
  Mono operator/(const Mono& o) const {
    return Mono(coef / o.coef, exp - o.exp);
  }
  Mono pow(int k) const { return Mono(coef.pow(k), exp * k); }
  Mono operator-() const { return Mono(-coef, exp); }
  bool is_zero() const { return coef.is_zero(); }
  bool operator==(const Mono& o) const = default;
};

// Sparse multivariate Laurent polynomial over the fixed alphabet with exact
// rational coefficients. Terms are kept in lexicographic key order and never
// store a zero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Rational c) {
    if (!c.is_zero()) terms_[ExpVec{}] = std::move(c);
  }
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}
  explicit MultiPoly(const Mono& m) {
    if (!m.coef.is_zero()) terms_[m.exp] = m.coef;
  }
  static MultiPoly var(int v, int power = 1) {
    return MultiPoly(Mono::var(v, power));
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second.is_one();
  }
  Rational constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Mono as_monomial() const;
  size_t size() const { return terms_.size(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  // Arbitrary total order so polynomials can key ordered containers.
  bool operator<(const MultiPoly& o) const;

  void add_term(const ExpVec& e, const Rational& c);
  MultiPoly mul_mono(const Mono& m) const;
  MultiPoly scale(const Rational& c) const;
  MultiPoly pow(int k) const;  // k >= 0

  // Componentwise minimum of exponents over all terms (zero poly -> zeros).
  ExpVec min_exponents() const;
  // Componentwise maximum.
  ExpVec max_exponents() const;
  // Bitmask of variables that occur with nonzero exponent.
  unsigned vars_used() const;
  bool uses_var(int v) const { return vars_used() & (1u << v); }

  // Lex-leading (greatest exponent vector) term.
  const std::pair<const ExpVec, Rational>& leading() const;

  // Pulls out rational content so remaining coefficients are coprime
  // integers with lex-leading coefficient positive. Returns the content
  // (so *this == content * returned poly). Zero returns content 0, poly 0.
  static std::pair<Rational, MultiPoly> content_normal(const MultiPoly& p);

  // Exact division; throws std::domain_error when the division fails.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  // Full-point evaluation. Throws std::domain_error on 0^negative.
  Rational eval(const std::array<Rational, kNumVars>& point) const;

  // Replaces var^2 by image everywhere; throws std::invalid_argument when an
  // odd power of var occurs.
  MultiPoly fold_even(int var, const MultiPoly& image) const;

  // Substitutes a (possibly negative-exponent) monomial for a variable.
  MultiPoly subst_mono(int var, const Mono& image) const;

  // Canonical text form: terms ascending lex, e.g. "1 - 2*t^2 + t^4".
  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace mck
