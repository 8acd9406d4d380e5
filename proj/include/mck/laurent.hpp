#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mck/partition.hpp"
#include "mck/rational_expr.hpp"

namespace mck {

using XExp = std::vector<int32_t>;

// Laurent polynomial in x_1..x_n with RationalExpr coefficients, fully
// expanded. Keys are exponent vectors of length n; the map's lexicographic
// key order (x_1 most significant) doubles as the monomial order for exact
// division.
class LaurentX {
 public:
  LaurentX() : n_(0) {}
  explicit LaurentX(int n) : n_(n) {}
  static LaurentX constant(int n, const RationalExpr& c);

  int n() const { return n_; }
  const std::map<XExp, RationalExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const XExp& e, const RationalExpr& c);
  RationalExpr coeff(const XExp& e) const;

  LaurentX operator+(const LaurentX& o) const;
  LaurentX operator-(const LaurentX& o) const;
  LaurentX operator*(const LaurentX& o) const;
  LaurentX operator-() const;
  LaurentX& operator+=(const LaurentX& o);
  bool operator==(const LaurentX& o) const;

  LaurentX scale(const RationalExpr& c) const;
  LaurentX mul_term(const XExp& e, const RationalExpr& c) const;

  // q-shift of one variable: x_i^k picks up factor shift^k (the action of
  // T_{q,x_i} when shift = q, or its inverse when shift = 1/q).
  LaurentX q_shift(int i, const RationalExpr& shift) const;

  // Exact division; throws std::domain_error when the quotient is not a
  // Laurent polynomial.
  LaurentX divide_exact(const LaurentX& divisor) const;

  // Coefficient-wise transformation (e.g. parameter substitution). Drops
  // terms whose image is zero.
  LaurentX map_coeffs(
      const std::function<RationalExpr(const RationalExpr&)>& f) const;

  LaurentX swap_vars(int i, int j) const;
  LaurentX invert_var(int i) const;

 private:
  int n_;
  std::map<XExp, RationalExpr> terms_;
};

// Dominant representative of a weight under the hyperoctahedral group:
// absolute values sorted descending.
Partition dominant_weight(const XExp& e);

// Distinct W_n-orbit of lambda padded to length n (all sign choices on
// nonzero entries times multiset permutations).
std::vector<XExp> weyl_orbit(const Partition& lambda, int n);

// W_n-invariant Laurent polynomial stored by dominant weights: the value at
// key lambda is simultaneously the coefficient of the monomial symmetric
// function m_lambda and the raw coefficient of x^lambda.
class LaurentSym {
 public:
  LaurentSym() : n_(0) {}
  explicit LaurentSym(int n) : n_(n) {}
  static LaurentSym constant(int n, const RationalExpr& c);
  static LaurentSym monomial_basis(int n, const Partition& lambda);

  int n() const { return n_; }
  const std::map<Partition, RationalExpr>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_coeff(const Partition& lambda, const RationalExpr& c);
  RationalExpr coeff(const Partition& lambda) const;

  LaurentSym operator+(const LaurentSym& o) const;
  LaurentSym& operator+=(const LaurentSym& o);
  LaurentSym operator-(const LaurentSym& o) const;
  LaurentSym operator-() const;
  LaurentSym scale(const RationalExpr& c) const;
  LaurentSym mul(const LaurentSym& o) const;
  bool operator==(const LaurentSym& o) const;

  LaurentX expand_full() const;
  // Collects dominant coefficients; verifies full W_n-invariance of the
  // input and throws std::domain_error if it fails.
  static LaurentSym from_full(const LaurentX& f);

  LaurentSym map_coeffs(
      const std::function<RationalExpr(const RationalExpr&)>& f) const;

  // "m[1,1] + 2*m[]"; coefficients that are not plain monomials are
  // parenthesized.
  std::string str() const;

 private:
  int n_;
  std::map<Partition, RationalExpr> coeffs_;
};

}  // namespace mck
