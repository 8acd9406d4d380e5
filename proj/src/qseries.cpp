#include "mck/qseries.hpp"

#include <stdexcept>

namespace mck {

RationalExpr qpoch(const RationalExpr& z, const RationalExpr& base, int k) {
  RationalExpr one(1);
  if (k >= 0) {
    RationalExpr acc = one;
    RationalExpr p = one;
    for (int i = 0; i < k; ++i) {
      acc = acc * (one - z * p);
      p = p * base;
    }
    return acc;
  }
  RationalExpr acc = one;
  RationalExpr binv = base.inv();
  RationalExpr p = one;
  for (int i = 1; i <= -k; ++i) {
    p = p * binv;
    acc = acc * (one - z * p);
  }
  return acc.inv();
}

QProd qpoch_qp(const Mono& z, const Mono& base, int k) {
  QProd acc = QProd::one();
  if (z.is_zero()) return acc;
  MultiPoly one(1);
  if (k >= 0) {
    for (int i = 0; i < k; ++i)
      acc.mul_factor(one - MultiPoly(z * base.pow(i)), 1);
  } else {
    for (int i = 1; i <= -k; ++i)
      acc.mul_factor(one - MultiPoly(z * base.pow(-i)), -1);
  }
  return acc;
}

MultiPoly qpoch_poly(const Mono& z, const Mono& base, int k) {
  if (k < 0) throw std::invalid_argument("qpoch_poly: negative k");
  MultiPoly acc(1);
  MultiPoly one(1);
  for (int i = 0; i < k; ++i) acc = acc * (one - MultiPoly(z * base.pow(i)));
  return acc;
}

MultiPoly qint(int k, const Mono& base) {
  if (k < 0) throw std::invalid_argument("qint: negative k");
  MultiPoly acc(0);
  for (int i = 0; i < k; ++i) {
    Mono p = base.pow(i);
    acc.add_term(p.exp, p.coef);
  }
  return acc;
}

MultiPoly qfact(int k, const Mono& base) {
  MultiPoly acc(1);
  for (int i = 1; i <= k; ++i) acc = acc * qint(i, base);
  return acc;
}

MultiPoly qbinom(int m, int k, const Mono& base) {
  if (k == 0) return MultiPoly(1);
  if (k < 0 || k > m) return MultiPoly(0);
  if (2 * k > m) k = m - k;
  MultiPoly acc(1);
  MultiPoly one(1);
  for (int j = 1; j <= k; ++j) {
    acc = acc * (one - MultiPoly(base.pow(m - j + 1)));
    acc = acc.divide_exact(one - MultiPoly(base.pow(j)));
  }
  return acc;
}

Rational gen_binom(const Rational& x, int j) {
  if (j < 0) return Rational(0);
  Rational acc(1);
  for (int i = 0; i < j; ++i) acc = acc * (x - Rational(i));
  for (int i = 1; i <= j; ++i) acc = acc / Rational(i);
  return acc;
}

RationalExpr gen_binom_expr(const RationalExpr& x, int j) {
  if (j < 0) return RationalExpr(0);
  RationalExpr acc(1);
  for (int i = 0; i < j; ++i) acc = acc * (x - RationalExpr(i));
  for (int i = 1; i <= j; ++i) acc = acc * RationalExpr(Rational(1, i));
  return acc;
}

Rational int_binom(long m, long k) {
  return gen_binom(Rational(m), static_cast<int>(k));
}

RationalExpr phi_sum(const std::vector<RationalExpr>& uppers,
                     const std::vector<RationalExpr>& lowers,
                     const RationalExpr& base, const RationalExpr& z, int nterms) {
  RationalExpr one(1);
  RationalExpr acc(0);
  RationalExpr term = one;  // ratio of Pochhammers at current n
  RationalExpr zp = one;
  RationalExpr bp = one;  // base^n
  for (int n = 0; n < nterms; ++n) {
    acc = acc + term * zp;
    RationalExpr num = one;
    for (const auto& a : uppers) num = num * (one - a * bp);
    RationalExpr den = one - bp * base;  // the (q;q)_n part
    for (const auto& b : lowers) den = den * (one - b * bp);
    if (den.is_zero()) throw std::domain_error("phi_sum: vanishing lower factor");
    term = term * num / den;
    zp = zp * z;
    bp = bp * base;
  }
  return acc;
}

QProd phi_term_qp(const std::vector<Mono>& uppers, const std::vector<Mono>& lowers,
                  const Mono& base, const Mono& z, int n) {
  QProd acc = QProd::one();
  for (const auto& a : uppers) acc = acc * qpoch_qp(a, base, n);
  acc = acc * qpoch_qp(base, base, n).pow(-1);
  for (const auto& b : lowers) acc = acc * qpoch_qp(b, base, n).pow(-1);
  acc.mul_mono(z.pow(n));
  return acc;
}

RationalExpr phi_sum_mono(const std::vector<Mono>& uppers, const std::vector<Mono>& lowers,
                          const Mono& base, const Mono& z, int nterms) {
  std::vector<QProd> terms;
  terms.reserve(nterms);
  for (int n = 0; n < nterms; ++n) {
    QProd t = phi_term_qp(uppers, lowers, base, z, n);
    if (t.is_zero()) break;  // terminated; later terms vanish too
    terms.push_back(t);
  }
  return QProd::sum(terms).to_rational_expr();
}

QProd bibasic_term_qp(const std::vector<Mono>& uppers_q, const std::vector<Mono>& lowers_q,
                      const std::vector<Mono>& uppers_p, const std::vector<Mono>& lowers_p,
                      const Mono& base_q, const Mono& base_p, const Mono& z, int n) {
  QProd acc = QProd::one();
  for (const auto& a : uppers_q) acc = acc * qpoch_qp(a, base_q, n);
  acc = acc * qpoch_qp(base_q, base_q, n).pow(-1);
  for (const auto& b : lowers_q) acc = acc * qpoch_qp(b, base_q, n).pow(-1);
  for (const auto& c : uppers_p) acc = acc * qpoch_qp(c, base_p, n);
  for (const auto& d : lowers_p) acc = acc * qpoch_qp(d, base_p, n).pow(-1);
  acc.mul_mono(z.pow(n));
  return acc;
}

RationalExpr bibasic_phi(const std::vector<Mono>& uppers_q, const std::vector<Mono>& lowers_q,
                         const std::vector<Mono>& uppers_p, const std::vector<Mono>& lowers_p,
                         const Mono& base_q, const Mono& base_p, const Mono& z, int nterms) {
  std::vector<QProd> terms;
  terms.reserve(nterms);
  for (int n = 0; n < nterms; ++n) {
    QProd t = bibasic_term_qp(uppers_q, lowers_q, uppers_p, lowers_p, base_q, base_p, z, n);
    if (t.is_zero()) break;
    terms.push_back(t);
  }
  return QProd::sum(terms).to_rational_expr();
}

MultiPoly qballot(int m, int j, const Mono& base) {
  return qbinom(m + 2 * j, j, base) - qbinom(m + 2 * j, j - 1, base);
}

Rational catalan_ballot(int m, int j) {
  if (j < 0) return Rational(0);
  return int_binom(m + 2 * j, j) - (j >= 1 ? int_binom(m + 2 * j, j - 1) : Rational(0));
}

}  // namespace mck
