#pragma once

#include <vector>

#include "mck/qprod.hpp"
#include "mck/rational_expr.hpp"

namespace mck {

// (z; base)_k for integer k of either sign. Negative k uses
// (z;q)_{-m} = 1 / prod_{i=1}^{m} (1 - z q^{-i}).
RationalExpr qpoch(const RationalExpr& z, const RationalExpr& base, int k);

// Factored form of (z; base)_k for monomial z and base. Keeps every binomial
// (1 - z base^i) as a separate canonical factor so that sums of such products
// can share denominators syntactically.
QProd qpoch_qp(const Mono& z, const Mono& base, int k);

// Expanded polynomial form of (z; base)_k, k >= 0.
MultiPoly qpoch_poly(const Mono& z, const Mono& base, int k);

// [k]_base = 1 + base + ... + base^{k-1}, k >= 0.
MultiPoly qint(int k, const Mono& base);

// [k]_base! = prod_{i=1}^{k} [i]_base.
MultiPoly qfact(int k, const Mono& base);

// Gaussian binomial [m over k]_base; 1 when k == 0 (any m), zero when
// k < 0 or k > m.
MultiPoly qbinom(int m, int k, const Mono& base);

// binom(x, j) = x (x-1) ... (x-j+1) / j! for arbitrary rational x, j >= 0.
Rational gen_binom(const Rational& x, int j);

// Same product formula as a polynomial in an arbitrary expression x.
RationalExpr gen_binom_expr(const RationalExpr& x, int j);

// Ordinary binomial with possibly negative upper index, k >= 0.
Rational int_binom(long m, long k);

// Truncation of r+1 phi r [uppers; lowers; base, z]: the first nterms terms.
// Callers pass nterms large enough to exhaust a terminating series.
RationalExpr phi_sum(const std::vector<RationalExpr>& uppers,
                     const std::vector<RationalExpr>& lowers,
                     const RationalExpr& base, const RationalExpr& z, int nterms);

// Term n of the series in factored form; all inputs monomials.
QProd phi_term_qp(const std::vector<Mono>& uppers, const std::vector<Mono>& lowers,
                  const Mono& base, const Mono& z, int n);

// Factored-arithmetic evaluation of the truncated series. Far cheaper than
// phi_sum when parameters are monomials, since all terms share their
// Pochhammer factors through a common denominator.
RationalExpr phi_sum_mono(const std::vector<Mono>& uppers, const std::vector<Mono>& lowers,
                          const Mono& base, const Mono& z, int nterms);

// Truncated bibasic series
//   Phi[a_1..a_{r+1} : c_1..c_s ; b_1..b_r : d_1..d_s ; q, p; z]
//     = sum_n (a's;q)_n (c's;p)_n / ((q, b's;q)_n (d's;p)_n) z^n.
QProd bibasic_term_qp(const std::vector<Mono>& uppers_q, const std::vector<Mono>& lowers_q,
                      const std::vector<Mono>& uppers_p, const std::vector<Mono>& lowers_p,
                      const Mono& base_q, const Mono& base_p, const Mono& z, int n);

RationalExpr bibasic_phi(const std::vector<Mono>& uppers_q, const std::vector<Mono>& lowers_q,
                         const std::vector<Mono>& uppers_p, const std::vector<Mono>& lowers_p,
                         const Mono& base_q, const Mono& base_p, const Mono& z, int nterms);

// Ballot polynomial [m+2j over j]_base - [m+2j over j-1]_base. Matches
// [m+1]_base / [m+j+1]_base * [m+2j over j]_base times base^j.
MultiPoly qballot(int m, int j, const Mono& base);

// Integer ballot number binom(m+2j, j) - binom(m+2j, j-1).
Rational catalan_ballot(int m, int j);

}  // namespace mck
