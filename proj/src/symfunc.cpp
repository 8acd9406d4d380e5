#include "mck/symfunc.hpp"

#include <stdexcept>

#include "mck/qseries.hpp"

namespace mck {

LaurentSym monomial_sym(const Partition& lambda, int n) {
  return LaurentSym::monomial_basis(n, lambda);
}

LaurentSym E_r(int n, int r) {
  if (n < 1 || r < 0 || r > 2 * n)
    throw std::invalid_argument("E_r: need 1 <= n and 0 <= r <= 2n");
  // Coefficients of y^0..y^{2n} in prod_i (1+y*x_i)(1+y/x_i), multiplied in
  // one linear factor at a time.
  std::vector<LaurentX> c(static_cast<size_t>(2 * n + 1), LaurentX(n));
  c[0] = LaurentX::constant(n, RationalExpr(1));
  int deg = 0;
  for (int i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      XExp e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = sign;
      ++deg;
      for (int d = deg; d >= 1; --d)
        c[static_cast<size_t>(d)] +=
            c[static_cast<size_t>(d - 1)].mul_term(e, RationalExpr(1));
    }
  }
  return LaurentSym::from_full(c[static_cast<size_t>(r)]);
}

LaurentSym E_r_m_expansion(int n, int r) {
  if (n < 1 || r < 0 || r > 2 * n)
    throw std::invalid_argument("E_r_m_expansion: need 1 <= n and 0 <= r <= 2n");
  LaurentSym out(n);
  for (int k = 0; 2 * k <= r; ++k) {
    int cols = r - 2 * k;
    if (cols > n) continue;
    Rational b = int_binom(n - r + 2 * k, k);
    if (b == Rational(0)) continue;
    out.add_coeff(Partition::one_column(cols), RationalExpr(b));
  }
  return out;
}

LaurentSym E_interp(int n, int r, const RationalExpr& a,
                    const RationalExpr& t) {
  if (n < 1 || r < 0 || r > n)
    throw std::invalid_argument("E_interp: need 1 <= n and 0 <= r <= n");
  LaurentX total(n);
  if (r == 0) {
    total.add_term(XExp(static_cast<size_t>(n), 0), RationalExpr(1));
    return LaurentSym::from_full(total);
  }
  // 1-based indices i_1 < ... < i_r.
  std::vector<int> idx(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) idx[static_cast<size_t>(k)] = k + 1;
  while (true) {
    LaurentX prod = LaurentX::constant(n, RationalExpr(1));
    for (int k = 0; k < r; ++k) {
      int i = idx[static_cast<size_t>(k)];
      RationalExpr w = t.pow(i - (k + 1)) * a;
      LaurentX factor(n);
      XExp e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      factor.add_term(e, RationalExpr(1));
      e[static_cast<size_t>(i - 1)] = -1;
      factor.add_term(e, RationalExpr(1));
      factor.add_term(XExp(static_cast<size_t>(n), 0), -(w + w.pow(-1)));
      prod = prod * factor;
    }
    total += prod;
    // next combination
    int k = r - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == n - (r - 1 - k)) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < r; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return LaurentSym::from_full(total);
}

}  // namespace mck
