#pragma once

#include "mck/laurent.hpp"

namespace mck {

// Monomial symmetric Laurent polynomial m_lambda in n variables: the sum of
// x^mu over the distinct W_n-orbit of lambda (stabilizer normalization makes
// every coefficient 1).
LaurentSym monomial_sym(const Partition& lambda, int n);

// Elementary symmetric polynomial e_r of the 2n-letter alphabet
// {x_1, 1/x_1, ..., x_n, 1/x_n}, extracted from prod_i (1+y*x_i)(1+y/x_i).
// Satisfies E_{2n-r} = E_r. Requires 0 <= r <= 2n.
LaurentSym E_r(int n, int r);

// The same E_r expanded over the m-basis without touching x: the coefficient
// of m_{(1^{r-2k})} is binom(n-r+2k, k).
LaurentSym E_r_m_expansion(int n, int r);

// BC-type interpolation polynomial: the sum over r-subsets i_1<...<i_r of
// <x_{i_1}; t^{i_1-1}a> ... <x_{i_r}; t^{i_r-r}a> with
// <z;w> = z + 1/z - w - 1/w. Requires 0 <= r <= n.
LaurentSym E_interp(int n, int r, const RationalExpr& a,
                    const RationalExpr& t);

}  // namespace mck
