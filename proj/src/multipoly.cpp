#include "mck/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mck {

int var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("MultiPoly: not constant");
  return terms_.begin()->second;
}

Mono MultiPoly::as_monomial() const {
  if (terms_.empty()) return Mono(Rational(0), ExpVec{});
  if (terms_.size() != 1) throw std::domain_error("MultiPoly: not a monomial");
  return Mono(terms_.begin()->second, terms_.begin()->first);
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.terms_.end();
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return MultiPoly();
  // Iterate over the smaller operand's terms in the outer loop.
  const MultiPoly* small = this;
  const MultiPoly* big = &o;
  if (small->terms_.size() > big->terms_.size()) std::swap(small, big);
  MultiPoly r;
  for (const auto& [e1, c1] : small->terms_)
    for (const auto& [e2, c2] : big->terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

MultiPoly MultiPoly::mul_mono(const Mono& m) const {
  MultiPoly r;
  if (m.coef.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + m.exp, c * m.coef);
  return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
  MultiPoly acc(Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

ExpVec MultiPoly::min_exponents() const {
  ExpVec m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kNumVars; ++i)
        if (e.e[i] < m.e[i]) m.e[i] = e.e[i];
    }
  }
  return m;
}

ExpVec MultiPoly::max_exponents() const {
  ExpVec m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kNumVars; ++i)
        if (e.e[i] > m.e[i]) m.e[i] = e.e[i];
    }
  }
  return m;
}

unsigned MultiPoly::vars_used() const {
  unsigned mask = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (e.e[i] != 0) mask |= 1u << i;
  return mask;
}

const std::pair<const ExpVec, Rational>& MultiPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly: leading of zero");
  return *terms_.rbegin();
}

std::pair<Rational, MultiPoly> MultiPoly::content_normal(const MultiPoly& p) {
  if (p.is_zero()) return {Rational(0), MultiPoly()};
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms_) {
    num_gcd = gcd(num_gcd, c.num());
    den_lcm = lcm(den_lcm, c.den());
  }
  Rational content{mpq_class(num_gcd, den_lcm)};
  if (p.leading().second.sign() < 0) content = -content;
  MultiPoly q;
  Rational inv = content.inv();
  for (const auto& [e, c] : p.terms_) q.terms_.emplace(e, c * inv);
  return {content, q};
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("MultiPoly: division by zero polynomial");
  if (is_zero()) return MultiPoly();
  // Shift both operands into the nonnegative orthant so lex division is
  // admissible, divide, then shift the quotient back.
  ExpVec sn = min_exponents(), sd = divisor.min_exponents();
  MultiPoly rem = mul_mono(Mono(Rational(1), -sn));
  MultiPoly div = divisor.mul_mono(Mono(Rational(1), -sd));
  const auto& [dexp, dcoef] = div.leading();
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto& [rexp, rcoef] = rem.leading();
    ExpVec qe = rexp - dexp;
    if (!qe.nonneg()) throw std::domain_error("MultiPoly: inexact division");
    Mono qt(rcoef / dcoef, qe);
    quot.add_term(qt.exp, qt.coef);
    rem -= div.mul_mono(qt);
  }
  return quot.mul_mono(Mono(Rational(1), sn - sd));
}

Rational MultiPoly::eval(const std::array<Rational, kNumVars>& point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e.e[i] == 0) continue;
      if (point[i].is_zero() && e.e[i] < 0)
        throw std::domain_error("MultiPoly::eval: 0^negative");
      term *= point[i].pow(e.e[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::fold_even(int var, const MultiPoly& image) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int k = e.e[var];
    if (k % 2 != 0)
      throw std::invalid_argument("fold_even: odd power of variable");
    ExpVec base = e;
    base.e[var] = 0;
    MultiPoly piece = image.pow(std::abs(k / 2));
    if (k < 0) throw std::invalid_argument("fold_even: negative power");
    r += piece.mul_mono(Mono(c, base));
  }
  return r;
}

MultiPoly MultiPoly::subst_mono(int var, const Mono& image) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int k = e.e[var];
    ExpVec base = e;
    base.e[var] = 0;
    if (k != 0 && image.coef.is_zero()) {
      if (k < 0) throw std::domain_error("subst_mono: zero to negative power");
      continue;
    }
    Mono piece = image.pow(k);
    r.add_term(base + piece.exp, c * piece.coef);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coef = c;
    if (first) {
      if (coef.sign() < 0) {
        os << "-";
        coef = -coef;
      }
      first = false;
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e.e[i] != 1) mono += "^" + std::to_string(e.e[i]);
    }
    if (mono.empty()) {
      os << coef.str();
    } else if (coef.is_one()) {
      os << mono;
    } else {
      os << coef.str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace mck
