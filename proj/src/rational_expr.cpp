#include "mck/rational_expr.hpp"

#include <stdexcept>

#include "mck/rng.hpp"

namespace mck {

RationalExpr::RationalExpr(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalExpr: zero denominator");
  normalize();
}

RationalExpr RationalExpr::mono(const Mono& m) {
  RationalExpr r;
  r.num_ = MultiPoly(m);
  r.den_ = MultiPoly(Rational(1));
  r.normalize();
  return r;
}

void RationalExpr::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(Rational(1));
    return;
  }
  // Clear Laurent exponents and strip the common monomial factor in one step:
  // shift so the joint componentwise minimum exponent is exactly zero.
  ExpVec mn = num_.min_exponents(), md = den_.min_exponents();
  ExpVec joint{};
  for (int i = 0; i < kNumVars; ++i)
    joint.e[i] = std::min(mn.e[i], md.e[i]);
  if (!joint.is_zero()) {
    Mono shift(Rational(1), -joint);
    num_ = num_.mul_mono(shift);
    den_ = den_.mul_mono(shift);
  }
  // Joint integer content, sign fixed by the denominator's leading term.
  auto [cn, pn] = MultiPoly::content_normal(num_);
  auto [cd, pd] = MultiPoly::content_normal(den_);
  Rational ratio = cn / cd;  // num/den == ratio * pn/pd, pd monic-ish
  num_ = pn.scale(Rational(ratio.num()));
  den_ = pd.scale(Rational(ratio.den()));
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
  return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
  return *this + (-o);
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
  if (is_zero() || o.is_zero()) return RationalExpr();
  return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
  return *this * o.inv();
}

RationalExpr RationalExpr::inv() const {
  if (is_zero()) throw std::domain_error("RationalExpr: inverse of zero");
  return RationalExpr(den_, num_);
}

RationalExpr RationalExpr::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  RationalExpr acc(Rational(1));
  RationalExpr base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

Rational RationalExpr::to_rational() const {
  return num_.constant_value() / den_.constant_value();
}

bool RationalExpr::operator==(const RationalExpr& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::optional<Rational> RationalExpr::eval_checked(
    const std::array<Rational, kNumVars>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(point) / d;
}

RationalExpr RationalExpr::subst_mono(int var, const Mono& image) const {
  MultiPoly n = num_.subst_mono(var, image);
  MultiPoly d = den_.subst_mono(var, image);
  if (d.is_zero())
    throw std::domain_error("subst_mono: denominator vanished");
  return RationalExpr(std::move(n), std::move(d));
}

RationalExpr substitute(const MultiPoly& p, const RationalExpr::SubstMap& im) {
  RationalExpr acc;
  for (const auto& [e, c] : p.terms()) {
    RationalExpr term{Rational(1)};
    ExpVec rest{};
    for (int v = 0; v < kNumVars; ++v) {
      if (e.e[v] == 0) continue;
      if (im[v].has_value()) {
        term *= im[v]->pow(e.e[v]);
      } else {
        rest.e[v] = e.e[v];
      }
    }
    acc += term * RationalExpr::mono(Mono(c, rest));
  }
  return acc;
}

RationalExpr RationalExpr::substitute(const SubstMap& images) const {
  RationalExpr n = mck::substitute(num_, images);
  RationalExpr d = mck::substitute(den_, images);
  if (d.is_zero())
    throw std::domain_error("substitute: denominator vanished");
  return n / d;
}

RationalExpr RationalExpr::fold_even(int var,
                                     const MultiPoly& image_of_square) const {
  return RationalExpr(num_.fold_even(var, image_of_square),
                      den_.fold_even(var, image_of_square));
}

std::string RationalExpr::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool probably_zero(const RationalExpr& e, Rng& rng, int points, long height) {
  if (e.is_zero()) return true;
  if (e.is_rational()) return false;
  unsigned mask = e.vars_used();
  int ok = 0, attempts = 0;
  while (ok < points) {
    if (++attempts > points + 200)
      throw std::runtime_error("probably_zero: too many singular points");
    std::array<Rational, kNumVars> pt;
    for (int v = 0; v < kNumVars; ++v)
      pt[v] = (mask & (1u << v)) ? rng.rand_rational(height) : Rational(1);
    auto val = e.eval_checked(pt);
    if (!val) continue;  // pole: redraw
    if (!val->is_zero()) return false;
    ++ok;
  }
  return true;
}

}  // namespace mck
