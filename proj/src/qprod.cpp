#include "mck/qprod.hpp"

#include <stdexcept>

namespace mck {

QProd& QProd::mul_factor(const MultiPoly& f, int k) {
  if (is_zero() || k == 0) return *this;
  if (f.is_zero()) {
    if (k < 0) throw std::domain_error("QProd: zero factor in denominator");
    return *this = zero();
  }
  ExpVec mn = f.min_exponents();
  MultiPoly shifted = mn.is_zero() ? f : f.mul_mono(Mono(Rational(1), -mn));
  auto [content, p] = MultiPoly::content_normal(shifted);
  coef_ *= content.pow(k);
  mono_ = mono_ + mn * k;
  if (!p.is_one()) {
    auto it = fac_.find(p);
    if (it == fac_.end()) {
      fac_.emplace(std::move(p), k);
    } else {
      it->second += k;
      if (it->second == 0) fac_.erase(it);
    }
  }
  return *this;
}

QProd& QProd::mul_mono(const Mono& m) {
  if (is_zero()) return *this;
  if (m.coef.is_zero()) return *this = zero();
  coef_ *= m.coef;
  mono_ = mono_ + m.exp;
  return *this;
}

QProd QProd::operator*(const QProd& o) const {
  if (is_zero() || o.is_zero()) return zero();
  QProd r = *this;
  r.coef_ *= o.coef_;
  r.mono_ = r.mono_ + o.mono_;
  for (const auto& [f, k] : o.fac_) {
    auto it = r.fac_.find(f);
    if (it == r.fac_.end()) {
      r.fac_.emplace(f, k);
    } else {
      it->second += k;
      if (it->second == 0) r.fac_.erase(it);
    }
  }
  return r;
}

QProd QProd::operator/(const QProd& o) const {
  if (o.is_zero()) throw std::domain_error("QProd: division by zero");
  QProd inv;
  inv.coef_ = o.coef_.inv();
  inv.mono_ = -o.mono_;
  for (const auto& [f, k] : o.fac_) inv.fac_.emplace(f, -k);
  return *this * inv;
}

QProd QProd::pow(int k) const {
  if (k == 0) return one();
  if (is_zero()) {
    if (k < 0) throw std::domain_error("QProd: zero to negative power");
    return zero();
  }
  QProd r;
  r.coef_ = coef_.pow(k);
  r.mono_ = mono_ * k;
  for (const auto& [f, e] : fac_) r.fac_.emplace(f, e * k);
  return r;
}

RationalExpr QProd::to_rational_expr() const {
  if (is_zero()) return RationalExpr();
  MultiPoly num{Mono(coef_, mono_)};
  MultiPoly den{Rational(1)};
  for (const auto& [f, k] : fac_) {
    if (k > 0)
      num = num * f.pow(k);
    else
      den = den * f.pow(-k);
  }
  return RationalExpr(std::move(num), std::move(den));
}

QProd QProd::sum(const std::vector<QProd>& terms) {
  std::vector<const QProd*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return zero();
  if (live.size() == 1) return *live.front();

  // Common denominator: largest negative multiplicity per factor, largest
  // negative exponent per alphabet variable.
  std::map<MultiPoly, int> dmax;
  ExpVec mden{};
  for (const QProd* t : live) {
    for (const auto& [f, k] : t->fac_)
      if (k < 0) {
        int need = -k;
        auto it = dmax.find(f);
        if (it == dmax.end())
          dmax.emplace(f, need);
        else if (it->second < need)
          it->second = need;
      }
    for (int i = 0; i < kNumVars; ++i)
      if (t->mono_.e[i] < -mden.e[i]) mden.e[i] = -t->mono_.e[i];
  }

  MultiPoly acc;
  for (const QProd* t : live) {
    MultiPoly piece{Mono(t->coef_, t->mono_ + mden)};
    for (const auto& [f, k] : t->fac_) {
      auto it = dmax.find(f);
      int e = k + (it == dmax.end() ? 0 : it->second);
      if (e < 0) throw std::logic_error("QProd::sum: exponent bookkeeping");
      if (e > 0) piece = piece * f.pow(e);
    }
    // Factors this term does not carry still need the full compensation
    // power from the common denominator.
    for (const auto& [f, d] : dmax)
      if (t->fac_.find(f) == t->fac_.end()) piece = piece * f.pow(d);
    acc += piece;
  }

  QProd r;
  r.mono_ = -mden;
  for (const auto& [f, k] : dmax) r.mul_factor(f, -k);
  r.mul_factor(acc, 1);
  return r;
}

}  // namespace mck
