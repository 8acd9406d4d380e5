#include "mck/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace mck {

namespace {

void check_dim(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": mixed variable counts");
}

}  // namespace

LaurentX LaurentX::constant(int n, const RationalExpr& c) {
  LaurentX r(n);
  r.add_term(XExp(static_cast<size_t>(n), 0), c);
  return r;
}

void LaurentX::add_term(const XExp& e, const RationalExpr& c) {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("LaurentX::add_term: wrong exponent length");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalExpr LaurentX::coeff(const XExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RationalExpr() : it->second;
}

LaurentX LaurentX::operator+(const LaurentX& o) const {
  check_dim(n_, o.n_, "LaurentX::+");
  LaurentX r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentX& LaurentX::operator+=(const LaurentX& o) {
  check_dim(n_, o.n_, "LaurentX::+=");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentX LaurentX::operator-(const LaurentX& o) const {
  check_dim(n_, o.n_, "LaurentX::-");
  LaurentX r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentX LaurentX::operator-() const {
  LaurentX r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentX LaurentX::operator*(const LaurentX& o) const {
  check_dim(n_, o.n_, "LaurentX::*");
  LaurentX r(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      XExp e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

bool LaurentX::operator==(const LaurentX& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

LaurentX LaurentX::scale(const RationalExpr& c) const {
  LaurentX r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentX LaurentX::mul_term(const XExp& e, const RationalExpr& c) const {
  LaurentX r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e1, c1] : terms_) {
    XExp e2 = e1;
    for (size_t i = 0; i < e2.size(); ++i) e2[i] += e[i];
    r.terms_.emplace(e2, c1 * c);
  }
  return r;
}

LaurentX LaurentX::q_shift(int i, const RationalExpr& shift) const {
  LaurentX r(n_);
  for (const auto& [e, c] : terms_) {
    RationalExpr f = c * shift.pow(e[static_cast<size_t>(i)]);
    if (!f.is_zero()) r.terms_.emplace(e, f);
  }
  return r;
}

namespace {

XExp exp_floor(const std::map<XExp, RationalExpr>& terms) {
  XExp m = terms.begin()->first;
  for (const auto& [e, c] : terms) {
    (void)c;
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

}  // namespace

LaurentX LaurentX::divide_exact(const LaurentX& divisor) const {
  check_dim(n_, divisor.n_, "LaurentX::divide_exact");
  if (divisor.is_zero()) throw std::domain_error("LaurentX: division by zero");
  if (is_zero()) return LaurentX(n_);

  const auto& dlead = *divisor.terms_.rbegin();
  // Newton polytopes add under multiplication, so in an exact division every
  // quotient exponent is componentwise >= floor(numerator) - floor(divisor).
  // Violating that bound proves inexactness; respecting it keeps the shifted
  // remainder in N^n, where lex is a well-order, so the loop terminates.
  XExp qfloor = exp_floor(terms_);
  const XExp dfloor = exp_floor(divisor.terms_);
  for (size_t i = 0; i < qfloor.size(); ++i) qfloor[i] -= dfloor[i];

  LaurentX rem = *this;
  LaurentX quot(n_);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    XExp qe = rlead.first;
    for (size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= dlead.first[i];
      if (qe[i] < qfloor[i]) throw std::domain_error("LaurentX: inexact division");
    }
    RationalExpr qc = rlead.second / dlead.second;
    quot.add_term(qe, qc);
    rem += divisor.mul_term(qe, -qc);
  }
  return quot;
}

LaurentX LaurentX::map_coeffs(
    const std::function<RationalExpr(const RationalExpr&)>& f) const {
  LaurentX r(n_);
  for (const auto& [e, c] : terms_) {
    RationalExpr v = f(c);
    if (!v.is_zero()) r.terms_.emplace(e, v);
  }
  return r;
}

LaurentX LaurentX::swap_vars(int i, int j) const {
  LaurentX r(n_);
  for (const auto& [e, c] : terms_) {
    XExp e2 = e;
    std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(j)]);
    r.add_term(e2, c);
  }
  return r;
}

LaurentX LaurentX::invert_var(int i) const {
  LaurentX r(n_);
  for (const auto& [e, c] : terms_) {
    XExp e2 = e;
    e2[static_cast<size_t>(i)] = -e2[static_cast<size_t>(i)];
    r.add_term(e2, c);
  }
  return r;
}

Partition dominant_weight(const XExp& e) {
  std::vector<int> v;
  v.reserve(e.size());
  for (int32_t x : e) v.push_back(x < 0 ? -x : x);
  return Partition(std::move(v));
}

std::vector<XExp> weyl_orbit(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("weyl_orbit: length(lambda) > n");
  std::vector<int32_t> base;
  for (int i = 0; i < n; ++i) base.push_back(lambda.part(i));
  std::sort(base.begin(), base.end());  // ascending for next_permutation
  std::vector<XExp> orbit;
  do {
    std::vector<size_t> nz;
    for (size_t i = 0; i < base.size(); ++i)
      if (base[i] != 0) nz.push_back(i);
    for (size_t mask = 0; mask < (size_t(1) << nz.size()); ++mask) {
      XExp e(base.begin(), base.end());
      for (size_t b = 0; b < nz.size(); ++b)
        if (mask & (size_t(1) << b)) e[nz[b]] = -e[nz[b]];
      orbit.push_back(std::move(e));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return orbit;
}

LaurentSym LaurentSym::constant(int n, const RationalExpr& c) {
  LaurentSym r(n);
  r.add_coeff(Partition(), c);
  return r;
}

LaurentSym LaurentSym::monomial_basis(int n, const Partition& lambda) {
  if (lambda.length() > n)
    throw std::invalid_argument("monomial_basis: length(lambda) > n");
  LaurentSym r(n);
  r.add_coeff(lambda, RationalExpr(1));
  return r;
}

void LaurentSym::add_coeff(const Partition& lambda, const RationalExpr& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

RationalExpr LaurentSym::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RationalExpr() : it->second;
}

LaurentSym LaurentSym::operator+(const LaurentSym& o) const {
  check_dim(n_, o.n_, "LaurentSym::+");
  LaurentSym r = *this;
  for (const auto& [l, c] : o.coeffs_) r.add_coeff(l, c);
  return r;
}

LaurentSym& LaurentSym::operator+=(const LaurentSym& o) {
  check_dim(n_, o.n_, "LaurentSym::+=");
  for (const auto& [l, c] : o.coeffs_) add_coeff(l, c);
  return *this;
}

LaurentSym LaurentSym::operator-(const LaurentSym& o) const {
  check_dim(n_, o.n_, "LaurentSym::-");
  LaurentSym r = *this;
  for (const auto& [l, c] : o.coeffs_) r.add_coeff(l, -c);
  return r;
}

LaurentSym LaurentSym::operator-() const {
  LaurentSym r(n_);
  for (const auto& [l, c] : coeffs_) r.coeffs_.emplace(l, -c);
  return r;
}

LaurentSym LaurentSym::scale(const RationalExpr& c) const {
  LaurentSym r(n_);
  if (c.is_zero()) return r;
  for (const auto& [l, v] : coeffs_) r.coeffs_.emplace(l, v * c);
  return r;
}

LaurentSym LaurentSym::mul(const LaurentSym& o) const {
  check_dim(n_, o.n_, "LaurentSym::mul");
  return from_full(expand_full() * o.expand_full());
}

bool LaurentSym::operator==(const LaurentSym& o) const {
  if (n_ != o.n_ || coeffs_.size() != o.coeffs_.size()) return false;
  auto it = o.coeffs_.begin();
  for (const auto& [l, c] : coeffs_) {
    if (it->first != l || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

LaurentX LaurentSym::expand_full() const {
  LaurentX r(n_);
  for (const auto& [l, c] : coeffs_)
    for (const auto& e : weyl_orbit(l, n_)) r.add_term(e, c);
  return r;
}

LaurentSym LaurentSym::from_full(const LaurentX& f) {
  LaurentSym r(f.n());
  size_t covered = 0;
  for (const auto& [e, c] : f.terms()) {
    Partition dom = dominant_weight(e);
    bool is_dom = true;
    for (int i = 0; i < f.n(); ++i)
      if (e[static_cast<size_t>(i)] != dom.part(i)) {
        is_dom = false;
        break;
      }
    if (is_dom) {
      r.coeffs_.emplace(dom, c);
      covered += weyl_orbit(dom, f.n()).size();
    }
  }
  // Invariance: every term must match its dominant representative, and each
  // dominant orbit must be fully present.
  if (covered != f.terms().size())
    throw std::domain_error("LaurentSym::from_full: not W-invariant (orbit sizes)");
  for (const auto& [e, c] : f.terms()) {
    auto it = r.coeffs_.find(dominant_weight(e));
    if (it == r.coeffs_.end() || !(it->second == c))
      throw std::domain_error("LaurentSym::from_full: not W-invariant");
  }
  return r;
}

LaurentSym LaurentSym::map_coeffs(
    const std::function<RationalExpr(const RationalExpr&)>& f) const {
  LaurentSym r(n_);
  for (const auto& [l, c] : coeffs_) {
    RationalExpr v = f(c);
    if (!v.is_zero()) r.coeffs_.emplace(l, v);
  }
  return r;
}

std::string LaurentSym::str() const {
  if (coeffs_.empty()) return "0";
  // Weight descending, then lex descending, matching the solve order.
  std::vector<const std::pair<const Partition, RationalExpr>*> items;
  for (const auto& kv : coeffs_) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [](auto* a, auto* b) {
    if (a->first.weight() != b->first.weight())
      return a->first.weight() > b->first.weight();
    return a->first > b->first;
  });
  std::string out;
  for (auto* kv : items) {
    if (!out.empty()) out += " + ";
    std::string cs = kv->second.str();
    std::string m = "m" + kv->first.str();
    if (cs == "1") {
      out += m;
    } else if (cs.find_first_of("+-/ ") == std::string::npos) {
      out += cs + "*" + m;
    } else {
      out += "(" + cs + ")*" + m;
    }
  }
  return out;
}

}  // namespace mck
