#include "mck/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mck {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class v(s);
      v.canonicalize();
      return Rational(v);
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(v_ / o.v_, RawTag{});
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(1 / v_, RawTag{});
}

Rational Rational::pow(long k) const {
  if (k == 0) return Rational(1);
  if (k < 0) return inv().pow(-k);
  mpq_class base = v_, acc = 1;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return Rational(acc, RawTag{});
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer");
  if (!v_.get_num().fits_slong_p())
    throw std::domain_error("Rational: integer overflow");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace mck
