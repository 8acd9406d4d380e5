#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mck {

// Arbitrary-precision rational with the usual normalization invariants:
// gcd(num, den) == 1, den > 0, zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  // Parses "p", "-p", or "p/q".
  static Rational parse(const std::string& s);

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_, RawTag{}); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_, RawTag{}); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_, RawTag{}); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-v_, RawTag{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational pow(long k) const;
  Rational abs() const { return Rational(::abs(v_), RawTag{}); }
  Rational inv() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // Integer value; throws std::domain_error unless is_integer() and it fits.
  long to_long() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Tag-dispatch ctor for already-canonical results of arithmetic.
  struct RawTag {};
  Rational(mpq_class v, RawTag) : v_(std::move(v)) {}
  mpq_class v_;
};

// gcd of numerators / lcm of denominators helpers used by content removal.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace mck
