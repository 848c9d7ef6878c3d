#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "nracover/sign.hpp"

namespace nracover {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form:
/// gcd(num, den) == 1 and den > 0.  Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                   // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const Integer& n) : v_(n) {}        // NOLINT
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    r.v_.canonicalize();
    return r;
  }

  /// Parses "num" or "num/den" with optional leading '-'.  Throws Error on
  /// malformed input or zero denominator.  If `require_canonical` is set the
  /// textual form must already be canonical (used by the certificate reader).
  static Rational parse(const std::string& text, bool require_canonical = false);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  Sign sign() const { return sign_of_int(sgn(v_)); }

  Rational operator-() const { return from_raw(-v_); }
  Rational operator+(const Rational& o) const { return from_raw(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return from_raw(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return from_raw(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return from_raw(::abs(v_)); }
  Rational reciprocal() const;
  Integer floor() const;
  Integer ceil() const;

  Rational pow(unsigned e) const;

  /// Canonical serialization form, always "num/den" (e.g. "-3/4", "0/1").
  std::string str() const;
  /// Display form: integers without the "/1" suffix.
  std::string pretty() const;

  /// Approximate double value (test/diagnostic use only).
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  static Rational from_raw(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;  // GMP arithmetic on canonical operands stays canonical
  }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow(const Integer& b, unsigned e);

}  // namespace nracover
