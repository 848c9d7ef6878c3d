#pragma once

#include <optional>

#include "nracover/rational.hpp"
#include "nracover/sign.hpp"

namespace nracover {

/// Closed rational interval [lo, hi]; used for outward-rounding-free exact
/// interval evaluation of polynomials at boxed algebraic points.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(const Rational& v) { return {v, v}; }

  bool contains_zero() const {
    return lo.sign() != Sign::Positive && hi.sign() != Sign::Negative;
  }
  /// Sign if it is the same across the whole interval.
  std::optional<Sign> definite_sign() const {
    if (lo.sign() == Sign::Positive) return Sign::Positive;
    if (hi.sign() == Sign::Negative) return Sign::Negative;
    if (lo.is_zero() && hi.is_zero()) return Sign::Zero;
    return std::nullopt;
  }
  Rational width() const { return hi - lo; }

  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return *this + (-o); }
  RatInterval operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }
  RatInterval pow(unsigned e) const {
    RatInterval r = point(Rational(1));
    RatInterval b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e > 0) b = b * b;
    }
    return r;
  }
};

}  // namespace nracover
