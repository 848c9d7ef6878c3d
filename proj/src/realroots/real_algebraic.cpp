#include "nracover/real_algebraic.hpp"

#include <sstream>

#include "nracover/errors.hpp"

namespace nracover {

namespace {

/// Exact interval-arithmetic evaluation (Horner) of p over a closed box.
RatInterval eval_interval(const UniPoly& p, const RatInterval& x) {
  RatInterval r = RatInterval::point(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    r = r * x + RatInterval::point(*it);
  return r;
}

}  // namespace

RealAlgebraic RealAlgebraic::algebraic(std::shared_ptr<const UniPoly> defpoly,
                                       const Rational& lo, const Rational& hi,
                                       int index) {
  if (!defpoly || defpoly->degree() < 1)
    throw Error("algebraic number needs a nonconstant defining polynomial");
  if (!(lo < hi)) throw Error("algebraic number: empty isolating interval");
  if (index < 1) throw Error("algebraic number: root index must be >= 1");
  Sign sl = defpoly->sign_at(lo), sh = defpoly->sign_at(hi);
  if (sl == Sign::Zero || sh == Sign::Zero)
    throw Error("algebraic number: defining polynomial vanishes at an endpoint");
  if (sl == sh)
    throw Error("algebraic number: no sign change across the isolating interval");
  RealAlgebraic a;
  a.rational_.reset();
  a.defpoly_ = std::move(defpoly);
  a.lo_ = lo;
  a.hi_ = hi;
  a.index_ = index;
  return a;
}

const Rational& RealAlgebraic::rational() const {
  if (!rational_) throw Error("rational() on an algebraic value");
  return *rational_;
}

const UniPoly& RealAlgebraic::defpoly() const {
  if (rational_) throw Error("defpoly() on a rational value");
  return *defpoly_;
}

const std::shared_ptr<const UniPoly>& RealAlgebraic::defpoly_ptr() const {
  if (rational_) throw Error("defpoly_ptr() on a rational value");
  return defpoly_;
}

int RealAlgebraic::index() const {
  if (rational_) throw Error("index() on a rational value");
  return index_;
}

RatInterval RealAlgebraic::enclosure() const {
  if (rational_) return RatInterval::point(*rational_);
  return {lo_, hi_};
}

const Rational& RealAlgebraic::lo() const {
  if (rational_) return *rational_;
  return lo_;
}

const Rational& RealAlgebraic::hi() const {
  if (rational_) return *rational_;
  return hi_;
}

Sign RealAlgebraic::sign() const {
  if (rational_) return rational_->sign();
  if (lo_.sign() != Sign::Negative) return Sign::Positive;  // 0 <= lo < value
  if (hi_.sign() != Sign::Positive) return Sign::Negative;
  // 0 lies strictly inside (lo, hi); 0 is not the root (endpoint-style sign
  // test): the root is below 0 iff the defining polynomial changes sign on
  // (lo, 0].
  Sign at_zero = defpoly_->sign_at(Rational(0));
  if (at_zero == Sign::Zero) return Sign::Zero;  // only after missed deflation
  return at_zero == defpoly_->sign_at(lo_) ? Sign::Positive : Sign::Negative;
}

RealAlgebraic RealAlgebraic::refined_step() const {
  if (rational_) return *this;
  Rational mid = (lo_ + hi_) * Rational(1, 2);
  Sign sm = defpoly_->sign_at(mid);
  if (sm == Sign::Zero) return RealAlgebraic(mid);  // exact hit: collapse
  RealAlgebraic r = *this;
  if (sm == defpoly_->sign_at(lo_))
    r.lo_ = mid;
  else
    r.hi_ = mid;
  return r;
}

RealAlgebraic RealAlgebraic::refined(const Rational& max_width) const {
  if (max_width.sign() != Sign::Positive) throw Error("refine: width must be positive");
  RealAlgebraic r = *this;
  while (!r.rational_ && r.hi_ - r.lo_ > max_width) r = r.refined_step();
  return r;
}

std::string RealAlgebraic::str() const {
  if (rational_) return rational_->pretty();
  std::ostringstream os;
  os << "root[" << index_ << "](" << defpoly_->str() << ") in ("
     << lo_.pretty() << ", " << hi_.pretty() << ")";
  return os.str();
}

namespace {

/// Compares a rational against an algebraic value.
Cmp compare_rat_alg(const Rational& r, const RealAlgebraic& b) {
  if (r <= b.lo()) return Cmp::Lt;
  if (r >= b.hi()) return Cmp::Gt;
  const UniPoly& p = b.defpoly();
  Sign at_r = p.sign_at(r);
  if (at_r == Sign::Zero) return Cmp::Eq;  // missed-deflation safety net
  // The unique root sits left of r iff p changes sign on (lo, r).
  return at_r == p.sign_at(b.lo()) ? Cmp::Lt : Cmp::Gt;
}

Cmp flip(Cmp c) {
  return c == Cmp::Lt ? Cmp::Gt : (c == Cmp::Gt ? Cmp::Lt : Cmp::Eq);
}

}  // namespace

Cmp compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    auto c = a.rational() <=> b.rational();
    return c < 0 ? Cmp::Lt : (c > 0 ? Cmp::Gt : Cmp::Eq);
  }
  if (a.is_rational()) return compare_rat_alg(a.rational(), b);
  if (b.is_rational()) return flip(compare_rat_alg(b.rational(), a));

  if (a.hi() <= b.lo()) return Cmp::Lt;
  if (b.hi() <= a.lo()) return Cmp::Gt;

  // Same defining polynomial: the 1-based rank decides everything.
  if (a.defpoly() == b.defpoly()) {
    if (a.index() == b.index()) return Cmp::Eq;
    return a.index() < b.index() ? Cmp::Lt : Cmp::Gt;
  }

  // Equality via gcd: a == b iff gcd(pa, pb) has a root in the overlap,
  // which (both intervals isolating) can only be the shared root and shows
  // up as a sign change.
  Rational l = std::max(a.lo(), b.lo());
  Rational h = std::min(a.hi(), b.hi());
  UniPoly g = UniPoly::gcd(a.defpoly(), b.defpoly());
  if (g.degree() >= 1 && g.sign_at(l) != g.sign_at(h)) return Cmp::Eq;

  // Distinct values: refine until the intervals separate.
  RealAlgebraic x = a, y = b;
  while (true) {
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    if (x.hi() <= y.lo()) return Cmp::Lt;
    if (y.hi() <= x.lo()) return Cmp::Gt;
    if (x.hi() - x.lo() >= y.hi() - y.lo())
      x = x.refined_step();
    else
      y = y.refined_step();
  }
}

Sign sign_at(const UniPoly& p, const RealAlgebraic& a) {
  if (a.is_rational()) return p.sign_at(a.rational());
  if (p.is_zero()) return Sign::Zero;
  if (p.degree() == 0) return p.lc().sign();
  UniPoly g = UniPoly::gcd(p, a.defpoly());
  if (g.degree() >= 1 && g.sign_at(a.lo()) != g.sign_at(a.hi()))
    return Sign::Zero;
  RealAlgebraic x = a;
  while (true) {
    if (x.is_rational()) return p.sign_at(x.rational());
    if (auto s = eval_interval(p, x.enclosure()).definite_sign()) return *s;
    x = x.refined_step();
  }
}

Integer floor_scaled(const RealAlgebraic& value, const Integer& scale) {
  if (value.is_rational()) {
    const Rational& r = value.rational();
    return Rational(r.numerator() * scale, r.denominator()).floor();
  }
  RealAlgebraic x = value;
  for (int guard = 0; guard < 100000; ++guard) {
    if (x.is_rational()) return floor_scaled(x, scale);
    Integer fl = Rational(x.lo().numerator() * scale, x.lo().denominator()).floor();
    Integer fh = Rational(x.hi().numerator() * scale, x.hi().denominator()).floor();
    if (fl == fh) return fl;
    x = x.refined_step();
  }
  throw Error("floor_scaled: refinement did not converge");
}

namespace {

Integer ceil_scaled(const RealAlgebraic& value, const Integer& scale) {
  if (value.is_rational()) {
    const Rational& r = value.rational();
    return Rational(r.numerator() * scale, r.denominator()).ceil();
  }
  RealAlgebraic x = value;
  for (int guard = 0; guard < 100000; ++guard) {
    if (x.is_rational()) return ceil_scaled(x, scale);
    Integer cl = Rational(x.lo().numerator() * scale, x.lo().denominator()).ceil();
    Integer ch = Rational(x.hi().numerator() * scale, x.hi().denominator()).ceil();
    if (cl == ch) return cl;
    x = x.refined_step();
  }
  throw Error("ceil_scaled: refinement did not converge");
}

}  // namespace

Rational rational_between(const std::optional<RealAlgebraic>& lo,
                          const std::optional<RealAlgebraic>& hi) {
  if (lo && hi && compare(*lo, *hi) != Cmp::Lt)
    throw Error("rational_between: empty gap");
  if (!lo && !hi) return Rational(0);
  if (lo && !hi) {
    if (lo->sign() == Sign::Negative) return Rational(0);
    return Rational(floor_scaled(*lo, Integer(1)) + 1);
  }
  if (!lo && hi) {
    if (hi->sign() == Sign::Positive) return Rational(0);
    return Rational(ceil_scaled(*hi, Integer(1)) - 1);
  }
  for (Integer d(1);; d <<= 1) {
    Integer a = floor_scaled(*lo, d) + 1;   // smallest n with n/d > lo
    Integer b = ceil_scaled(*hi, d) - 1;    // largest n with n/d < hi
    if (a > b) continue;
    Integer n;
    if (a <= 0 && 0 <= b)
      n = 0;
    else if (a > 0)
      n = a;
    else
      n = b;
    return Rational(n, d);
  }
}

}  // namespace nracover
