#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nracover/interval_arith.hpp"
#include "nracover/rational.hpp"
#include "nracover/sign.hpp"
#include "nracover/unipoly.hpp"

namespace nracover {

enum class Cmp { Lt = -1, Eq = 0, Gt = 1 };

/// An exact real algebraic number: either a rational value, or the unique
/// root of `defpoly` inside the open interval (lo, hi).
///
/// Algebraic invariants: defpoly has coprime integer coefficients, positive
/// leading coefficient, is square-free, does not vanish at lo or hi, and has
/// exactly one real root in (lo, hi); `index` is that root's 1-based rank
/// among all real roots of defpoly counted from -inf.  Rational roots are
/// normalized to the rational representation (see isolate_roots).
class RealAlgebraic {
 public:
  RealAlgebraic() : rational_(Rational(0)) {}
  RealAlgebraic(const Rational& v) : rational_(v) {}  // NOLINT: implicit by design
  RealAlgebraic(int v) : rational_(Rational(v)) {}    // NOLINT

  /// Constructs the algebraic variant, validating every invariant except
  /// irrationality (which the caller establishes by deflating rational
  /// roots).  Throws Error on violation.
  static RealAlgebraic algebraic(std::shared_ptr<const UniPoly> defpoly,
                                 const Rational& lo, const Rational& hi,
                                 int index);

  bool is_rational() const { return rational_.has_value(); }
  const Rational& rational() const;
  const UniPoly& defpoly() const;
  const std::shared_ptr<const UniPoly>& defpoly_ptr() const;
  int index() const;

  /// Current enclosure: [v, v] for rationals, the open isolating interval's
  /// closure for algebraics.
  RatInterval enclosure() const;
  const Rational& lo() const;
  const Rational& hi() const;

  Sign sign() const;
  bool is_zero() const { return sign() == Sign::Zero; }

  /// Returns the same number with isolating interval width <= max_width
  /// (rationals are returned unchanged).  If bisection ever lands exactly on
  /// the root, the result collapses to the rational representation.
  RealAlgebraic refined(const Rational& max_width) const;
  /// One bisection step (no-op on rationals).
  RealAlgebraic refined_step() const;

  std::string str() const;

  friend Cmp compare(const RealAlgebraic& a, const RealAlgebraic& b);
  bool operator==(const RealAlgebraic& o) const { return compare(*this, o) == Cmp::Eq; }
  bool operator<(const RealAlgebraic& o) const { return compare(*this, o) == Cmp::Lt; }
  bool operator<=(const RealAlgebraic& o) const { return compare(*this, o) != Cmp::Gt; }
  bool operator>(const RealAlgebraic& o) const { return compare(*this, o) == Cmp::Gt; }
  bool operator>=(const RealAlgebraic& o) const { return compare(*this, o) != Cmp::Lt; }

 private:
  std::optional<Rational> rational_;
  std::shared_ptr<const UniPoly> defpoly_;
  Rational lo_, hi_;
  int index_ = 0;
};

/// Exact order on real algebraic numbers.  Equality is decided through the
/// gcd of the defining polynomials (or an exact sign test for rationals),
/// never by refinement alone.
Cmp compare(const RealAlgebraic& a, const RealAlgebraic& b);

/// Exact sign of p at the algebraic point; ZERO is decided via
/// gcd(p, defpoly) having a sign change across the isolating interval.
Sign sign_at(const UniPoly& p, const RealAlgebraic& a);

/// All real roots of p, strictly increasing, with pairwise disjoint
/// isolating intervals; rational roots are returned as rational values.
/// Throws Error on the zero polynomial.
std::vector<RealAlgebraic> isolate_roots(const UniPoly& p);

/// Deterministic rational strictly between the bounds (absent bound =
/// unbounded side).  Picks the value with the smallest power-of-two
/// denominator, then smallest absolute numerator, preferring the negative on
/// ties.  Throws Error when the gap is empty.
Rational rational_between(const std::optional<RealAlgebraic>& lo,
                          const std::optional<RealAlgebraic>& hi);

/// Largest integer <= value * scale (exact; terminates because irrational
/// algebraic values never hit the grid).
Integer floor_scaled(const RealAlgebraic& value, const Integer& scale);

}  // namespace nracover
