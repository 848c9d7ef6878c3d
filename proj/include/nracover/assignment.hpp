#pragma once

#include <vector>

#include "nracover/constraint.hpp"
#include "nracover/multipoly.hpp"
#include "nracover/real_algebraic.hpp"

namespace nracover {

/// Exact values for the first k variables of the order (s[i] assigns var i).
using SamplePoint = std::vector<RealAlgebraic>;

/// Exact sign of p at s.  Every variable of p must be assigned by s.
/// Rational coordinates are substituted directly; algebraic coordinates are
/// handled by interval refinement backed by an exact resultant-based zero
/// test, so the result is always certain.
Sign sign_of(const MultiPoly& p, const SamplePoint& s);

/// Shape of p(s, v): the zero function, a nonzero constant, or a genuine
/// univariate polynomial in v.
struct SubstitutedRoots {
  enum class Kind { Nullified, Constant, Roots };
  Kind kind = Kind::Constant;
  /// Set for Kind::Constant (never Zero; that case is Nullified).
  Sign constant_sign = Sign::Zero;
  /// Set for Kind::Roots: all real roots of p(s, v), strictly increasing
  /// (may be empty).
  std::vector<RealAlgebraic> roots;
};

/// Substitutes the sample into p and isolates the real roots of the
/// resulting univariate polynomial in v.  Requires v to be the variable with
/// index s.size() and p to use no variable beyond v.
SubstitutedRoots roots_of(const MultiPoly& p, const SamplePoint& s, Variable v);

}  // namespace nracover
