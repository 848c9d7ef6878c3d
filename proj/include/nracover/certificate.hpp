#pragma once

#include <string>
#include <vector>

#include "nracover/constraint.hpp"
#include "nracover/multipoly.hpp"
#include "nracover/real_algebraic.hpp"

namespace nracover {

/// One endpoint of a covering interval: -inf, +inf, or a finite value with
/// an open/closed flag.
struct Bound {
  enum class Kind { NegInf, PosInf, Value };

  Kind kind = Kind::NegInf;
  RealAlgebraic value;  // meaningful only when kind == Value
  bool closed = false;  // likewise

  static Bound neg_inf() { return {}; }
  static Bound pos_inf();
  static Bound open(RealAlgebraic v);
  static Bound closed_at(RealAlgebraic v);

  bool is_value() const { return kind == Kind::Value; }
  bool operator==(const Bound& o) const;
  std::string str() const;  // "-inf", "+inf", or the value
};

/// Orders intervals by lower bound for coverage sweeps: -inf first, then
/// ascending value, a closed endpoint before an open one at equal values.
bool bound_lower_before(const Bound& a, const Bound& b);

/// True if coverage reaching up to `covered` (an upper bound) and an interval
/// starting at `lower` leave no uncovered point between them.
bool bound_connects(const Bound& covered, const Bound& lower);

/// True if upper bound `b` reaches further right than upper bound `cur`.
bool bound_reaches_further(const Bound& cur, const Bound& b);

/// One excluded interval of a covering over a single variable.  `reasons`
/// are ids of the input constraints responsible for the exclusion;
/// `characterization` lists the polynomials whose roots bound the interval
/// and justify generalizing the conflict beyond `sample`; `children`, when
/// nonempty, is the covering of the next variable at `sample` from which
/// this exclusion was derived (empty = direct conflict).
struct CoveringInterval {
  Bound lower;
  Bound upper;
  RealAlgebraic sample;
  std::vector<int> reasons;  // strictly increasing constraint ids
  std::vector<MultiPoly> characterization;
  std::vector<CoveringInterval> children;

  bool operator==(const CoveringInterval& o) const;
};

/// Self-contained unsatisfiability certificate: the input constraints as
/// parsed, the variable order, and a covering of the first variable whose
/// intervals recursively exclude every assignment.
struct Certificate {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;  // in id order: constraints[i].id == i
  std::vector<CoveringInterval> covering;
  std::string producer;

  bool operator==(const Certificate& o) const;
};

/// Checker outcome; invalid verdicts pinpoint the failing element.
struct Verdict {
  bool valid = true;
  std::string path;  // e.g. "covering[1].children[0]"
  std::string reason;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string path, std::string reason);
  std::string str() const;  // "valid" or "invalid: <path>: <reason>"
};

/// Canonical JSON encoding: fixed key order, no whitespace, rationals as
/// "num/den" strings, algebraic numbers as defining polynomial + isolating
/// interval + root index, integers in full precision.  Equal certificates
/// serialize to identical bytes.
std::string serialize(const Certificate& cert);

/// Inverse of serialize on its image.  Throws ParseError with a location on
/// malformed documents, non-canonical encodings, and algebraic values whose
/// defining polynomial, interval, or root index fail re-validation against
/// fresh root isolation.
Certificate deserialize(const std::string& bytes);

/// Validates a certificate against a formula without trusting its producer:
/// the constraints must echo the formula, every covering level must union to
/// the whole real line, every direct conflict must be re-confirmed by sign
/// evaluation at its sample, every finite bound must be a root of a listed
/// characterization polynomial, and recursive exclusions must carry a valid
/// child covering whose combined reasons match.  All arithmetic is redone
/// from scratch; no solver state is consulted.
Verdict check_certificate(const Certificate& cert, const Formula& f);

}  // namespace nracover
