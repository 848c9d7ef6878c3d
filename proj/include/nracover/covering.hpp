#pragma once

#include <optional>
#include <vector>

#include "nracover/assignment.hpp"
#include "nracover/certificate.hpp"
#include "nracover/constraint.hpp"

namespace nracover {

/// For each constraint that is univariate in `v` once the prefix `s` is
/// substituted, computes the maximal intervals of v-values on which the
/// constraint is false, bounded by real roots of the substituted polynomial.
/// Each interval carries the constraint id as its reason and the original
/// constraint polynomial as its characterization.  A constraint whose
/// polynomial vanishes identically (or is constant) under `s` contributes a
/// full-line interval when falsified and nothing when satisfied; this is
/// never an error here.  Constraints still involving later variables are
/// skipped.  Results are ordered by constraint id, then left to right.
std::vector<CoveringInterval> get_unsat_intervals(const Formula& f,
                                                  const SamplePoint& s,
                                                  Variable v);

/// A point of the real line not covered by the union of the intervals, or
/// nullopt if the union is the whole line.  Preference order: the smallest
/// uncovered finite endpoint of a covered region (these are roots worth
/// probing exactly), otherwise the simplest rational inside the leftmost
/// uncovered gap.
std::optional<RealAlgebraic> sample_outside(
    const std::vector<CoveringInterval>& intervals);

/// Greedy minimal subcover of a full covering: scan left to right, always
/// keeping the interval that connects to the region covered so far and
/// reaches furthest right.  The result is sorted by lower bound.  Throws
/// Error if the union is not the whole line.
std::vector<CoveringInterval> minimal_subcover(
    std::vector<CoveringInterval> intervals);

/// Sorts intervals by lower bound, ties broken by further-reaching upper
/// bound first, then by reason ids.  The canonical order for stored
/// coverings.
void sort_covering(std::vector<CoveringInterval>& intervals);

/// Projects a full covering of variable `v` under sample `s` one level down:
/// discriminants and required coefficients of every characterization
/// polynomial of the minimal subcover, resultants between the polynomials
/// bounding consecutive intervals of the subcover, and v-free polynomials
/// passed through; square-free parts taken, contents split off, constants
/// dropped, result canonically sorted.  Throws NullificationError if a
/// projection input vanishes identically at `s`.
std::vector<MultiPoly> construct_characterization(
    const SamplePoint& s, const std::vector<CoveringInterval>& covering,
    Variable v);

/// The maximal interval around `s_i` bounded by the nearest real roots of
/// the characterization polynomials under `s_prefix` (infinite if none),
/// open at root bounds; if `s_i` is itself a root of one of them, the point
/// interval [s_i, s_i].  Fills lower/upper/sample/characterization; the
/// caller supplies reasons and children.
CoveringInterval interval_from_characterization(
    const SamplePoint& s_prefix, const std::vector<MultiPoly>& chars,
    const RealAlgebraic& s_i);

/// Outcome of the covering decision procedure.  Incomplete reports a
/// nullification the projection theory cannot handle; it is never silently
/// converted into SAT or UNSAT.
struct CoveringResult {
  enum class Kind { Sat, Unsat, Incomplete };

  Kind kind = Kind::Incomplete;
  SamplePoint witness;      // Sat: one exact value per variable
  Certificate certificate;  // Unsat: level-1 covering of the first variable

  bool sat() const { return kind == Kind::Sat; }
  bool unsat() const { return kind == Kind::Unsat; }
};

/// Decides a conjunction of polynomial constraints over f.order by
/// recursively extending samples and generalizing conflicts to covering
/// intervals.  SAT witnesses are re-verified by exact sign evaluation before
/// being returned; UNSAT certificates carry every interval accumulated at
/// every level (superseded ones included), sorted canonically.
CoveringResult decide(const Formula& f);

/// Minimizes a certificate: at every level keep only the greedy minimal
/// subcover, recurse into the kept children, and recompute each derived
/// interval's reasons as the union of its remaining children's reasons.
Certificate prune_certificate(const Certificate& cert);

}  // namespace nracover
