#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "nracover/covering.hpp"
#include "nracover/errors.hpp"

namespace nracover {

namespace {

/// False-region analysis of one constraint along v under the prefix: the
/// line is split at the substituted polynomial's roots into alternating
/// sectors and sections; maximal runs of falsifying regions become
/// intervals.  Region 2j is the sector below root j, region 2j+1 the
/// section at root j, region 2k the sector above all k roots.
std::vector<CoveringInterval> false_intervals(
    const Constraint& c, const SamplePoint& s,
    const std::vector<RealAlgebraic>& roots) {
  const size_t k = roots.size();
  const size_t regions = 2 * k + 1;

  std::vector<RealAlgebraic> probe(regions, RealAlgebraic(Rational(0)));
  for (size_t j = 0; j < k; ++j) {
    std::optional<RealAlgebraic> below;
    if (j > 0) below = roots[j - 1];
    probe[2 * j] = RealAlgebraic(rational_between(below, roots[j]));
    probe[2 * j + 1] = roots[j];
  }
  {
    std::optional<RealAlgebraic> below;
    if (k > 0) below = roots[k - 1];
    probe[2 * k] = RealAlgebraic(rational_between(below, {}));
  }

  std::vector<bool> f(regions);
  SamplePoint pt = s;
  pt.push_back(probe[0]);
  for (size_t r = 0; r < regions; ++r) {
    pt.back() = probe[r];
    f[r] = !sign_satisfies(sign_of(c.poly, pt), c.rel);
  }

  std::vector<CoveringInterval> out;
  for (size_t r = 0; r < regions;) {
    if (!f[r]) {
      ++r;
      continue;
    }
    size_t b = r;
    while (b + 1 < regions && f[b + 1]) ++b;

    CoveringInterval iv;
    iv.lower = r == 0           ? Bound::neg_inf()
               : r % 2 == 1     ? Bound::closed_at(roots[(r - 1) / 2])
                                : Bound::open(roots[r / 2 - 1]);
    iv.upper = b == regions - 1 ? Bound::pos_inf()
               : b % 2 == 1     ? Bound::closed_at(roots[(b - 1) / 2])
                                : Bound::open(roots[b / 2]);
    // Prefer a rational sample: the first sector in the run if any.
    size_t pick = r % 2 == 0 ? r : (r + 1 <= b ? r + 1 : r);
    iv.sample = probe[pick];
    iv.reasons = {c.id};
    iv.characterization = {c.poly};
    out.push_back(std::move(iv));
    r = b + 1;
  }
  return out;
}

CoveringInterval full_line(const Constraint& c) {
  CoveringInterval iv;
  iv.lower = Bound::neg_inf();
  iv.upper = Bound::pos_inf();
  iv.sample = RealAlgebraic(Rational(0));
  iv.reasons = {c.id};
  // A constant conflict has no roots to record; anything else must keep the
  // polynomial so projection sees where the constant behavior ends.
  if (!c.poly.is_constant()) iv.characterization = {c.poly};
  return iv;
}

/// Flips a finite bound between interval and complement: the complement
/// contains the endpoint exactly when the interval excluded it.
Bound flip(const Bound& b) {
  Bound r = b;
  r.closed = !r.closed;
  return r;
}

/// One maximal connected component of the complement of an interval union.
struct Gap {
  Bound lower;
  Bound upper;
};

/// Components of R minus the union, in ascending order.
std::vector<Gap> complement(const std::vector<CoveringInterval>& intervals) {
  std::vector<Gap> gaps;
  if (intervals.empty()) {
    gaps.push_back({Bound::neg_inf(), Bound::pos_inf()});
    return gaps;
  }
  std::vector<const CoveringInterval*> by_lower;
  by_lower.reserve(intervals.size());
  for (const auto& iv : intervals) by_lower.push_back(&iv);
  std::stable_sort(by_lower.begin(), by_lower.end(),
                   [](const CoveringInterval* a, const CoveringInterval* b) {
                     return bound_lower_before(a->lower, b->lower);
                   });

  if (by_lower.front()->lower.is_value())
    gaps.push_back({Bound::neg_inf(), flip(by_lower.front()->lower)});
  Bound covered = by_lower.front()->upper;
  for (size_t i = 1; i < by_lower.size(); ++i) {
    if (covered.kind == Bound::Kind::PosInf) break;
    const Bound& lo = by_lower[i]->lower;
    if (bound_connects(covered, lo)) {
      if (bound_reaches_further(covered, by_lower[i]->upper))
        covered = by_lower[i]->upper;
      continue;
    }
    gaps.push_back({flip(covered), flip(lo)});
    covered = by_lower[i]->upper;
  }
  if (covered.kind != Bound::Kind::PosInf)
    gaps.push_back({flip(covered), Bound::pos_inf()});
  return gaps;
}

}  // namespace

std::vector<CoveringInterval> get_unsat_intervals(const Formula& f,
                                                  const SamplePoint& s,
                                                  Variable v) {
  std::vector<CoveringInterval> out;
  for (const Constraint& c : f.constraints) {
    std::optional<Variable> mv = c.poly.main_var();

    // Constant constraints have no variable to cover; when false they rule
    // out the whole line at the first level they are examined (level 1).
    if (!mv) {
      if (v.index == 0 && !sign_satisfies(sign_of(c.poly, {}), c.rel))
        out.push_back(full_line(c));
      continue;
    }
    if (mv->index != v.index) continue;  // not univariate in v under s

    SubstitutedRoots r = roots_of(c.poly, s, v);
    switch (r.kind) {
      case SubstitutedRoots::Kind::Nullified:
        // The zero function: the constraint holds everywhere or nowhere.
        if (!sign_satisfies(Sign::Zero, c.rel)) out.push_back(full_line(c));
        break;
      case SubstitutedRoots::Kind::Constant:
        if (!sign_satisfies(r.constant_sign, c.rel)) out.push_back(full_line(c));
        break;
      case SubstitutedRoots::Kind::Roots: {
        std::vector<CoveringInterval> ivs = false_intervals(c, s, r.roots);
        for (auto& iv : ivs) out.push_back(std::move(iv));
        break;
      }
    }
  }
  return out;
}

std::optional<RealAlgebraic> sample_outside(
    const std::vector<CoveringInterval>& intervals) {
  std::vector<Gap> gaps = complement(intervals);
  if (gaps.empty()) return std::nullopt;

  // Uncovered endpoints of covered regions first, smallest first (gaps
  // ascend and each gap's lower end precedes its upper end).
  for (const Gap& g : gaps) {
    if (g.lower.is_value() && g.lower.closed) return g.lower.value;
    if (g.upper.is_value() && g.upper.closed) return g.upper.value;
  }

  // No such point: the simplest rational inside the leftmost gap.
  const Gap& g = gaps.front();
  std::optional<RealAlgebraic> lo, hi;
  if (g.lower.is_value()) lo = g.lower.value;
  if (g.upper.is_value()) hi = g.upper.value;
  return RealAlgebraic(rational_between(lo, hi));
}

void sort_covering(std::vector<CoveringInterval>& intervals) {
  std::stable_sort(intervals.begin(), intervals.end(),
                   [](const CoveringInterval& a, const CoveringInterval& b) {
                     if (bound_lower_before(a.lower, b.lower)) return true;
                     if (bound_lower_before(b.lower, a.lower)) return false;
                     if (bound_reaches_further(b.upper, a.upper)) return true;
                     if (bound_reaches_further(a.upper, b.upper)) return false;
                     return a.reasons < b.reasons;
                   });
}

std::vector<CoveringInterval> minimal_subcover(
    std::vector<CoveringInterval> intervals) {
  sort_covering(intervals);
  std::vector<CoveringInterval> keep;
  Bound covered;
  bool have = false;
  while (!have || covered.kind != Bound::Kind::PosInf) {
    const CoveringInterval* best = nullptr;
    for (const CoveringInterval& iv : intervals) {
      if (have) {
        if (!bound_connects(covered, iv.lower)) {
          // Sorted by lower: later intervals start even further right.
          break;
        }
        if (!bound_reaches_further(covered, iv.upper)) continue;
      } else if (iv.lower.kind != Bound::Kind::NegInf) {
        break;
      }
      if (!best || bound_reaches_further(best->upper, iv.upper)) best = &iv;
    }
    if (!best) throw Error("minimal_subcover: union is not the whole line");
    keep.push_back(*best);
    covered = best->upper;
    have = true;
  }
  return keep;
}

}  // namespace nracover
