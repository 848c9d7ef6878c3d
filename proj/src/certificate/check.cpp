#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nracover/assignment.hpp"
#include "nracover/certificate.hpp"
#include "nracover/errors.hpp"

namespace nracover {

namespace {

std::string idx_path(const std::string& base, size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

struct Checker {
  const Certificate& cert;
  unsigned nvars;

  /// The union of the intervals must be the whole real line: sweep the
  /// intervals sorted by lower bound and demand that each one connects to
  /// the region covered so far (meeting endpoints must not both be open).
  Verdict check_union(const std::vector<CoveringInterval>& cover,
                      const std::string& path) const {
    std::vector<const CoveringInterval*> by_lower;
    by_lower.reserve(cover.size());
    for (const auto& iv : cover) by_lower.push_back(&iv);
    std::stable_sort(by_lower.begin(), by_lower.end(),
                     [](const CoveringInterval* a, const CoveringInterval* b) {
                       return bound_lower_before(a->lower, b->lower);
                     });
    if (by_lower.front()->lower.kind != Bound::Kind::NegInf)
      return Verdict::fail(path, "covering has a gap below " +
                                     by_lower.front()->lower.str());
    Bound covered = by_lower.front()->upper;
    for (size_t k = 1;
         k < by_lower.size() && covered.kind != Bound::Kind::PosInf; ++k) {
      if (!bound_connects(covered, by_lower[k]->lower))
        return Verdict::fail(path, "covering has a gap between " +
                                       covered.str() + " and " +
                                       by_lower[k]->lower.str());
      if (bound_reaches_further(covered, by_lower[k]->upper))
        covered = by_lower[k]->upper;
    }
    if (covered.kind != Bound::Kind::PosInf)
      return Verdict::fail(path, "covering has a gap above " + covered.str());
    return Verdict::ok();
  }

  /// Can `p` be evaluated with the first `assigned` variables set?
  static bool evaluable(const MultiPoly& p, size_t assigned) {
    auto mv = p.main_var();
    return !mv || mv->index < assigned;
  }

  Verdict check_interval(const CoveringInterval& iv, SamplePoint& prefix,
                         const std::string& path) const {
    // The sample must lie inside the interval.
    if (iv.lower.is_value()) {
      Cmp c = compare(iv.lower.value, iv.sample);
      if (c == Cmp::Gt || (c == Cmp::Eq && !iv.lower.closed))
        return Verdict::fail(path, "sample lies outside the interval");
    }
    if (iv.upper.is_value()) {
      Cmp c = compare(iv.sample, iv.upper.value);
      if (c == Cmp::Gt || (c == Cmp::Eq && !iv.upper.closed))
        return Verdict::fail(path, "sample lies outside the interval");
    }

    if (iv.reasons.empty())
      return Verdict::fail(path, "interval without reasons");
    for (int id : iv.reasons)
      if (id < 0 || static_cast<size_t>(id) >= cert.constraints.size())
        return Verdict::fail(path,
                             "reason id " + std::to_string(id) + " out of range");

    // Every finite bound must be an actual root of some characterization
    // polynomial under the ancestor samples.
    const Bound* finite[2] = {iv.lower.is_value() ? &iv.lower : nullptr,
                              iv.upper.is_value() ? &iv.upper : nullptr};
    for (const Bound* b : finite) {
      if (!b) continue;
      SamplePoint pt = prefix;
      pt.push_back(b->value);
      bool is_root = false;
      for (const MultiPoly& q : iv.characterization) {
        // A constant polynomial justifies nothing; in particular the zero
        // polynomial must not make every bound pass as a "root".
        if (q.is_constant()) continue;
        if (!evaluable(q, pt.size())) continue;
        if (sign_of(q, pt) == Sign::Zero) {
          is_root = true;
          break;
        }
      }
      if (!is_root)
        return Verdict::fail(
            path, "bound " + b->value.str() +
                      " is not a root of any characterization polynomial");
    }

    if (iv.children.empty()) {
      // Direct conflict: some reason constraint must evaluate to false at
      // (ancestor samples, this sample).
      SamplePoint pt = prefix;
      pt.push_back(iv.sample);
      bool violated = false;
      for (int id : iv.reasons) {
        const Constraint& c = cert.constraints[static_cast<size_t>(id)];
        if (!evaluable(c.poly, pt.size())) continue;
        if (!sign_satisfies(sign_of(c.poly, pt), c.rel)) {
          violated = true;
          break;
        }
      }
      if (!violated)
        return Verdict::fail(path,
                             "no reason constraint is falsified at the sample");
      return Verdict::ok();
    }

    // Recursive exclusion: the child covering must prove the sample cannot
    // be extended, and this interval's reasons must be exactly the union of
    // the childrens' reasons.
    std::set<int> mine(iv.reasons.begin(), iv.reasons.end());
    std::set<int> from_children;
    for (const auto& ch : iv.children)
      from_children.insert(ch.reasons.begin(), ch.reasons.end());
    if (mine != from_children)
      return Verdict::fail(path,
                           "reasons differ from the union of child reasons");
    prefix.push_back(iv.sample);
    Verdict v = check_level(iv.children, prefix, path + ".children");
    prefix.pop_back();
    return v;
  }

  Verdict check_level(const std::vector<CoveringInterval>& cover,
                      SamplePoint& prefix, const std::string& path) const {
    if (cover.empty()) return Verdict::fail(path, "empty covering");
    if (prefix.size() >= nvars)
      return Verdict::fail(path, "covering nested deeper than the variable count");

    // Structural sanity of every bound pair before the sweep relies on them.
    for (size_t i = 0; i < cover.size(); ++i) {
      const CoveringInterval& iv = cover[i];
      if (iv.lower.kind == Bound::Kind::PosInf)
        return Verdict::fail(idx_path(path, i), "lower bound is +inf");
      if (iv.upper.kind == Bound::Kind::NegInf)
        return Verdict::fail(idx_path(path, i), "upper bound is -inf");
      if (iv.lower.is_value() && iv.upper.is_value()) {
        Cmp c = compare(iv.lower.value, iv.upper.value);
        if (c == Cmp::Gt)
          return Verdict::fail(idx_path(path, i), "empty interval");
        if (c == Cmp::Eq && !(iv.lower.closed && iv.upper.closed))
          return Verdict::fail(idx_path(path, i),
                               "point interval must be closed on both sides");
      }
    }

    Verdict u = check_union(cover, path);
    if (!u.valid) return u;

    for (size_t i = 0; i < cover.size(); ++i) {
      Verdict v = check_interval(cover[i], prefix, idx_path(path, i));
      if (!v.valid) return v;
    }
    return Verdict::ok();
  }
};

}  // namespace

Verdict check_certificate(const Certificate& cert, const Formula& f) {
  try {
    if (!f.order || f.order->names() != cert.variables)
      return Verdict::fail("variables",
                           "variable order does not match the formula");
    if (cert.constraints.size() != f.constraints.size())
      return Verdict::fail("constraints",
                           "constraint count does not match the formula");
    for (size_t i = 0; i < cert.constraints.size(); ++i) {
      const Constraint& a = cert.constraints[i];
      const Constraint& b = f.constraints[i];
      if (a.id != static_cast<int>(i) || b.id != static_cast<int>(i))
        return Verdict::fail(idx_path("constraints", i),
                             "constraint id out of order");
      if (a.rel != b.rel || !(a.poly == b.poly))
        return Verdict::fail(idx_path("constraints", i),
                             "constraint does not match the formula");
    }
    if (cert.covering.empty())
      return Verdict::fail("covering", "empty covering");

    Checker checker{cert, static_cast<unsigned>(cert.variables.size())};
    SamplePoint prefix;
    return checker.check_level(cert.covering, prefix, "covering");
  } catch (const Error& e) {
    return Verdict::fail("", std::string("checker error: ") + e.what());
  }
}

}  // namespace nracover
