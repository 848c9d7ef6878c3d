#include "nracover/assignment.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "nracover/errors.hpp"
#include "nracover/polyops.hpp"
#include "nracover/unipoly.hpp"

namespace nracover {

namespace {

/// Algebraic coordinates of a sample, paired with their variables.
using AlgCoords = std::vector<std::pair<Variable, RealAlgebraic>>;

constexpr int kQuickRefineRounds = 6;

/// Encloses p over the box given by the current coordinate enclosures.
RatInterval box_eval(const MultiPoly& p, const AlgCoords& algs) {
  std::vector<RatInterval> box;
  for (const auto& [v, a] : algs) {
    if (box.size() <= v.index) box.resize(v.index + 1, RatInterval::point(Rational(0)));
    box[v.index] = a.enclosure();
  }
  RatInterval acc = RatInterval::point(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    RatInterval term = RatInterval::point(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * box.at(i).pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

/// One bisection step on every coordinate; true if any collapsed to a
/// rational (callers then re-substitute).
bool refine_all(AlgCoords& algs) {
  bool collapsed = false;
  for (auto& [v, a] : algs) {
    a = a.refined_step();
    collapsed = collapsed || a.is_rational();
  }
  return collapsed;
}

/// Content of W in Q[xv]: the monic gcd of the coefficient polynomials of W
/// grouped by the monomials in all other variables.  W must be nonzero.
UniPoly univariate_content(const MultiPoly& W, Variable xv) {
  std::map<ExpVec, std::vector<Rational>, ExpLess> groups;
  for (const auto& [e, c] : W.terms()) {
    unsigned k = xv.index < e.size() ? e[xv.index] : 0;
    ExpVec rest = e;
    if (xv.index < rest.size()) rest[xv.index] = 0;
    auto& cs = groups[rest];
    if (cs.size() <= k) cs.resize(k + 1, Rational(0));
    cs[k] = cs[k] + c;
  }
  UniPoly g;
  for (const auto& [rest, cs] : groups) {
    UniPoly u(cs);
    g = g.is_zero() ? u : UniPoly::gcd(g, u);
    if (g.degree() == 0) break;
  }
  if (g.degree() >= 1 && g.lc() != Rational(1)) g = g * g.lc().reciprocal();
  return g;
}

/// Eliminates every algebraic coordinate from W by alternating the primitive
/// part with respect to that coordinate (its Q[x]-content divided out) with a
/// resultant against the coordinate's defining polynomial.
///
/// The primitive-part step makes the chain robust: the resultant of a poly
/// with trivial Q[x]-content against a univariate poly in x can never vanish
/// identically, so the final result is a nonzero polynomial in the remaining
/// variables.  Every value of the untouched variables that annihilates W at
/// the actual coordinates still annihilates the result (contents are free of
/// the untouched variables, and a vanishing factor keeps a product vanishing),
/// so the chain yields a candidate superset, never a loss.
MultiPoly eliminate_algebraic(MultiPoly W, const AlgCoords& algs) {
  for (const auto& [xv, a] : algs) {
    if (W.degree(xv) < 1) continue;
    UniPoly cont = univariate_content(W, xv);
    if (cont.degree() >= 1) {
      auto pp = divide_exact(W, cont.to_multi(W.order(), xv));
      if (!pp) throw Error("internal: content does not divide its polynomial");
      W = std::move(*pp);
    }
    if (W.degree(xv) < 1) continue;
    W = resultant(W, a.defpoly().to_multi(W.order(), xv), xv);
    if (W.is_zero()) throw Error("internal: elimination chain collapsed");
    W = W.normalized();
  }
  return W;
}

MultiPoly embed(const MultiPoly& p, const VarOrderPtr& ext) {
  std::vector<std::pair<ExpVec, Rational>> terms(p.terms().begin(), p.terms().end());
  return MultiPoly::from_terms(ext, terms);
}

Sign sign_alg(MultiPoly q, AlgCoords algs);

/// Decides q(algs) == 0 exactly.  A fresh variable t is bound to the value by
/// t - q, the algebraic coordinates are eliminated, and the surviving
/// univariate polynomial W(t) is a nonzero polynomial with the value among
/// its roots.  If W(0) != 0 the value is nonzero.  Otherwise a Cauchy-style
/// lower bound delta on the nonzero roots of W separates the cases: the
/// enclosure of the value either leaves 0 (nonzero) or shrinks below delta,
/// which forces the value onto the only root of W in (-delta, delta).
bool exact_is_zero(const MultiPoly& q, const AlgCoords& algs) {
  std::vector<std::string> names = q.order()->names();
  names.push_back("$zero_test");
  VarOrderPtr ext = VarOrder::make(std::move(names));
  Variable t = ext->var(ext->size() - 1);
  MultiPoly W = MultiPoly::var(ext, t) - embed(q, ext);
  W = eliminate_algebraic(std::move(W), algs);
  UniPoly wt = UniPoly::from_multi(W, t);
  const auto& c = wt.coeffs();
  size_t e = 0;
  while (e < c.size() && c[e].sign() == Sign::Zero) ++e;
  if (e >= c.size()) throw Error("internal: zero-test carrier vanished");
  if (e == 0) return false;  // 0 is not a root of W, so the value is nonzero
  Rational v0 = c[e].abs();
  Rational vmax(0);
  for (size_t i = e + 1; i < c.size(); ++i) vmax = std::max(vmax, c[i].abs());
  if (vmax.sign() == Sign::Zero) return true;  // W = c*t^e: only root is 0
  Rational delta = v0 / (v0 + vmax);

  MultiPoly cur = q;
  AlgCoords coords = algs;
  while (true) {
    RatInterval I = box_eval(cur, coords);
    if (I.definite_sign()) return false;
    if (std::max(I.lo.abs(), I.hi.abs()) < delta) return true;
    if (refine_all(coords)) {
      std::map<Variable, Rational> sub;
      AlgCoords keep;
      for (auto& [v, a] : coords) {
        if (a.is_rational())
          sub.emplace(v, a.rational());
        else
          keep.push_back({v, a});
      }
      cur = cur.substitute(sub);
      coords = std::move(keep);
      if (coords.empty()) return cur.constant_value().sign() == Sign::Zero;
      if (coords.size() == 1)
        return sign_at(UniPoly::from_multi(cur, coords[0].first),
                       coords[0].second) == Sign::Zero;
    }
  }
}

/// Core sign routine over purely algebraic coordinates (rational coordinates
/// already substituted away; re-substitution happens whenever refinement
/// collapses a coordinate).
Sign sign_alg(MultiPoly q, AlgCoords algs) {
  while (true) {
    std::map<Variable, Rational> sub;
    AlgCoords keep;
    for (auto& [v, a] : algs) {
      if (!q.uses(v)) continue;
      if (a.is_rational())
        sub.emplace(v, a.rational());
      else
        keep.push_back({v, a});
    }
    if (!sub.empty()) q = q.substitute(sub);
    algs = std::move(keep);

    if (q.is_constant()) return q.constant_value().sign();
    if (algs.size() == 1)
      return sign_at(UniPoly::from_multi(q, algs[0].first), algs[0].second);

    bool collapsed = false;
    for (int round = 0; round < kQuickRefineRounds && !collapsed; ++round) {
      if (auto s = box_eval(q, algs).definite_sign()) return *s;
      collapsed = refine_all(algs);
    }
    if (collapsed) continue;

    if (exact_is_zero(q, algs)) return Sign::Zero;
    while (true) {
      if (auto s = box_eval(q, algs).definite_sign()) return *s;
      if (refine_all(algs)) break;  // re-substitute and dispatch again
    }
  }
}

/// Splits the coordinates used by p into a rational substitution and the
/// remaining algebraic ones.  `stop` bounds the variable indices p may use.
std::pair<MultiPoly, AlgCoords> substitute_rationals(const MultiPoly& p,
                                                     const SamplePoint& s,
                                                     unsigned stop,
                                                     const char* who) {
  std::map<Variable, Rational> sub;
  AlgCoords algs;
  for (Variable u : p.vars()) {
    if (u.index >= stop)
      throw Error(std::string(who) + ": sample does not assign variable " +
                  p.order()->name(u));
    if (u.index >= s.size()) continue;  // the variable being lifted
    const RealAlgebraic& a = s[u.index];
    if (a.is_rational())
      sub.emplace(u, a.rational());
    else
      algs.push_back({u, a});
  }
  return {sub.empty() ? p : p.substitute(sub), std::move(algs)};
}

}  // namespace

Sign sign_of(const MultiPoly& p, const SamplePoint& s) {
  if (p.is_zero()) return Sign::Zero;
  auto [q, algs] =
      substitute_rationals(p, s, static_cast<unsigned>(s.size()), "sign_of");
  return sign_alg(std::move(q), std::move(algs));
}

SubstitutedRoots roots_of(const MultiPoly& p, const SamplePoint& s, Variable v) {
  if (v.index != s.size())
    throw Error("roots_of: variable must directly extend the sample");
  for (Variable u : p.vars())
    if (u.index > v.index)
      throw Error("roots_of: polynomial uses a variable beyond " +
                  p.order()->name(v));

  SubstitutedRoots out;
  int d = p.degree(v);
  if (d < 1) {
    Sign sg = p.is_zero() ? Sign::Zero : sign_of(p, s);
    if (sg == Sign::Zero) {
      out.kind = SubstitutedRoots::Kind::Nullified;
    } else {
      out.kind = SubstitutedRoots::Kind::Constant;
      out.constant_sign = sg;
    }
    return out;
  }

  // Actual degree of p(s, v): probe the v-coefficients from the top.
  std::vector<MultiPoly> cs = p.coeffs(v);
  int dstar = -1;
  Sign found = Sign::Zero;
  for (size_t i = 0; i < cs.size(); ++i) {
    Sign sg = cs[i].is_zero() ? Sign::Zero : sign_of(cs[i], s);
    if (sg != Sign::Zero) {
      dstar = d - static_cast<int>(i);
      found = sg;
      break;
    }
  }
  if (dstar < 0) {
    out.kind = SubstitutedRoots::Kind::Nullified;
    return out;
  }
  if (dstar == 0) {
    out.kind = SubstitutedRoots::Kind::Constant;
    out.constant_sign = found;
    return out;
  }

  out.kind = SubstitutedRoots::Kind::Roots;
  auto [E, algs] =
      substitute_rationals(p, s, static_cast<unsigned>(s.size()) + 1, "roots_of");
  {
    AlgCoords used;
    for (auto& va : algs)
      if (E.uses(va.first)) used.push_back(va);
    algs = std::move(used);
  }

  if (algs.empty()) {
    out.roots = isolate_roots(UniPoly::from_multi(E, v));
    return out;
  }

  // Candidate superset: eliminate the algebraic coordinates from E.
  UniPoly wu = UniPoly::from_multi(eliminate_algebraic(E, algs), v);
  if (wu.degree() < 1) return out;
  std::vector<RealAlgebraic> cands = isolate_roots(wu);
  if (cands.empty()) return out;

  // Signs of p(s, .) at rational separators between consecutive candidates.
  // Separators cannot hit roots of p(s, .) (those are among the candidates),
  // so a sign change pins the enclosed candidate as a genuine root.
  std::vector<Sign> sep(cands.size() + 1);
  for (size_t i = 0; i <= cands.size(); ++i) {
    std::optional<RealAlgebraic> below, above;
    if (i > 0) below = cands[i - 1];
    if (i < cands.size()) above = cands[i];
    Rational r = rational_between(below, above);
    sep[i] = sign_alg(E.substitute({{v, r}}), algs);
    if (sep[i] == Sign::Zero)
      throw Error("internal: separator landed on a root");
  }

  // A candidate without a sign change can only be a root of even multiplicity,
  // hence also a root of the v-derivative; candidates failing that cheap test
  // are discarded, the rare survivors get the full exact test.
  std::optional<UniPoly> deriv_carrier;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (sep[i] != sep[i + 1]) {
      out.roots.push_back(cands[i]);
      continue;
    }
    if (!deriv_carrier)
      deriv_carrier = UniPoly::from_multi(
          eliminate_algebraic(E.derivative(v), algs), v);
    if (sign_at(*deriv_carrier, cands[i]) != Sign::Zero) continue;
    SamplePoint extended = s;
    extended.push_back(cands[i]);
    if (sign_of(p, extended) == Sign::Zero) out.roots.push_back(cands[i]);
  }
  return out;
}

}  // namespace nracover
