#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nracover/covering.hpp"
#include "nracover/errors.hpp"
#include "nracover/polyops.hpp"

namespace nracover {

namespace {

constexpr const char* kProducer = "nracover 1.0.0";

void add_canonical(std::vector<MultiPoly>& out, const MultiPoly& p) {
  if (p.is_constant()) return;
  MultiPoly n = p.normalized();
  for (const auto& q : out)
    if (q == n) return;
  out.push_back(std::move(n));
}

/// Content split plus square-free part of p in v; the content (a polynomial
/// one level down) goes into `out` as a pass-through and the primitive
/// square-free core is returned.
MultiPoly reduced_core(const MultiPoly& p, Variable v,
                       std::vector<MultiPoly>& out) {
  MultiPoly cont = content_in(p, v);
  add_canonical(out, cont);
  auto prim = divide_exact(p, cont);
  if (!prim) throw Error("characterization: content does not divide");
  return square_free_part(*prim, v);
}

bool is_root_at(const MultiPoly& p, const SamplePoint& s,
                const RealAlgebraic& val) {
  SamplePoint pt = s;
  pt.push_back(val);
  return sign_of(p, pt) == Sign::Zero;
}

std::vector<int> union_reasons(const std::vector<CoveringInterval>& cover) {
  std::set<int> ids;
  for (const auto& iv : cover) ids.insert(iv.reasons.begin(), iv.reasons.end());
  return std::vector<int>(ids.begin(), ids.end());
}

}  // namespace

std::vector<MultiPoly> construct_characterization(
    const SamplePoint& s, const std::vector<CoveringInterval>& covering,
    Variable v) {
  std::vector<CoveringInterval> cover = minimal_subcover(covering);
  std::vector<MultiPoly> out;

  // Square-free primitive cores per interval, reused for bound detection
  // and the resultants below.
  std::vector<std::vector<MultiPoly>> cores(cover.size());

  for (size_t i = 0; i < cover.size(); ++i) {
    for (const MultiPoly& p : cover[i].characterization) {
      if (p.is_constant()) continue;
      if (p.degree(v) < 1) {  // already one level down: pass through
        add_canonical(out, p);
        continue;
      }
      SubstitutedRoots r = roots_of(p, s, v);
      if (r.kind == SubstitutedRoots::Kind::Nullified)
        throw NullificationError("characterization: " + p.str() +
                                 " vanishes identically at the sample");
      MultiPoly core = reduced_core(p, v, out);
      cores[i].push_back(core);
      add_canonical(out, discriminant(core, v));
      for (const MultiPoly& cf : core.coeffs(v)) {
        if (cf.is_constant() && !cf.is_zero()) break;  // required coefficients
        add_canonical(out, cf);
      }
    }
  }

  // Resultants between the polynomials bounding consecutive intervals of
  // the subcover: the upper bound of each against the lower bound of the
  // next (the pair whose root functions must not cross over the cell).
  for (size_t i = 0; i + 1 < cover.size(); ++i) {
    const Bound& up = cover[i].upper;
    const Bound& lo = cover[i + 1].lower;
    if (!up.is_value() || !lo.is_value()) continue;
    for (const MultiPoly& p : cores[i]) {
      if (!is_root_at(p, s, up.value)) continue;
      for (const MultiPoly& q : cores[i + 1]) {
        if (p == q || !is_root_at(q, s, lo.value)) continue;
        add_canonical(out, resultant(p, q, v));
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return MultiPoly::compare(a, b) < 0;
            });
  return out;
}

CoveringInterval interval_from_characterization(
    const SamplePoint& s_prefix, const std::vector<MultiPoly>& chars,
    const RealAlgebraic& s_i) {
  std::optional<RealAlgebraic> lo, hi;
  bool at_root = false;
  for (const MultiPoly& p : chars) {
    std::optional<Variable> mv = p.main_var();
    if (!mv || mv->index < s_prefix.size()) continue;  // constant along v
    SubstitutedRoots r = roots_of(p, s_prefix, *mv);
    if (r.kind == SubstitutedRoots::Kind::Nullified) {
      // The zero function: s_i is one of its roots; generalize to nothing.
      at_root = true;
      break;
    }
    if (r.kind != SubstitutedRoots::Kind::Roots) continue;
    for (const RealAlgebraic& root : r.roots) {
      Cmp c = compare(root, s_i);
      if (c == Cmp::Eq) {
        at_root = true;
        break;
      }
      if (c == Cmp::Lt) {
        if (!lo || compare(*lo, root) == Cmp::Lt) lo = root;
      } else {
        if (!hi || compare(root, *hi) == Cmp::Lt) hi = root;
        break;  // roots ascend; later ones are further right
      }
    }
    if (at_root) break;
  }

  CoveringInterval iv;
  iv.sample = s_i;
  iv.characterization = chars;
  if (at_root) {
    iv.lower = Bound::closed_at(s_i);
    iv.upper = Bound::closed_at(s_i);
  } else {
    iv.lower = lo ? Bound::open(*lo) : Bound::neg_inf();
    iv.upper = hi ? Bound::open(*hi) : Bound::pos_inf();
  }
  return iv;
}

namespace {

/// Depth-first search state: the sample prefix grows and shrinks as levels
/// are entered and left.
class Solver {
 public:
  explicit Solver(const Formula& f)
      : f_(f), n_(static_cast<unsigned>(f.order->size())) {}

  CoveringResult run() {
    CoveringResult res;
    try {
      LevelOutcome o = solve_level(1);
      if (o.sat) {
        for (const Constraint& c : f_.constraints)
          if (!sign_satisfies(sign_of(c.poly, o.witness), c.rel))
            throw Error("internal: witness fails " + c.str());
        res.kind = CoveringResult::Kind::Sat;
        res.witness = std::move(o.witness);
        return res;
      }
      res.kind = CoveringResult::Kind::Unsat;
      res.certificate.variables = f_.order->names();
      res.certificate.constraints = f_.constraints;
      res.certificate.covering = std::move(o.cover);
      res.certificate.producer = kProducer;
      return res;
    } catch (const NullificationError&) {
      res.kind = CoveringResult::Kind::Incomplete;
      return res;
    }
  }

 private:
  struct LevelOutcome {
    bool sat = false;
    SamplePoint witness;                  // sat
    std::vector<CoveringInterval> cover;  // otherwise: full covering, sorted
  };

  LevelOutcome solve_level(unsigned level) {
    Variable v = f_.order->var(level - 1);
    std::vector<CoveringInterval> intervals = get_unsat_intervals(f_, s_, v);
    for (;;) {
      std::optional<RealAlgebraic> pick = sample_outside(intervals);
      if (!pick) {
        sort_covering(intervals);
        LevelOutcome o;
        o.cover = std::move(intervals);
        return o;
      }
      s_.push_back(*pick);
      if (level == n_) {
        LevelOutcome o;
        o.sat = true;
        o.witness = s_;
        s_.pop_back();
        return o;
      }
      LevelOutcome sub = solve_level(level + 1);
      if (sub.sat) {
        s_.pop_back();
        return sub;
      }
      std::vector<MultiPoly> chars =
          construct_characterization(s_, sub.cover, f_.order->var(level));
      s_.pop_back();
      CoveringInterval iv = interval_from_characterization(s_, chars, *pick);
      iv.reasons = union_reasons(sub.cover);
      iv.children = std::move(sub.cover);
      intervals.push_back(std::move(iv));
    }
  }

  const Formula& f_;
  unsigned n_;
  SamplePoint s_;
};

void prune_level(std::vector<CoveringInterval>& cover) {
  cover = minimal_subcover(std::move(cover));
  for (CoveringInterval& iv : cover) {
    if (iv.children.empty()) continue;
    prune_level(iv.children);
    iv.reasons = union_reasons(iv.children);
  }
}

}  // namespace

CoveringResult decide(const Formula& f) {
  if (!f.order || f.order->size() == 0)
    throw Error("decide: empty variable order");
  if (f.constraints.empty()) throw Error("decide: empty formula");
  for (size_t i = 0; i < f.constraints.size(); ++i) {
    if (f.constraints[i].id != static_cast<int>(i))
      throw Error("decide: constraint ids must match positions");
  }
  return Solver(f).run();
}

Certificate prune_certificate(const Certificate& cert) {
  Certificate out = cert;
  prune_level(out.covering);
  return out;
}

}  // namespace nracover
