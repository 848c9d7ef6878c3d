#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nracover/cad.hpp"
#include "nracover/errors.hpp"
#include "nracover/polyops.hpp"

namespace nracover {

CellBound CellBound::pos_inf() {
  CellBound b;
  b.kind = Kind::PosInf;
  return b;
}

CellBound CellBound::at(IndexedRoot r, RealAlgebraic v) {
  CellBound b;
  b.kind = Kind::At;
  b.root = std::move(r);
  b.value = std::move(v);
  return b;
}

std::string CellBound::str() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::At: break;
  }
  return "root[" + std::to_string(root->index) + "](" + root->poly.str() + ")";
}

namespace {

void add_canonical(std::vector<MultiPoly>& out, const MultiPoly& p) {
  if (p.is_constant()) return;
  MultiPoly n = p.normalized();
  for (const auto& q : out)
    if (q == n) return;
  out.push_back(std::move(n));
}

struct TaggedRoot {
  RealAlgebraic value;
  int poly_pos;  // position in the level set (canonical order)
  int index;     // 1-based rank among that polynomial's roots here
};

/// Decomposes the line over the sample prefix: isolates the roots of every
/// level polynomial at the prefix, merges equal values (the first
/// polynomial in canonical order tags the bound), and alternates sectors
/// and sections, sampling sectors with the simplest rational inside.
std::vector<Cell> lift_over(const SamplePoint& prefix,
                            const std::vector<MultiPoly>& polys, Variable v,
                            int level) {
  std::vector<TaggedRoot> roots;
  for (size_t pos = 0; pos < polys.size(); ++pos) {
    const MultiPoly& p = polys[pos];
    if (p.degree(v) < 1) continue;  // contributes no sections
    SubstitutedRoots r = roots_of(p, prefix, v);
    if (r.kind == SubstitutedRoots::Kind::Nullified)
      throw NullificationError("lift: " + p.str() +
                               " vanishes identically at the sample");
    if (r.kind != SubstitutedRoots::Kind::Roots) continue;
    for (size_t i = 0; i < r.roots.size(); ++i)
      roots.push_back(
          {r.roots[i], static_cast<int>(pos), static_cast<int>(i) + 1});
  }
  std::sort(roots.begin(), roots.end(),
            [](const TaggedRoot& a, const TaggedRoot& b) {
              Cmp c = compare(a.value, b.value);
              if (c != Cmp::Eq) return c == Cmp::Lt;
              return a.poly_pos < b.poly_pos;
            });
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const TaggedRoot& a, const TaggedRoot& b) {
                            return compare(a.value, b.value) == Cmp::Eq;
                          }),
              roots.end());

  auto section_bound = [&](const TaggedRoot& r) {
    return CellBound::at(IndexedRoot{polys[static_cast<size_t>(r.poly_pos)],
                                     r.index},
                         r.value);
  };
  auto make_cell = [&](Cell::Kind kind, CellBound lo, CellBound up,
                       RealAlgebraic own) {
    Cell c;
    c.level = level;
    c.kind = kind;
    c.lower = std::move(lo);
    c.upper = std::move(up);
    c.sample = prefix;
    c.sample.push_back(std::move(own));
    return c;
  };

  std::vector<Cell> cells;
  if (roots.empty()) {
    cells.push_back(make_cell(Cell::Kind::Sector, CellBound::neg_inf(),
                              CellBound::pos_inf(),
                              RealAlgebraic(rational_between({}, {}))));
    return cells;
  }
  cells.push_back(make_cell(Cell::Kind::Sector, CellBound::neg_inf(),
                            section_bound(roots[0]),
                            RealAlgebraic(rational_between({}, roots[0].value))));
  for (size_t i = 0; i < roots.size(); ++i) {
    cells.push_back(make_cell(Cell::Kind::Section, section_bound(roots[i]),
                              section_bound(roots[i]), roots[i].value));
    bool last = i + 1 == roots.size();
    CellBound up = last ? CellBound::pos_inf() : section_bound(roots[i + 1]);
    std::optional<RealAlgebraic> hi;
    if (!last) hi = roots[i + 1].value;
    cells.push_back(make_cell(
        Cell::Kind::Sector, section_bound(roots[i]), std::move(up),
        RealAlgebraic(rational_between(roots[i].value, hi))));
  }
  return cells;
}

/// Projects the input set level by level; level_sets[k-1] receives the
/// basis whose roots bound the level-k cells.  After the level-1 step
/// nothing can remain (all projections of univariate polynomials are
/// constants).
std::vector<std::vector<MultiPoly>> level_sets_of(
    const std::vector<MultiPoly>& polys, const VarOrderPtr& order) {
  unsigned n = order->size();
  if (n == 0) throw Error("build_cad: empty variable order");
  std::vector<std::vector<MultiPoly>> sets(n);
  std::vector<MultiPoly> carry;
  for (const auto& p : polys) {
    if (p.is_zero())
      throw NullificationError("build_cad: identically zero polynomial");
    add_canonical(carry, p);
  }
  for (unsigned k = n; k >= 1; --k) {
    ProjectionSplit s = project_split(carry, order->var(k - 1));
    sets[k - 1] = std::move(s.basis);
    carry = std::move(s.lower);
  }
  if (!carry.empty()) throw Error("internal: leftover level-0 polynomials");
  return sets;
}

void collect_leaves(const Cell& c, unsigned n, std::vector<const Cell*>& out) {
  if (static_cast<unsigned>(c.level) == n) {
    out.push_back(&c);
    return;
  }
  for (const Cell& ch : c.children) collect_leaves(ch, n, out);
}

std::string value_str(const RealAlgebraic& v) {
  return v.is_rational() ? v.rational().str() : v.str();
}

}  // namespace

std::vector<Cell> base_phase(const std::vector<MultiPoly>& polys,
                             const VarOrderPtr& order) {
  return lift_over({}, polys, order->var(0), 1);
}

std::vector<Cell> lift(const Cell& parent, const std::vector<MultiPoly>& polys,
                       Variable v) {
  return lift_over(parent.sample, polys, v, static_cast<int>(v.index) + 1);
}

CadTree build_cad(const std::vector<MultiPoly>& polys,
                  const VarOrderPtr& order) {
  if (polys.empty()) throw Error("build_cad: empty polynomial set");
  CadTree t;
  t.order = order;
  t.level_sets = level_sets_of(polys, order);
  t.base = lift_over({}, t.level_sets[0], order->var(0), 1);
  std::function<void(Cell&, unsigned)> grow = [&](Cell& cell, unsigned level) {
    if (level >= order->size()) return;
    cell.children = lift_over(cell.sample, t.level_sets[level],
                              order->var(level), static_cast<int>(level) + 1);
    for (Cell& ch : cell.children) grow(ch, level + 1);
  };
  for (Cell& c : t.base) grow(c, 1);
  return t;
}

std::vector<const Cell*> CadTree::leaves() const {
  std::vector<const Cell*> out;
  for (const Cell& c : base) collect_leaves(c, order->size(), out);
  return out;
}

size_t CadTree::leaf_count() const { return leaves().size(); }

CadDecision decide_by_cad(const Formula& f) {
  const VarOrderPtr& order = f.order;
  if (!order || order->size() == 0)
    throw Error("decide_by_cad: empty variable order");
  if (f.constraints.empty()) throw Error("decide_by_cad: empty formula");
  std::vector<MultiPoly> polys;
  polys.reserve(f.constraints.size());
  for (const auto& c : f.constraints) polys.push_back(c.poly);
  auto sets = level_sets_of(polys, order);

  const unsigned n = order->size();
  SamplePoint prefix;
  std::function<std::optional<SamplePoint>(unsigned)> walk =
      [&](unsigned level) -> std::optional<SamplePoint> {
    std::vector<Cell> cells =
        lift_over(prefix, sets[level - 1], order->var(level - 1),
                  static_cast<int>(level));
    for (Cell& c : cells) {
      prefix.push_back(c.sample.back());
      if (level == n) {
        bool ok = true;
        for (const auto& con : f.constraints) {
          if (!sign_satisfies(sign_of(con.poly, prefix), con.rel)) {
            ok = false;
            break;
          }
        }
        if (ok) return prefix;
      } else if (auto r = walk(level + 1)) {
        return r;
      }
      prefix.pop_back();
    }
    return std::nullopt;
  };

  CadDecision d;
  if (auto w = walk(1)) {
    d.sat = true;
    d.witness = *w;
  }
  return d;
}

std::string cell_str(const Cell& leaf, const VarOrderPtr& order) {
  const char* rel = leaf.kind == Cell::Kind::Section ? "<=" : "<";
  std::string line = "level-" + std::to_string(leaf.level) + ": ";
  line += leaf.lower.str();
  line += ' ';
  line += rel;
  line += ' ';
  line += order->name(Variable{static_cast<unsigned>(leaf.level - 1)});
  line += ' ';
  line += rel;
  line += ' ';
  line += leaf.upper.str();
  line += " | sample=(";
  for (size_t i = 0; i < leaf.sample.size(); ++i) {
    if (i) line += ", ";
    line += value_str(leaf.sample[i]);
  }
  line += ')';
  return line;
}

std::vector<std::string> list_cells(const CadTree& tree) {
  std::vector<std::string> out;
  for (const Cell* c : tree.leaves()) out.push_back(cell_str(*c, tree.order));
  return out;
}

}  // namespace nracover
