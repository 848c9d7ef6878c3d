#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "nracover/cad.hpp"
#include "nracover/errors.hpp"
#include "support/test_support.hpp"

using namespace nracover;

namespace {

std::vector<MultiPoly> canon(std::vector<MultiPoly> v) {
  std::sort(v.begin(), v.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return MultiPoly::compare(a, b) < 0;
  });
  return v;
}

/// Two unit circles centered at (0,0) and (4,0); their conjunction of
/// interiors is empty because the circles are too far apart.
struct FarCircles {
  nratest::Vars2 V;
  MultiPoly c0 = V.X * V.X + V.Y * V.Y - V.c(1);
  MultiPoly c1 = (V.X - V.c(4)) * (V.X - V.c(4)) + V.Y * V.Y - V.c(1);
  Formula formula() const {
    return Formula{V.ord, {{c0, Relation::Lt, 0}, {c1, Relation::Lt, 1}}};
  }
};

/// Unit circles centered at (0,0) and (3/2,3/2); the interiors overlap as
/// point sets per coordinate but the conjunction is still empty.  The second
/// circle is scaled by 2 to keep integer coefficients.
struct NearCircles {
  nratest::Vars2 V;
  MultiPoly c0 = V.X * V.X + V.Y * V.Y - V.c(1);
  MultiPoly c1 = V.c(2) * (V.X * V.X + V.Y * V.Y) - V.c(6) * V.X -
                 V.c(6) * V.Y + V.c(7);
  Formula formula() const {
    return Formula{V.ord, {{c0, Relation::Lt, 0}, {c1, Relation::Lt, 1}}};
  }
};

/// Re-evaluates an indexed-root bound over a different sample prefix.  The
/// root index must stay meaningful across the whole parent cell; the REQUIREs
/// double as a delineability check.
std::optional<RealAlgebraic> bound_value_at(const CellBound& b,
                                            const SamplePoint& prefix,
                                            Variable v) {
  if (b.kind != CellBound::Kind::At) return std::nullopt;
  SubstitutedRoots r = roots_of(b.root->poly, prefix, v);
  REQUIRE(r.kind == SubstitutedRoots::Kind::Roots);
  REQUIRE(static_cast<int>(r.roots.size()) >= b.root->index);
  return r.roots[static_cast<size_t>(b.root->index - 1)];
}

/// Membership of `val` in the cell's extent over `prefix` (which need not be
/// the cell's own sample prefix).
bool cell_contains(const Cell& c, const SamplePoint& prefix,
                   const RealAlgebraic& val, Variable v) {
  std::optional<RealAlgebraic> lo = bound_value_at(c.lower, prefix, v);
  std::optional<RealAlgebraic> hi = bound_value_at(c.upper, prefix, v);
  if (c.kind == Cell::Kind::Section) return compare(*lo, val) == Cmp::Eq;
  if (lo && compare(*lo, val) != Cmp::Lt) return false;
  if (hi && compare(val, *hi) != Cmp::Lt) return false;
  return true;
}

RealAlgebraic ra(int v) { return RealAlgebraic(Rational(v)); }
RealAlgebraic ra(int n, int d) { return RealAlgebraic(Rational(n, d)); }

}  // namespace

TEST_CASE("projection splits far circles into basis and delineating set") {
  FarCircles F;
  ProjectionSplit s = project_split({F.c0, F.c1}, F.V.y);
  CHECK(s.basis == canon({F.c0, F.c1}));

  MultiPoly d0 = F.V.X * F.V.X - F.V.c(1);
  MultiPoly d1 = F.V.X * F.V.X - F.V.c(8) * F.V.X + F.V.c(15);
  MultiPoly r01 = F.V.X * F.V.X - F.V.c(4) * F.V.X + F.V.c(4);
  CHECK(s.lower == canon({d0, d1, r01}));
  CHECK(project({F.c0, F.c1}, F.V.y) == s.lower);

  // The delineating polynomials place the base sections at -1, 1, 2, 3, 5.
  CHECK(isolate_roots(UniPoly::from_multi(d0, F.V.x)).size() == 2);
  CHECK(isolate_roots(UniPoly::from_multi(d1, F.V.x)).size() == 2);
  std::vector<RealAlgebraic> rr = isolate_roots(UniPoly::from_multi(r01, F.V.x));
  REQUIRE(rr.size() == 1);
  CHECK(rr[0] == ra(2));
}

TEST_CASE("projection of near circles yields a resultant without real roots") {
  NearCircles N;
  ProjectionSplit s = project_split({N.c0, N.c1}, N.V.y);
  CHECK(s.basis == canon({N.c0, N.c1}));

  MultiPoly d0 = N.V.X * N.V.X - N.V.c(1);
  MultiPoly d1 = N.V.c(4) * N.V.X * N.V.X - N.V.c(12) * N.V.X + N.V.c(5);
  MultiPoly r01 = N.V.c(8) * N.V.X * N.V.X - N.V.c(12) * N.V.X + N.V.c(5);
  CHECK(s.lower == canon({d0, d1, r01}));

  // Discriminant roots {-1, 1} and {1/2, 5/2}; the circles never touch, so
  // the resultant contributes no sections at all.
  std::vector<RealAlgebraic> dd = isolate_roots(UniPoly::from_multi(d1, N.V.x));
  REQUIRE(dd.size() == 2);
  CHECK(dd[0] == ra(1, 2));
  CHECK(dd[1] == ra(5, 2));
  CHECK(isolate_roots(UniPoly::from_multi(r01, N.V.x)).empty());
}

TEST_CASE("linear polynomial projects to an empty delineating set") {
  nratest::Vars2 V;
  ProjectionSplit s = project_split({V.Y - V.X}, V.y);
  CHECK(s.basis == std::vector<MultiPoly>{(V.Y - V.X).normalized()});
  CHECK(s.lower.empty());

  std::vector<Cell> base = base_phase(s.lower, V.ord);
  REQUIRE(base.size() == 1);
  CHECK(base[0].kind == Cell::Kind::Sector);
  CHECK(base[0].lower.kind == CellBound::Kind::NegInf);
  CHECK(base[0].upper.kind == CellBound::Kind::PosInf);
  CHECK(base[0].sample == SamplePoint{ra(0)});
}

TEST_CASE("content factors contribute their own root loci") {
  nratest::Vars2 V;
  ProjectionSplit s = project_split({V.X * V.Y}, V.y);
  CHECK(s.basis == std::vector<MultiPoly>{V.Y});
  CHECK(s.lower == std::vector<MultiPoly>{V.X});

  // Without the content x in the base, the decomposition would miss the
  // sign change of x*y across the line x = 0.
  CadTree t = build_cad({V.X * V.Y}, V.ord);
  CHECK(t.base.size() == 3);
  CHECK(t.leaf_count() == 9);
}

TEST_CASE("shared factors are split into a coprime basis") {
  nratest::Vars2 V;
  MultiPoly p1 = V.Y * V.Y - V.X * V.Y;  // y (y - x)
  MultiPoly p2 = V.Y * V.Y + V.X * V.Y;  // y (y + x)
  ProjectionSplit s = project_split({p1, p2}, V.y);
  CHECK(s.basis ==
        canon({V.Y, (V.Y - V.X).normalized(), (V.Y + V.X).normalized()}));
  // A naive pairwise resultant of p1 and p2 would vanish identically (they
  // share the factor y) and drop the crossing at x = 0 from the base.
  CHECK(s.lower == std::vector<MultiPoly>{V.X});

  CadTree t = build_cad({p1, p2}, V.ord);
  CHECK(t.base.size() == 3);
  CHECK(t.leaf_count() == 17);  // columns of width 7, 3, 7
}

TEST_CASE("base phase partitions the line at the delineating roots") {
  FarCircles F;
  std::vector<MultiPoly> low = project({F.c0, F.c1}, F.V.y);
  std::vector<Cell> cells = base_phase(low, F.V.ord);
  REQUIRE(cells.size() == 11);

  std::vector<RealAlgebraic> expected = {ra(-2), ra(-1), ra(0),    ra(1),
                                         ra(3, 2), ra(2), ra(5, 2), ra(3),
                                         ra(4),  ra(5),  ra(6)};
  for (size_t i = 0; i < cells.size(); ++i) {
    REQUIRE(cells[i].sample.size() == 1);
    CHECK(cells[i].sample[0] == expected[i]);
    CHECK(cells[i].kind ==
          (i % 2 == 1 ? Cell::Kind::Section : Cell::Kind::Sector));
    CHECK(cells[i].level == 1);
  }

  NearCircles N;
  std::vector<Cell> cells2 = base_phase(project({N.c0, N.c1}, N.V.y), N.V.ord);
  REQUIRE(cells2.size() == 9);
  std::vector<RealAlgebraic> expected2 = {ra(-2),   ra(-1), ra(0),
                                          ra(1, 2), ra(3, 4), ra(1),
                                          ra(2),    ra(5, 2), ra(3)};
  for (size_t i = 0; i < cells2.size(); ++i)
    CHECK(cells2[i].sample[0] == expected2[i]);
}

TEST_CASE("lifting a base cell produces alternating sectors and sections") {
  FarCircles F;
  ProjectionSplit s = project_split({F.c0, F.c1}, F.V.y);
  std::vector<Cell> base = base_phase(s.lower, F.V.ord);
  REQUIRE(base.size() == 11);

  // Leftmost cell x < -1: both circles are far away, one full sector.
  std::vector<Cell> left = lift(base[0], s.basis, F.V.y);
  REQUIRE(left.size() == 1);
  CHECK(left[0].kind == Cell::Kind::Sector);
  CHECK(left[0].lower.kind == CellBound::Kind::NegInf);
  CHECK(left[0].upper.kind == CellBound::Kind::PosInf);
  CHECK(left[0].sample == SamplePoint{ra(-2), ra(0)});

  // Cell -1 < x < 1 with sample 0: the first circle cuts the column twice.
  const Cell& origin = base[2];
  REQUIRE(origin.sample[0] == ra(0));
  std::vector<Cell> column = lift(origin, s.basis, F.V.y);
  REQUIRE(column.size() == 5);
  std::vector<RealAlgebraic> ys = {ra(-2), ra(-1), ra(0), ra(1), ra(2)};
  for (size_t i = 0; i < column.size(); ++i) {
    CHECK(column[i].level == 2);
    CHECK(column[i].kind ==
          (i % 2 == 1 ? Cell::Kind::Section : Cell::Kind::Sector));
    CHECK(column[i].sample == SamplePoint{ra(0), ys[i]});
  }
  REQUIRE(column[1].lower.kind == CellBound::Kind::At);
  CHECK(column[1].lower.root->poly == F.c0);
  CHECK(column[1].lower.root->index == 1);
  REQUIRE(column[3].lower.kind == CellBound::Kind::At);
  CHECK(column[3].lower.root->poly == F.c0);
  CHECK(column[3].lower.root->index == 2);
}

TEST_CASE("full decomposition sizes for the worked geometries") {
  FarCircles F;
  CadTree t1 = build_cad({F.c0, F.c1}, F.V.ord);
  CHECK(t1.base.size() == 11);
  CHECK(t1.leaf_count() == 27);
  std::vector<size_t> w1;
  for (const Cell& b : t1.base) w1.push_back(b.children.size());
  CHECK(w1 == std::vector<size_t>{1, 3, 5, 3, 1, 1, 1, 3, 5, 3, 1});

  // The level-1 pass square-frees the double root of the resultant
  // (x - 2)^2, so the stored set carries x - 2.
  MultiPoly d0 = F.V.X * F.V.X - F.V.c(1);
  MultiPoly d1 = F.V.X * F.V.X - F.V.c(8) * F.V.X + F.V.c(15);
  MultiPoly r01sf = F.V.X - F.V.c(2);
  CHECK(t1.level_sets[0] == canon({d0, d1, r01sf}));
  CHECK(t1.level_sets[1] == canon({F.c0, F.c1}));

  NearCircles N;
  CadTree t2 = build_cad({N.c0, N.c1}, N.V.ord);
  CHECK(t2.base.size() == 9);
  CHECK(t2.leaf_count() == 41);
  std::vector<size_t> w2;
  for (const Cell& b : t2.base) w2.push_back(b.children.size());
  CHECK(w2 == std::vector<size_t>{1, 3, 5, 7, 9, 7, 5, 3, 1});

  CadTree t3 = build_cad({F.c0}, F.V.ord);
  CHECK(t3.base.size() == 5);
  CHECK(t3.leaf_count() == 13);
  CHECK(t3.leaves().size() == 13);
}

TEST_CASE("constant and empty inputs") {
  nratest::Vars2 V;
  CHECK_THROWS_AS(build_cad({}, V.ord), Error);
  CHECK_THROWS_AS(build_cad({V.c(0)}, V.ord), NullificationError);

  // A nonzero constant induces the trivial decomposition.
  CadTree t = build_cad({V.c(3)}, V.ord);
  CHECK(t.base.size() == 1);
  CHECK(t.leaf_count() == 1);
}

TEST_CASE("nullification during lifting raises") {
  nratest::Vars2 V;
  Cell at_origin;
  at_origin.level = 1;
  at_origin.sample = {ra(0)};
  CHECK_THROWS_AS(lift(at_origin, {V.X * V.Y}, V.y), NullificationError);
}

TEST_CASE("decide_by_cad settles the worked geometries") {
  FarCircles F;
  CHECK_FALSE(decide_by_cad(F.formula()).sat);

  NearCircles N;
  CHECK_FALSE(decide_by_cad(N.formula()).sat);

  CadDecision inside =
      decide_by_cad(Formula{F.V.ord, {{F.c0, Relation::Lt, 0}}});
  REQUIRE(inside.sat);
  CHECK(inside.witness == SamplePoint{ra(0), ra(0)});

  CadDecision on = decide_by_cad(Formula{F.V.ord, {{F.c0, Relation::Eq, 0}}});
  REQUIRE(on.sat);
  CHECK(on.witness == SamplePoint{ra(-1), ra(0)});

  CadDecision half = decide_by_cad(
      Formula{F.V.ord, {{F.V.Y - F.V.X, Relation::Gt, 0}}});
  REQUIRE(half.sat);
  CHECK(half.witness == SamplePoint{ra(0), ra(1)});

  CadDecision mixed = decide_by_cad(
      Formula{F.V.ord, {{F.c0, Relation::Lt, 0}, {F.c1, Relation::Gt, 1}}});
  REQUIRE(mixed.sat);
  CHECK(mixed.witness == SamplePoint{ra(0), ra(0)});
}

TEST_CASE("decide_by_cad handles three variables") {
  nratest::Vars3 V;
  MultiPoly sphere = V.X * V.X + V.Y * V.Y + V.Z * V.Z - V.c(1);
  CadTree t = build_cad({sphere}, V.ord);
  CHECK(t.leaf_count() == 25);

  CadDecision d = decide_by_cad(Formula{V.ord, {{sphere, Relation::Lt, 0}}});
  REQUIRE(d.sat);
  CHECK(d.witness == SamplePoint{ra(0), ra(0), ra(0)});

  MultiPoly far = V.X - V.c(9);
  CadDecision no = decide_by_cad(
      Formula{V.ord, {{sphere, Relation::Lt, 0}, {far, Relation::Gt, 1}}});
  CHECK_FALSE(no.sat);
}

TEST_CASE("every probe point lies in exactly one leaf") {
  FarCircles F;
  CadTree t = build_cad({F.c0, F.c1}, F.V.ord);
  auto rng = nratest::make_rng(20260825);
  for (int trial = 0; trial < 60; ++trial) {
    RealAlgebraic px(nratest::rand_rational(rng, 8, 8));
    RealAlgebraic py(nratest::rand_rational(rng, 8, 8));
    int hits = 0;
    for (const Cell& b : t.base) {
      if (!cell_contains(b, {}, px, F.V.x)) continue;
      for (const Cell& ch : b.children)
        if (cell_contains(ch, {px}, py, F.V.y)) ++hits;
    }
    CHECK(hits == 1);
  }

  // Exercise the section columns explicitly: probes sitting on the
  // delineating roots must land in exactly one (section) cell too.
  for (int xi : {-1, 1, 2, 3, 5}) {
    for (int yi = -2; yi <= 2; ++yi) {
      RealAlgebraic px = ra(xi), py = ra(yi);
      int hits = 0;
      for (const Cell& b : t.base) {
        if (!cell_contains(b, {}, px, F.V.x)) continue;
        for (const Cell& ch : b.children)
          if (cell_contains(ch, {px}, py, F.V.y)) ++hits;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("input signs are invariant across each leaf") {
  NearCircles N;
  std::vector<MultiPoly> inputs = {N.c0, N.c1};
  CadTree t = build_cad(inputs, N.V.ord);
  for (const Cell& b : t.base) {
    // The base sample plus, for sectors, two more abscissas inside.
    std::vector<RealAlgebraic> xs = {b.sample[0]};
    if (b.kind == Cell::Kind::Sector) {
      xs.push_back(RealAlgebraic(rational_between(b.lower.value, b.sample[0])));
      xs.push_back(RealAlgebraic(rational_between(b.sample[0], b.upper.value)));
    }
    for (const Cell& ch : b.children) {
      std::vector<Sign> want;
      for (const MultiPoly& p : inputs) want.push_back(sign_of(p, ch.sample));
      for (const RealAlgebraic& px : xs) {
        SamplePoint prefix = {px};
        std::optional<RealAlgebraic> lo =
            bound_value_at(ch.lower, prefix, N.V.y);
        std::optional<RealAlgebraic> hi =
            bound_value_at(ch.upper, prefix, N.V.y);
        RealAlgebraic py = ch.kind == Cell::Kind::Section
                               ? *lo
                               : RealAlgebraic(rational_between(lo, hi));
        SamplePoint pt = {px, py};
        for (size_t i = 0; i < inputs.size(); ++i)
          CHECK(sign_of(inputs[i], pt) == want[i]);
      }
    }
  }
}

TEST_CASE("leaf listing is stable and human readable") {
  FarCircles F;
  CadTree t = build_cad({F.c0}, F.V.ord);
  std::vector<std::string> lines = list_cells(t);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "level-2: -inf < y < +inf | sample=(-2/1, 0/1)");

  std::string ps = F.c0.str();
  CHECK(lines[2] == "level-2: root[1](" + ps + ") <= y <= root[1](" + ps +
                        ") | sample=(-1/1, 0/1)");
  CHECK(lines[6] == "level-2: root[1](" + ps + ") < y < root[2](" + ps +
                        ") | sample=(0/1, 0/1)");

  int sections = 0;
  for (const Cell* leaf : t.leaves())
    if (leaf->kind == Cell::Kind::Section) ++sections;
  CHECK(sections == 4);

  CHECK(list_cells(build_cad({F.c0}, F.V.ord)) == lines);  // deterministic
}
