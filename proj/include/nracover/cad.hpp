#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nracover/assignment.hpp"
#include "nracover/constraint.hpp"
#include "nracover/multipoly.hpp"
#include "nracover/real_algebraic.hpp"

namespace nracover {

/// The i-th real root (1-based, counted from -inf) of a level polynomial in
/// that level's variable, viewed as a function of the variables below.
struct IndexedRoot {
  MultiPoly poly;
  int index = 1;
};

/// One endpoint of a cell at its own level: unbounded, or an indexed root of
/// a polynomial from the cell's level set.  `value` caches the root's value
/// at the cell's parent sample.
struct CellBound {
  enum class Kind { NegInf, PosInf, At };
  Kind kind = Kind::NegInf;
  std::optional<IndexedRoot> root;
  std::optional<RealAlgebraic> value;

  static CellBound neg_inf() { return {}; }
  static CellBound pos_inf();
  static CellBound at(IndexedRoot r, RealAlgebraic v);
  std::string str() const;  // "-inf", "+inf", or "root[i](poly)"
};

/// A cell of the decomposition: a section (the graph of an indexed root) or
/// a sector (the open band between adjacent sections).  `sample` assigns the
/// first `level` variables; `children` decompose the cylinder above.
struct Cell {
  enum class Kind { Section, Sector };
  int level = 1;
  Kind kind = Kind::Sector;
  CellBound lower, upper;
  SamplePoint sample;
  std::vector<Cell> children;
};

/// A decomposition of R^n into cells over which every input polynomial has
/// constant sign, arranged cylindrically: cells at level k project onto
/// whole cells at level k-1.
struct CadTree {
  VarOrderPtr order;
  /// level_sets[k-1]: the polynomials whose roots bound the level-k cells
  /// (the pairwise-coprime square-free basis produced by projection).
  std::vector<std::vector<MultiPoly>> level_sets;
  std::vector<Cell> base;  // level-1 cells in ascending order

  size_t leaf_count() const;
  /// Deepest-level cells in ascending (= lexicographic-sample) order.
  std::vector<const Cell*> leaves() const;
};

/// Result of one projection step.
struct ProjectionSplit {
  /// Primitive square-free pairwise-coprime basis of the polynomials with
  /// positive degree in v; root isolation at this level uses exactly these.
  std::vector<MultiPoly> basis;
  /// The v-free output: discriminants, required coefficients, contents and
  /// pairwise resultants of the basis, plus v-free inputs passed through.
  /// Constants dropped, duplicates (up to constant multiples) merged,
  /// canonically sorted.
  std::vector<MultiPoly> lower;
};

/// Splits off the v-contents, refines the square-free parts into a
/// pairwise-coprime basis, and projects: discriminants, coefficients from
/// the leading one down until the first constant (a constant coefficient
/// proves the degree can drop no further), and pairwise resultants.  Throws
/// NullificationError on an identically zero input polynomial.
ProjectionSplit project_split(const std::vector<MultiPoly>& polys, Variable v);

/// The lower set of project_split (the classical projection operator).
std::vector<MultiPoly> project(const std::vector<MultiPoly>& polys, Variable v);

/// Cells of the real line for the (univariate) level-1 set: sections at the
/// roots, sectors between and around them, each with an exact sample.
std::vector<Cell> base_phase(const std::vector<MultiPoly>& polys,
                             const VarOrderPtr& order);

/// Decomposes the cylinder over `parent` using the level polynomials of v:
/// sections at the real roots of the substituted polynomials, sectors in
/// between.  Throws NullificationError if a polynomial with positive degree
/// in v vanishes identically at the parent sample.
std::vector<Cell> lift(const Cell& parent, const std::vector<MultiPoly>& polys,
                       Variable v);

/// Full decomposition: projection down to dimension 1, base phase, lifting
/// back up.  Throws NullificationError where the projection theory cannot
/// certify the decomposition.
CadTree build_cad(const std::vector<MultiPoly>& polys, const VarOrderPtr& order);

/// Exhaustive-decomposition decision: SAT with the sample of the first
/// satisfying leaf in cell order, else UNSAT.  Cells are explored lazily.
struct CadDecision {
  bool sat = false;
  SamplePoint witness;  // filled for SAT
};
CadDecision decide_by_cad(const Formula& f);

/// Fixed one-line rendering of a leaf cell:
///   "level-<k>: <lower> <rel> <var> <rel> <upper> | sample=(v1, v2)"
/// with "<" for sectors, "<=" for sections, values in exact form.
std::string cell_str(const Cell& leaf, const VarOrderPtr& order);

/// One line per leaf, sorted lexicographically by sample.
std::vector<std::string> list_cells(const CadTree& tree);

}  // namespace nracover
