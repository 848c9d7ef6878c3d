#include <algorithm>
#include <utility>
#include <vector>

#include "nracover/cad.hpp"
#include "nracover/errors.hpp"
#include "nracover/polyops.hpp"

namespace nracover {

namespace {

/// Canonical accumulation: constants dropped, normalized representative,
/// duplicates (up to constant multiples) merged.
void add_canonical(std::vector<MultiPoly>& out, const MultiPoly& p) {
  if (p.is_constant()) return;
  MultiPoly n = p.normalized();
  for (const auto& q : out)
    if (q == n) return;
  out.push_back(std::move(n));
}

/// Inserts a square-free polynomial into a pairwise-coprime basis, splitting
/// existing entries along common factors.  Keeping the basis coprime stops
/// pairwise resultants from collapsing to zero, which would silently lose
/// the shared root locus.
void insert_coprime(std::vector<MultiPoly>& basis, MultiPoly s) {
  for (size_t i = 0; i < basis.size() && !s.is_constant();) {
    MultiPoly g = gcd_poly(s, basis[i]);
    if (g.is_constant()) {
      ++i;
      continue;
    }
    auto rest = divide_exact(basis[i], g);
    auto s_rest = divide_exact(s, g);
    if (!rest || !s_rest) throw Error("insert_coprime: gcd does not divide");
    size_t skip = 1;
    basis[i] = g.normalized();
    if (!rest->is_constant()) {
      basis.insert(basis.begin() + static_cast<long>(i) + 1, rest->normalized());
      ++skip;
    }
    s = *s_rest;
    i += skip;  // s/g is coprime to both pieces
  }
  if (!s.is_constant()) basis.push_back(s.normalized());
}

}  // namespace

ProjectionSplit project_split(const std::vector<MultiPoly>& polys, Variable v) {
  ProjectionSplit out;
  for (const auto& p : polys) {
    if (p.is_zero())
      throw NullificationError("project: identically zero polynomial");
    if (p.degree(v) < 1) {
      add_canonical(out.lower, p);  // v-free input passes through
      continue;
    }
    // The v-free content carries roots of its own (the whole line above
    // them); it moves down, the primitive part enters the basis.
    MultiPoly cont = content_in(p, v);
    add_canonical(out.lower, cont);
    auto prim = divide_exact(p, cont);
    if (!prim) throw Error("project: content does not divide");
    insert_coprime(out.basis, square_free_part(*prim, v));
  }

  for (const auto& s : out.basis) {
    // Coefficients from the leading one down; a constant coefficient proves
    // the degree cannot drop past it, so nothing further is needed.
    for (const auto& c : s.coeffs(v)) {
      if (c.is_constant() && !c.is_zero()) break;
      add_canonical(out.lower, c);
    }
    add_canonical(out.lower, discriminant(s, v));
  }
  for (size_t i = 0; i < out.basis.size(); ++i)
    for (size_t j = i + 1; j < out.basis.size(); ++j)
      add_canonical(out.lower, resultant(out.basis[i], out.basis[j], v));

  std::sort(out.lower.begin(), out.lower.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return MultiPoly::compare(a, b) < 0;
            });
  std::sort(out.basis.begin(), out.basis.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return MultiPoly::compare(a, b) < 0;
            });
  return out;
}

std::vector<MultiPoly> project(const std::vector<MultiPoly>& polys, Variable v) {
  return project_split(polys, v).lower;
}

}  // namespace nracover
