#pragma once

#include "nracover/multipoly.hpp"
#include "nracover/rational.hpp"
#include "nracover/unipoly.hpp"

namespace nratest {

/// Resultant by the textbook route: determinant of the Sylvester matrix,
/// computed with fraction-free Bareiss elimination over exact polynomial
/// entries.  Independent of the production subresultant implementation.
nracover::MultiPoly sylvester_resultant(const nracover::MultiPoly& p,
                                        const nracover::MultiPoly& q,
                                        nracover::Variable v);

/// Number of distinct real roots of p in (a, b] by Sturm's theorem.
int sturm_count(const nracover::UniPoly& p, const nracover::Rational& a,
                const nracover::Rational& b);

/// Total number of distinct real roots of p (Sturm over a Cauchy bound).
int sturm_count_all(const nracover::UniPoly& p);

/// Dense scan of [lo, hi] with the given step: counts sign changes between
/// consecutive grid points plus exact zeros hit by the grid.  Finds every
/// root if the roots lie in (lo, hi) and are separated by more than 2*step.
int grid_root_count(const nracover::UniPoly& p, const nracover::Rational& lo,
                    const nracover::Rational& hi, const nracover::Rational& step);

}  // namespace nratest
