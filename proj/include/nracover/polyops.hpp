#pragma once

#include "nracover/multipoly.hpp"

namespace nracover {

/// Pseudo-remainder of a by b with respect to v:
/// lc_v(b)^(deg_v(a)-deg_v(b)+1) * a = q*b + prem, deg_v(prem) < deg_v(b).
/// Requires deg_v(b) >= 0 and deg_v(a) >= deg_v(b).
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Variable v);

/// Content of p with respect to v: gcd of the coefficients of the powers of
/// v (a polynomial free of v).
MultiPoly content_in(const MultiPoly& p, Variable v);

/// Multivariate gcd, returned in normalized form (integer, coprime
/// coefficients, positive leading coefficient); gcd of anything with a
/// nonzero constant is 1.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

/// p divided by gcd(p, dp/dv): same zero set, square-free in v.  Requires
/// positive degree in v.  Result normalized.
MultiPoly square_free_part(const MultiPoly& p, Variable v);

/// Resultant of p and q with respect to v via the subresultant
/// pseudo-remainder sequence.  Requires both arguments to have positive
/// degree in v (matching the Sylvester-matrix definition).
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Variable v);

/// (-1)^(d(d-1)/2) * res_v(p, dp/dv) / lc_v(p) for d = deg_v(p) >= 1.
MultiPoly discriminant(const MultiPoly& p, Variable v);

}  // namespace nracover
