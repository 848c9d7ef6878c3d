#include "nracover/polyops.hpp"

#include "nracover/errors.hpp"

namespace nracover {

namespace {

MultiPoly must_divide(const MultiPoly& a, const MultiPoly& b, const char* where) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(std::string(where) + ": division was not exact");
  return *q;
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Variable v) {
  int da = a.degree(v), db = b.degree(v);
  if (db < 0) throw Error("pseudo_remainder by zero polynomial");
  if (da < db) throw Error("pseudo_remainder: degree of dividend too small");
  MultiPoly d = b.leading_coeff(v);
  MultiPoly r = a;
  int e = da - db + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    MultiPoly t = r.leading_coeff(v) *
                  MultiPoly::var(a.order(), v, static_cast<unsigned>(dr - db));
    r = d * r - t * b;
    --e;
  }
  // Scale up to the full lc^(da-db+1) factor so prem matches its definition.
  for (; e > 0; --e) r = d * r;
  return r;
}

MultiPoly content_in(const MultiPoly& p, Variable v) {
  MultiPoly c(p.order());
  int d = p.degree(v);
  for (int k = 0; k <= d; ++k)
    c = gcd_poly(c, p.coeff(v, static_cast<unsigned>(k)));
  return c;
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant())
    return MultiPoly(a.order(), Rational(1));

  Variable v = std::max(*a.main_var(), *b.main_var());
  if (!a.uses(v)) return gcd_poly(a, content_in(b, v));
  if (!b.uses(v)) return gcd_poly(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd_poly(ca, cb);
  MultiPoly f = must_divide(a, ca, "gcd"), g = must_divide(b, cb, "gcd");
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  // Primitive pseudo-remainder sequence on the v-primitive parts.
  while (true) {
    if (g.is_zero()) break;
    if (g.degree(v) == 0) {
      // v-free nonzero remainder: the primitive parts are coprime.
      f = MultiPoly(a.order(), Rational(1));
      break;
    }
    MultiPoly r = pseudo_remainder(f, g, v);
    f = g;
    g = r.is_zero() ? r : must_divide(r, content_in(r, v), "gcd").normalized();
  }
  return (c * f).normalized();
}

MultiPoly square_free_part(const MultiPoly& p, Variable v) {
  if (p.degree(v) < 1) throw Error("square_free_part: no positive degree in " +
                                   p.order()->name(v));
  MultiPoly g = gcd_poly(p, p.derivative(v));
  return must_divide(p, g, "square_free_part").normalized();
}

namespace {

/// Subresultant pseudo-remainder sequence resultant; accepts deg_v(q) == 0.
MultiPoly resultant_impl(MultiPoly a, MultiPoly b, Variable v) {
  const VarOrderPtr& order = a.order();
  if (a.is_zero() || b.is_zero()) return MultiPoly(order);
  int s = 1;
  if (a.degree(v) < b.degree(v)) {
    if ((a.degree(v) & 1) && (b.degree(v) & 1)) s = -s;
    std::swap(a, b);
  }
  MultiPoly g(order, Rational(1)), h(order, Rational(1));
  while (b.degree(v) > 0) {
    int delta = a.degree(v) - b.degree(v);
    if ((a.degree(v) & 1) && (b.degree(v) & 1)) s = -s;
    MultiPoly r = pseudo_remainder(a, b, v);
    a = b;
    b = must_divide(r, g * h.pow(static_cast<unsigned>(delta)), "resultant");
    g = a.leading_coeff(v);
    // h = h^(1-delta) * g^delta, an exact division for delta > 1.
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = must_divide(g.pow(static_cast<unsigned>(delta)),
                      h.pow(static_cast<unsigned>(delta - 1)), "resultant");
    }
  }
  if (b.is_zero()) return MultiPoly(order);
  int la = a.degree(v);  // >= 1 here
  MultiPoly num = b.pow(static_cast<unsigned>(la));
  MultiPoly res = la == 1 ? num
                          : must_divide(num, h.pow(static_cast<unsigned>(la - 1)),
                                        "resultant");
  return s < 0 ? -res : res;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Variable v) {
  if (p.degree(v) < 1 || q.degree(v) < 1)
    throw Error("resultant: arguments must have positive degree in " +
                p.order()->name(v));
  return resultant_impl(p, q, v);
}

MultiPoly discriminant(const MultiPoly& p, Variable v) {
  int d = p.degree(v);
  if (d < 1) throw Error("discriminant: no positive degree in " +
                         p.order()->name(v));
  MultiPoly res = resultant_impl(p, p.derivative(v), v);
  MultiPoly disc = must_divide(res, p.leading_coeff(v), "discriminant");
  // Sign (-1)^(d(d-1)/2).
  return (static_cast<long>(d) * (d - 1) / 2) % 2 == 1 ? -disc : disc;
}

}  // namespace nracover
