#include "nracover/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "nracover/errors.hpp"

namespace nracover {

UniPoly UniPoly::from_multi(const MultiPoly& p, Variable v) {
  std::vector<Rational> c;
  for (const auto& [e, k] : p.terms()) {
    unsigned pow = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i != v.index) throw Error("from_multi: polynomial is not univariate in " +
                                    p.order()->name(v));
      pow = e[i];
    }
    if (pow >= c.size()) c.resize(pow + 1, Rational(0));
    c[pow] = k;
  }
  return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multi(const VarOrderPtr& order, Variable v) const {
  std::vector<std::pair<ExpVec, Rational>> terms;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    ExpVec e;
    if (i > 0) {
      e.assign(v.index + 1, 0);
      e[v.index] = static_cast<unsigned>(i);
    }
    terms.emplace_back(std::move(e), c_[i]);
  }
  return MultiPoly::from_terms(order, terms);
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& k : c_) r.push_back(-k);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& k) const {
  if (k.is_zero()) return UniPoly();
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * k);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error("univariate division by zero polynomial");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1, Rational(0));
  for (int i = degree(); i >= dd; --i) {
    size_t ui = static_cast<size_t>(i);
    if (rem[ui].is_zero()) continue;
    Rational f = rem[ui] / d.lc();
    quo[ui - dd] = f;
    for (int j = 0; j <= dd; ++j)
      rem[ui - dd + static_cast<size_t>(j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error("univariate division was not exact");
  return q;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Integer num(0), den(1);
  for (const auto& k : c_) {
    num = nracover::gcd(num, k.numerator());
    den = lcm(den, k.denominator());
  }
  Rational scale = Rational(den, num);  // reciprocal of the (positive) content
  if (lc().sign() == Sign::Negative) scale = -scale;
  return *this * scale;
}

bool UniPoly::is_primitive_normalized() const {
  if (is_zero()) return true;
  if (lc().sign() != Sign::Positive) return false;
  Integer num(0);
  for (const auto& k : c_) {
    if (!k.is_integer()) return false;
    num = nracover::gcd(num, k.numerator());
  }
  return num == 1;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero()) return b * b.lc().reciprocal();
  if (b.is_zero()) return a * a.lc().reciprocal();
  // Primitive pseudo-remainder sequence on integer forms; avoids the
  // coefficient blowup of naive rational Euclid.
  UniPoly f = a.primitive(), g = b.primitive();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // prem(f, g): scale f so the division is fraction-free, keep remainder.
    int k = f.degree() - g.degree() + 1;
    UniPoly scaled = f * g.lc().pow(static_cast<unsigned>(k));
    UniPoly r = scaled.divmod(g).second;
    f = g;
    g = r.is_zero() ? UniPoly() : r.primitive();
  }
  return f * f.lc().reciprocal();  // monic
}

UniPoly UniPoly::square_free_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(*this, derivative());
  return divide_exact(g).primitive();
}

std::vector<Integer> UniPoly::int_coeffs() const {
  std::vector<Integer> r;
  r.reserve(c_.size());
  for (const auto& k : c_) {
    if (!k.is_integer()) throw Error("int_coeffs on non-integer polynomial");
    r.push_back(k.numerator());
  }
  return r;
}

UniPoly UniPoly::from_int_coeffs(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& k : coeffs) c.emplace_back(k);
  return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& k = c_[static_cast<size_t>(i)];
    if (k.is_zero()) continue;
    Rational a = k;
    if (first) {
      if (a.sign() == Sign::Negative) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() == Sign::Negative ? " - " : " + ");
      a = a.abs();
    }
    if (i == 0) {
      os << a.pretty();
    } else {
      if (a != Rational(1)) os << a.pretty() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace nracover
