#include "nracover/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nracover/errors.hpp"

namespace nracover {

namespace {

ExpVec trim(ExpVec e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;  // no trim needed: the longer operand's top entry is nonzero
}

unsigned exp_of(const ExpVec& e, Variable v) {
  return v.index < e.size() ? e[v.index] : 0;
}

}  // namespace

MultiPoly::MultiPoly(VarOrderPtr order, const Rational& c) : order_(std::move(order)) {
  if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
}

MultiPoly MultiPoly::var(VarOrderPtr order, Variable v, unsigned power) {
  if (v.index >= order->size()) throw Error("variable outside its order");
  MultiPoly p(order);
  if (power == 0) return MultiPoly(std::move(order), Rational(1));
  ExpVec e(v.index + 1, 0);
  e[v.index] = power;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(VarOrderPtr order,
                                const std::vector<std::pair<ExpVec, Rational>>& terms) {
  MultiPoly p(std::move(order));
  for (const auto& [e, c] : terms) p.add_term(trim(e), c);
  return p;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_order(const MultiPoly& o) const {
  if (order_ == o.order_) return;
  if (order_ && o.order_ && order_->names() == o.order_->names()) return;
  throw Error("mixing polynomials over different variable orders");
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error("constant_value of non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::degree(Variable v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_of(e, v));
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

std::optional<Variable> MultiPoly::main_var() const {
  std::optional<Variable> best;
  for (const auto& [e, c] : terms_)
    if (!e.empty()) {
      Variable v{static_cast<unsigned>(e.size() - 1)};
      if (!best || best->index < v.index) best = v;
    }
  return best;
}

std::vector<Variable> MultiPoly::vars() const {
  std::vector<bool> seen;
  for (const auto& [e, c] : terms_) {
    if (e.size() > seen.size()) seen.resize(e.size(), false);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) seen[i] = true;
  }
  std::vector<Variable> r;
  for (unsigned i = 0; i < seen.size(); ++i)
    if (seen[i]) r.push_back(Variable{i});
  return r;
}

MultiPoly MultiPoly::coeff(Variable v, unsigned k) const {
  MultiPoly r(order_);
  for (const auto& [e, c] : terms_) {
    if (exp_of(e, v) != k) continue;
    ExpVec rest = e;
    if (v.index < rest.size()) rest[v.index] = 0;
    r.add_term(trim(std::move(rest)), c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs(Variable v) const {
  int d = degree(v);
  std::vector<MultiPoly> r;
  if (d < 0) return r;
  for (int k = d; k >= 0; --k) r.push_back(coeff(v, static_cast<unsigned>(k)));
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(order_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_order(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same_order(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_order(o);
  MultiPoly r(order_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(order_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(order_, Rational(1));
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_same_order(o);
  return terms_ == o.terms_;
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  ExpLess less;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

MultiPoly MultiPoly::derivative(Variable v) const {
  MultiPoly r(order_);
  for (const auto& [e, c] : terms_) {
    unsigned k = exp_of(e, v);
    if (k == 0) continue;
    ExpVec d = e;
    d[v.index] = k - 1;
    r.add_term(trim(std::move(d)), c * Rational(static_cast<long>(k)));
  }
  return r;
}

MultiPoly MultiPoly::eval_partial(const std::vector<Rational>& prefix) const {
  if (prefix.size() > order_->size())
    throw Error("eval_partial: more values than variables");
  std::map<Variable, Rational> values;
  for (unsigned i = 0; i < prefix.size(); ++i) values.emplace(Variable{i}, prefix[i]);
  return substitute(values);
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != order_->size())
    throw Error("eval: point arity does not match variable order");
  return eval_partial(point).constant_value();
}

MultiPoly MultiPoly::substitute(const std::map<Variable, Rational>& values) const {
  MultiPoly r(order_);
  for (const auto& [e, c] : terms_) {
    Rational k = c;
    ExpVec rest = e;
    for (const auto& [v, val] : values) {
      unsigned p = exp_of(e, v);
      if (p == 0) continue;
      k *= val.pow(p);
      rest[v.index] = 0;
      if (k.is_zero()) break;
    }
    r.add_term(trim(std::move(rest)), k);
  }
  return r;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num(0), den(1);
  for (const auto& [e, c] : terms_) {
    num = gcd(num, c.numerator());
    den = lcm(den, c.denominator());
  }
  return Rational(num, den);
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  // terms_ is ordered ascending; the monomial-order leading term is last.
  if (terms_.rbegin()->second.sign() == Sign::Negative) c = -c;
  return *this * c.reciprocal();
}

bool MultiPoly::is_normalized() const {
  if (terms_.empty()) return true;
  return content() == Rational(1) && terms_.rbegin()->second.sign() == Sign::Positive;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Display from the leading monomial down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() == Sign::Negative) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() == Sign::Negative ? " - " : " + ");
      a = a.abs();
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += order_->name(Variable{static_cast<unsigned>(i)});
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.pretty();
    } else if (a == Rational(1)) {
      os << mono;
    } else {
      os << a.pretty() << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  MultiPoly q(a.order());
  MultiPoly r = a;
  const auto& bt = *b.terms().rbegin();  // leading term of the divisor
  while (!r.is_zero()) {
    const auto& rt = *r.terms().rbegin();
    ExpVec d(rt.first.size());
    bool ok = rt.first.size() >= bt.first.size();
    if (ok) {
      for (size_t i = 0; i < rt.first.size(); ++i) {
        unsigned eb = i < bt.first.size() ? bt.first[i] : 0;
        if (rt.first[i] < eb) {
          ok = false;
          break;
        }
        d[i] = rt.first[i] - eb;
      }
    }
    if (!ok) return std::nullopt;  // leading term not divisible
    while (!d.empty() && d.back() == 0) d.pop_back();
    MultiPoly t = MultiPoly::from_terms(a.order(), {{d, rt.second / bt.second}});
    q = q + t;
    r = r - t * b;
  }
  return q;
}

}  // namespace nracover
