#pragma once

#include <string>
#include <vector>

#include "nracover/multipoly.hpp"
#include "nracover/rational.hpp"
#include "nracover/sign.hpp"

namespace nracover {

/// Dense univariate polynomial over the rationals, coefficient of x^i at
/// index i.  Invariant: the leading (last) coefficient is nonzero; the zero
/// polynomial is the empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// x - r
  static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

  /// Converts a multivariate polynomial that involves (at most) the single
  /// variable v; throws Error if any other variable occurs.
  static UniPoly from_multi(const MultiPoly& p, Variable v);
  MultiPoly to_multi(const VarOrderPtr& order, Variable v) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](size_t i) const { return c_[i]; }
  const Rational& lc() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Sign sign_at(const Rational& x) const { return eval(x).sign(); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;

  /// Euclidean division by a nonzero divisor: returns {quotient, remainder}.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Exact division; throws Error if the remainder is nonzero.
  UniPoly divide_exact(const UniPoly& d) const;

  /// Monic gcd (1 for coprime inputs); gcd(0,0) = 0.  Uses a primitive
  /// pseudo-remainder sequence internally to keep coefficients small.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  /// p / gcd(p, p'): same real roots, all simple.  Result normalized to
  /// primitive integer coefficients with positive leading coefficient.
  UniPoly square_free_part() const;

  /// Scales to coprime integer coefficients with positive leading
  /// coefficient (canonical representative up to constant multiples).
  UniPoly primitive() const;
  bool is_primitive_normalized() const;

  /// Integer coefficient list, low to high; requires integer coefficients.
  std::vector<Integer> int_coeffs() const;
  static UniPoly from_int_coeffs(const std::vector<Integer>& coeffs);

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace nracover
