#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nracover/rational.hpp"
#include "nracover/variable.hpp"

namespace nracover {

/// Exponent vector; entry i is the power of variable i.  Trailing zeros are
/// trimmed so the representation is unique.
using ExpVec = std::vector<unsigned>;

/// Lexicographic order on zero-padded exponent vectors; earlier variables are
/// more significant.  Total on trimmed vectors.
struct ExpLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      unsigned ea = i < a.size() ? a[i] : 0;
      unsigned eb = i < b.size() ? b[i] : 0;
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

/// Sparse multivariate polynomial with Rational coefficients over a fixed
/// variable order.  Invariants: no stored zero coefficients; exponent vectors
/// trimmed.  All binary operations require both operands to share one order.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, ExpLess>;

  explicit MultiPoly(VarOrderPtr order) : order_(std::move(order)) {}
  MultiPoly(VarOrderPtr order, const Rational& c);
  static MultiPoly var(VarOrderPtr order, Variable v, unsigned power = 1);
  static MultiPoly from_terms(VarOrderPtr order,
                              const std::vector<std::pair<ExpVec, Rational>>& terms);

  const VarOrderPtr& order() const { return order_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  /// Degree in one variable; -1 for the zero polynomial (as is total_degree).
  int degree(Variable v) const;
  int total_degree() const;
  /// Highest-order variable that actually occurs, if any.
  std::optional<Variable> main_var() const;
  bool uses(Variable v) const { return degree(v) > 0; }
  std::vector<Variable> vars() const;

  /// Coefficient of v^k, a polynomial not involving v.
  MultiPoly coeff(Variable v, unsigned k) const;
  /// All coefficients with respect to v, ordered from the leading one
  /// (degree(v)) down to the constant-in-v one.
  std::vector<MultiPoly> coeffs(Variable v) const;
  MultiPoly leading_coeff(Variable v) const { return coeff(v, degree(v) < 0 ? 0 : degree(v)); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;

  /// Structural total order (for sorted containers and canonical listings).
  static int compare(const MultiPoly& a, const MultiPoly& b);

  MultiPoly derivative(Variable v) const;

  /// Substitutes exact rational values for a prefix x_1..x_k of the variable
  /// order; throws Error if the assigned set is not such a prefix.
  MultiPoly eval_partial(const std::vector<Rational>& prefix) const;
  /// Full evaluation; requires values for every variable of the order.
  Rational eval(const std::vector<Rational>& point) const;

  /// Substitutes values for an arbitrary subset of variables.  Callers that
  /// assign cylindrically should prefer eval_partial, which enforces the
  /// prefix discipline.
  MultiPoly substitute(const std::map<Variable, Rational>& values) const;

  /// Rational content: the positive rational c such that p/c has coprime
  /// integer coefficients.  Zero polynomial yields 1.
  Rational content() const;
  /// p scaled to integer, coprime coefficients with positive leading
  /// coefficient (leading with respect to the monomial order).
  MultiPoly normalized() const;
  /// True if coefficients are integers, coprime, and the leading one is > 0.
  bool is_normalized() const;

  std::string str() const;

 private:
  void add_term(const ExpVec& e, const Rational& c);
  void check_same_order(const MultiPoly& o) const;

  VarOrderPtr order_;
  TermMap terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Exact division: returns q with a == q*b if it exists.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace nracover
