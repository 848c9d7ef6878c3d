#include "nracover/rational.hpp"

#include <ostream>

#include "nracover/errors.hpp"

namespace nracover {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error("division by zero rational");
  return from_raw(v_ / o.v_);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  return Rational(denominator(), numerator());
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return from_raw(r);  // canonical input stays canonical under powering
}

Integer pow(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational Rational::parse(const std::string& text, bool require_canonical) {
  auto fail = [&](const std::string& why) -> Rational {
    throw Error("bad rational '" + text + "': " + why);
  };
  if (text.empty()) return fail("empty");
  std::string num = text, den = "1";
  bool has_den = false;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    has_den = true;
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) return fail("not an integer ratio");
  // Explicit base: GMP's string constructor otherwise treats a leading
  // zero as octal.
  Integer n(num, 10), d(den, 10);
  if (d == 0) return fail("zero denominator");
  if (require_canonical) {
    if (!has_den) return fail("missing '/den'");
    if (den[0] == '-') return fail("negative denominator");
    if (num.size() > 1 && num[0] == '0') return fail("leading zero");
    if (num.size() > 2 && num[0] == '-' && num[1] == '0') return fail("leading zero");
    if (den.size() > 1 && den[0] == '0') return fail("leading zero");
    if (gcd(n, d) != 1 && !(n == 0 && d == 1))
      return fail("not in lowest terms");
    if (n == 0 && d != 1) return fail("not in lowest terms");
  }
  return Rational(n, d);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return v_.get_num().get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace nracover
