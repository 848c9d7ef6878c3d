#pragma once

#include <string>

#include "nracover/errors.hpp"
#include "nracover/rational.hpp"

namespace nracover {

/// Exact value of an integer or decimal numeral token ("12", "-3", "1.5");
/// the caller guarantees the digit shape, this converts without rounding.
inline Rational numeral_value(const std::string& text, int line, int col) {
  bool neg = !text.empty() && text[0] == '-';
  std::string digits = neg ? text.substr(1) : text;
  size_t dot = digits.find('.');
  Integer num;
  unsigned frac_digits = 0;
  // Explicit base: GMP's string constructor otherwise treats a leading
  // zero as octal.
  if (dot == std::string::npos) {
    num = Integer(digits, 10);
  } else {
    std::string whole = digits.substr(0, dot);
    std::string part = digits.substr(dot + 1);
    if (whole.empty() || part.empty())
      throw ParseError("malformed decimal numeral '" + text + "'", line, col);
    num = Integer(whole + part, 10);
    frac_digits = static_cast<unsigned>(part.size());
  }
  Rational r(num, pow(Integer(10), frac_digits));
  return neg ? -r : r;
}

}  // namespace nracover
