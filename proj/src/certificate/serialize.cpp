#include <cctype>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nracover/certificate.hpp"
#include "nracover/errors.hpp"

namespace nracover {

namespace {

// ---------------------------------------------------------------------------
// Writer.  Emits one canonical byte sequence per certificate: fixed key
// order, no whitespace, rationals as quoted "num/den", arbitrary-precision
// integers as bare JSON numbers, exponent vectors padded to the variable
// count.  Equal certificates produce identical bytes.
// ---------------------------------------------------------------------------

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void append_rational(std::string& out, const Rational& q) {
  out += '"';
  out += q.str();
  out += '"';
}

void append_value(std::string& out, const RealAlgebraic& v) {
  if (v.is_rational()) {
    append_rational(out, v.rational());
    return;
  }
  out += "{\"defpoly\":[";
  bool first = true;
  for (const Integer& c : v.defpoly().int_coeffs()) {
    if (!first) out += ',';
    first = false;
    out += c.get_str();
  }
  out += "],\"lo\":";
  append_rational(out, v.lo());
  out += ",\"hi\":";
  append_rational(out, v.hi());
  out += ",\"index\":";
  out += std::to_string(v.index());
  out += '}';
}

void append_bound(std::string& out, const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::NegInf:
      out += "{\"type\":\"neginf\"}";
      return;
    case Bound::Kind::PosInf:
      out += "{\"type\":\"posinf\"}";
      return;
    case Bound::Kind::Value:
      break;
  }
  out += "{\"type\":\"value\",\"value\":";
  append_value(out, b.value);
  out += ",\"closed\":";
  out += b.closed ? "true" : "false";
  out += '}';
}

void append_poly(std::string& out, const MultiPoly& p, size_t nvars) {
  out += '[';
  bool first_term = true;
  for (const auto& [exps, coeff] : p.terms()) {
    if (!first_term) out += ',';
    first_term = false;
    out += '[';
    append_rational(out, coeff);
    out += ",[";
    for (size_t i = 0; i < nvars; ++i) {
      if (i) out += ',';
      out += std::to_string(i < exps.size() ? exps[i] : 0u);
    }
    out += "]]";
  }
  out += ']';
}

void append_interval(std::string& out, const CoveringInterval& iv,
                     size_t nvars) {
  out += "{\"lower\":";
  append_bound(out, iv.lower);
  out += ",\"upper\":";
  append_bound(out, iv.upper);
  out += ",\"sample\":";
  append_value(out, iv.sample);
  out += ",\"reasons\":[";
  for (size_t i = 0; i < iv.reasons.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(iv.reasons[i]);
  }
  out += "],\"characterization\":[";
  for (size_t i = 0; i < iv.characterization.size(); ++i) {
    if (i) out += ',';
    append_poly(out, iv.characterization[i], nvars);
  }
  out += ']';
  if (!iv.children.empty()) {
    out += ",\"children\":[";
    for (size_t i = 0; i < iv.children.size(); ++i) {
      if (i) out += ',';
      append_interval(out, iv.children[i], nvars);
    }
    out += ']';
  }
  out += '}';
}

// ---------------------------------------------------------------------------
// Reader.  Strict about everything the writer fixes (key order, canonical
// rationals, canonical term order, defining-polynomial normal form) but
// tolerant of whitespace between tokens.  Every algebraic value is
// re-validated against fresh root isolation; nothing is taken on faith.
// ---------------------------------------------------------------------------

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  Certificate read() {
    Certificate cert;
    expect('{');
    key("version");
    if (read_small_int(0, 1000000) != 1) fail("unsupported certificate version");
    comma_key("variables");
    expect('[');
    if (!try_expect(']')) {
      do {
        cert.variables.push_back(read_string());
      } while (try_expect(','));
      expect(']');
    }
    if (cert.variables.empty()) fail("empty variable list");
    for (size_t i = 0; i < cert.variables.size(); ++i)
      for (size_t j = i + 1; j < cert.variables.size(); ++j)
        if (cert.variables[i] == cert.variables[j])
          fail("duplicate variable \"" + cert.variables[i] + "\"");
    order_ = VarOrder::make(cert.variables);

    comma_key("constraints");
    expect('[');
    if (!try_expect(']')) {
      do {
        cert.constraints.push_back(read_constraint(cert.constraints.size()));
      } while (try_expect(','));
      expect(']');
    }
    if (cert.constraints.empty()) fail("empty constraint list");
    n_constraints_ = cert.constraints.size();

    comma_key("covering");
    cert.covering = read_intervals(1);
    comma_key("producer");
    cert.producer = read_string();
    expect('}');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing content after the certificate");
    return cert;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, column = 1;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' ||
                                s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_expect(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void key(const char* name) {
    std::string k = read_string();
    if (k != name)
      fail(std::string("expected key \"") + name + "\", got \"" + k + "\"");
    expect(':');
  }

  void comma_key(const char* name) {
    expect(',');
    key(name);
  }

  std::string read_string() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected a string");
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated string");
      char c = s_[pos_++];
      if (c == '"') break;
      if (static_cast<unsigned char>(c) < 0x20)
        fail("raw control character in string");
      if (c != '\\') {
        out += c;
        continue;
      }
      if (pos_ >= s_.size()) fail("unterminated escape");
      char e = s_[pos_++];
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'u': append_codepoint(out); break;
        default: fail("unknown escape sequence");
      }
    }
    return out;
  }

  unsigned read_hex4() {
    unsigned v = 0;
    for (int i = 0; i < 4; ++i) {
      if (pos_ >= s_.size()) fail("unterminated unicode escape");
      char c = s_[pos_++];
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<unsigned>(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    return v;
  }

  void append_codepoint(std::string& out) {
    unsigned cp = read_hex4();
    if (cp >= 0xD800 && cp <= 0xDBFF) {
      if (pos_ + 1 >= s_.size() || s_[pos_] != '\\' || s_[pos_ + 1] != 'u')
        fail("unpaired surrogate");
      pos_ += 2;
      unsigned lo = read_hex4();
      if (lo < 0xDC00 || lo > 0xDFFF) fail("invalid low surrogate");
      cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
    } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
      fail("unpaired surrogate");
    }
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  Integer read_big_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    size_t digits_start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits_start) fail("expected an integer");
    std::string digits = s_.substr(digits_start, pos_ - digits_start);
    if (digits.size() > 1 && digits[0] == '0')
      fail("integer with a leading zero");
    Integer v(digits, 10);
    if (negative) {
      if (v == 0) fail("negative zero");
      v = -v;
    }
    return v;
  }

  long read_small_int(long min_v, long max_v) {
    Integer b = read_big_int();
    if (!b.fits_slong_p()) fail("integer out of range");
    long v = b.get_si();
    if (v < min_v || v > max_v) fail("integer out of range");
    return v;
  }

  bool read_bool() {
    skip_ws();
    if (s_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return true;
    }
    if (s_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return false;
    }
    fail("expected true or false");
  }

  Rational read_rational() {
    std::string t = read_string();
    try {
      return Rational::parse(t, /*require_canonical=*/true);
    } catch (const Error& e) {
      fail("bad rational \"" + t + "\": " + e.what());
    }
  }

  Relation read_relation() {
    std::string t = read_string();
    for (Relation r : {Relation::Lt, Relation::Le, Relation::Eq, Relation::Ne,
                       Relation::Ge, Relation::Gt})
      if (t == relation_str(r)) return r;
    fail("unknown relation \"" + t + "\"");
  }

  // Zero polynomials are representable only where they are meaningful: a
  // constraint may echo a trivial input atom, but a characterization entry
  // must have roots to offer, so the zero polynomial is rejected there.
  MultiPoly read_poly(bool allow_zero) {
    expect('[');
    std::vector<std::pair<ExpVec, Rational>> terms;
    if (!try_expect(']')) {
      do {
        expect('[');
        Rational c = read_rational();
        if (c.is_zero()) fail("zero coefficient in polynomial");
        expect(',');
        expect('[');
        ExpVec e;
        for (unsigned i = 0; i < order_->size(); ++i) {
          if (i) expect(',');
          e.push_back(static_cast<unsigned>(read_small_int(0, 1 << 20)));
        }
        expect(']');
        expect(']');
        if (!terms.empty() && !ExpLess{}(terms.back().first, e))
          fail("polynomial terms not in canonical order");
        terms.emplace_back(std::move(e), c);
      } while (try_expect(','));
      expect(']');
    }
    if (terms.empty() && !allow_zero) fail("zero polynomial");
    return MultiPoly::from_terms(order_, terms);
  }

  Constraint read_constraint(size_t position) {
    expect('{');
    key("id");
    long id = read_small_int(0, 1000000000);
    if (id != static_cast<long>(position))
      fail("constraint ids must equal their positions");
    comma_key("poly");
    MultiPoly p = read_poly(/*allow_zero=*/true);
    comma_key("rel");
    Relation rel = read_relation();
    expect('}');
    return Constraint{std::move(p), rel, static_cast<int>(id)};
  }

  RealAlgebraic read_value() {
    if (peek() == '"') return RealAlgebraic(read_rational());
    expect('{');
    key("defpoly");
    expect('[');
    std::vector<Integer> coeffs;
    if (!try_expect(']')) {
      do {
        coeffs.push_back(read_big_int());
      } while (try_expect(','));
      expect(']');
    }
    comma_key("lo");
    Rational lo = read_rational();
    comma_key("hi");
    Rational hi = read_rational();
    comma_key("index");
    long index = read_small_int(1, 1000000);
    expect('}');
    return validate_algebraic(coeffs, lo, hi, static_cast<int>(index));
  }

  RealAlgebraic validate_algebraic(const std::vector<Integer>& coeffs,
                                   const Rational& lo, const Rational& hi,
                                   int index) {
    if (coeffs.size() < 3)
      fail("algebraic value needs a defining polynomial of degree >= 2");
    if (coeffs.back() == 0)
      fail("defining polynomial has a zero leading coefficient");
    UniPoly dp = UniPoly::from_int_coeffs(coeffs);
    if (!(dp == dp.square_free_part()))
      fail("defining polynomial is not a primitive square-free polynomial "
           "with a positive leading coefficient");
    if (!(lo < hi)) fail("empty isolating interval");
    std::vector<RealAlgebraic> roots;
    try {
      roots = isolate_roots(dp);
    } catch (const Error& e) {
      fail(std::string("root isolation failed: ") + e.what());
    }
    if (static_cast<size_t>(index) > roots.size())
      fail("root index " + std::to_string(index) +
           " out of range: polynomial has " + std::to_string(roots.size()) +
           " real roots");
    const RealAlgebraic lo_r{lo}, hi_r{hi};
    int inside = -1;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (compare(lo_r, roots[i]) == Cmp::Lt &&
          compare(roots[i], hi_r) == Cmp::Lt) {
        if (inside >= 0) fail("isolating interval contains more than one root");
        inside = static_cast<int>(i);
      }
    }
    if (inside < 0) fail("isolating interval contains no root");
    if (inside + 1 != index) fail("root index does not match the interval");
    if (roots[static_cast<size_t>(inside)].is_rational())
      fail("rational root must be encoded as a rational");
    try {
      return RealAlgebraic::algebraic(std::make_shared<const UniPoly>(dp), lo,
                                      hi, index);
    } catch (const Error& e) {
      fail(std::string("bad algebraic value: ") + e.what());
    }
  }

  Bound read_bound() {
    expect('{');
    key("type");
    std::string t = read_string();
    if (t == "neginf") {
      expect('}');
      return Bound::neg_inf();
    }
    if (t == "posinf") {
      expect('}');
      return Bound::pos_inf();
    }
    if (t != "value") fail("unknown bound type \"" + t + "\"");
    comma_key("value");
    RealAlgebraic v = read_value();
    comma_key("closed");
    bool closed = read_bool();
    expect('}');
    return closed ? Bound::closed_at(std::move(v)) : Bound::open(std::move(v));
  }

  std::vector<CoveringInterval> read_intervals(unsigned level) {
    if (level > order_->size())
      fail("covering nested deeper than the variable count");
    expect('[');
    std::vector<CoveringInterval> out;
    if (!try_expect(']')) {
      do {
        out.push_back(read_interval(level));
      } while (try_expect(','));
      expect(']');
    }
    if (out.empty()) fail("empty covering");
    return out;
  }

  CoveringInterval read_interval(unsigned level) {
    CoveringInterval iv;
    expect('{');
    key("lower");
    iv.lower = read_bound();
    comma_key("upper");
    iv.upper = read_bound();
    comma_key("sample");
    iv.sample = read_value();
    comma_key("reasons");
    expect('[');
    if (!try_expect(']')) {
      do {
        int id = static_cast<int>(
            read_small_int(0, static_cast<long>(n_constraints_) - 1));
        if (!iv.reasons.empty() && id <= iv.reasons.back())
          fail("reason ids not strictly increasing");
        iv.reasons.push_back(id);
      } while (try_expect(','));
      expect(']');
    }
    if (iv.reasons.empty()) fail("interval without reasons");
    comma_key("characterization");
    expect('[');
    if (!try_expect(']')) {
      do {
        iv.characterization.push_back(read_poly(/*allow_zero=*/false));
      } while (try_expect(','));
      expect(']');
    }
    if (try_expect(',')) {
      key("children");
      iv.children = read_intervals(level + 1);
      expect('}');
    } else {
      expect('}');
    }
    return iv;
  }

  const std::string& s_;
  size_t pos_ = 0;
  VarOrderPtr order_;
  size_t n_constraints_ = 0;
};

}  // namespace

std::string serialize(const Certificate& cert) {
  const size_t nvars = cert.variables.size();
  std::string out;
  out += "{\"version\":1,\"variables\":[";
  for (size_t i = 0; i < cert.variables.size(); ++i) {
    if (i) out += ',';
    append_escaped(out, cert.variables[i]);
  }
  out += "],\"constraints\":[";
  for (size_t i = 0; i < cert.constraints.size(); ++i) {
    if (i) out += ',';
    const Constraint& c = cert.constraints[i];
    out += "{\"id\":";
    out += std::to_string(c.id);
    out += ",\"poly\":";
    append_poly(out, c.poly, nvars);
    out += ",\"rel\":\"";
    out += relation_str(c.rel);
    out += "\"}";
  }
  out += "],\"covering\":[";
  for (size_t i = 0; i < cert.covering.size(); ++i) {
    if (i) out += ',';
    append_interval(out, cert.covering[i], nvars);
  }
  out += "],\"producer\":";
  append_escaped(out, cert.producer);
  out += '}';
  return out;
}

Certificate deserialize(const std::string& bytes) {
  return Reader(bytes).read();
}

}  // namespace nracover
