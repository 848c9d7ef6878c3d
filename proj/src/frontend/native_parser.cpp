#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nracover/errors.hpp"
#include "nracover/frontend.hpp"
#include "numeral.hpp"

namespace nracover {

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Recursive-descent parser for one infix constraint line.  Precedence, from
/// loose to tight: relation, + -, * /, unary -, ^.
class LineParser {
 public:
  LineParser(const std::string& line, int line_no, VarOrderPtr order,
             const std::map<std::string, Variable>& vars)
      : s_(line), line_(line_no), order_(std::move(order)), vars_(vars) {}

  Constraint parse_constraint(int id) {
    MultiPoly lhs = expr();
    Relation rel = relation();
    MultiPoly rhs = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("unexpected trailing input", line_, col());
    return {lhs - rhs, rel, id};
  }

 private:
  int col() const { return static_cast<int>(pos_) + 1; }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool try_consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (try_consume('+')) {
        acc = acc + term();
      } else if (try_consume('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (try_consume('*')) {
        acc = acc * factor();
      } else if (try_consume('/')) {
        int at = col();
        MultiPoly div = factor();
        if (!div.is_constant())
          throw ParseError("division by a non-constant", line_, at);
        if (div.is_zero()) throw ParseError("division by zero", line_, at);
        acc = acc * (Rational(1) / div.constant_value());
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    if (try_consume('-')) return -factor();
    if (try_consume('+')) return factor();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!try_consume('^')) return base;
    skip_ws();
    int at = col();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer exponent", line_, at);
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 9999) throw ParseError("exponent too large", line_, at);
    }
    return base.pow(static_cast<unsigned>(e));
  }

  MultiPoly primary() {
    skip_ws();
    int at = col();
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!try_consume(')'))
        throw ParseError("expected ')'", line_, col());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      bool seen_dot = false;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
              (s_[pos_] == '.' && !seen_dot))) {
        seen_dot = seen_dot || s_[pos_] == '.';
        digits += s_[pos_++];
      }
      if (digits.back() == '.')
        throw ParseError("malformed decimal numeral '" + digits + "'", line_,
                         at);
      return MultiPoly(order_, numeral_value(digits, line_, at));
    }
    if (name_start(c)) {
      std::string name;
      while (pos_ < s_.size() && name_char(s_[pos_])) name += s_[pos_++];
      auto it = vars_.find(name);
      if (it == vars_.end())
        throw ParseError("unknown variable '" + name + "'", line_, at);
      return MultiPoly::var(order_, it->second);
    }
    throw ParseError("expected a number, variable, or '('", line_, at);
  }

  Relation relation() {
    skip_ws();
    int at = col();
    auto starts = [&](const char* op) {
      return s_.compare(pos_, std::string::traits_type::length(op), op) == 0;
    };
    if (starts("<=")) return pos_ += 2, Relation::Le;
    if (starts(">=")) return pos_ += 2, Relation::Ge;
    if (starts("!=")) return pos_ += 2, Relation::Ne;
    if (starts("==")) return pos_ += 2, Relation::Eq;
    if (starts("<")) return pos_ += 1, Relation::Lt;
    if (starts(">")) return pos_ += 1, Relation::Gt;
    if (starts("=")) return pos_ += 1, Relation::Eq;
    throw ParseError("expected a relation (< <= = != >= >)", line_, at);
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_;
  VarOrderPtr order_;
  const std::map<std::string, Variable>& vars_;
};

}  // namespace

ParsedProblem parse_native(const std::string& text) {
  // Split into lines, dropping `#` comments.
  std::vector<std::pair<int, std::string>> lines;  // (1-based line no, text)
  {
    int no = 1;
    std::string cur;
    for (char c : text + "\n") {
      if (c == '\n') {
        size_t hash = cur.find('#');
        if (hash != std::string::npos) cur.erase(hash);
        lines.emplace_back(no++, cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }

  auto blank = [](const std::string& s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
  };

  size_t li = 0;
  while (li < lines.size() && blank(lines[li].second)) ++li;
  if (li == lines.size())
    throw ParseError("expected a 'vars' header line", 1, 1);

  // Header: `vars x y ...`
  std::vector<std::string> names;
  {
    auto [no, line] = lines[li];
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < line.size() &&
             std::isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
    };
    skip_ws();
    size_t kw = pos;
    while (pos < line.size() && name_char(line[pos])) ++pos;
    if (line.substr(kw, pos - kw) != "vars")
      throw ParseError("expected a 'vars' header line", no,
                       static_cast<int>(kw) + 1);
    while (true) {
      skip_ws();
      if (pos == line.size()) break;
      int at = static_cast<int>(pos) + 1;
      if (!name_start(line[pos]))
        throw ParseError("invalid variable name", no, at);
      std::string name;
      while (pos < line.size() && name_char(line[pos])) name += line[pos++];
      for (const std::string& seen : names)
        if (seen == name)
          throw ParseError("variable '" + name + "' already declared", no, at);
      names.push_back(std::move(name));
    }
    if (names.empty())
      throw ParseError("'vars' line declares no variables", no,
                       static_cast<int>(pos) + 1);
  }

  VarOrderPtr order = VarOrder::make(names);
  std::map<std::string, Variable> vars;
  for (unsigned k = 0; k < order->size(); ++k)
    vars.emplace(names[k], order->var(k));

  ParsedProblem p;
  p.variables = names;
  std::vector<Constraint> constraints;
  for (++li; li < lines.size(); ++li) {
    const auto& [no, line] = lines[li];
    if (blank(line)) continue;
    int id = static_cast<int>(constraints.size());
    constraints.push_back(
        LineParser(line, no, order, vars).parse_constraint(id));
    size_t first = line.find_first_not_of(" \t");
    p.source_spans.emplace(id,
                           SourceSpan{no, static_cast<int>(first) + 1});
  }
  p.formula = Formula{order, std::move(constraints)};
  return p;
}

}  // namespace nracover
