#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nracover/errors.hpp"
#include "nracover/frontend.hpp"
#include "numeral.hpp"

namespace nracover {

namespace {

struct Tok {
  enum class Kind { LParen, RParen, Symbol, Numeral, Keyword, String, End };

  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

bool symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
         std::string_view::npos;
}

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (c == '(') {
      t.kind = Tok::Kind::LParen;
      advance();
    } else if (c == ')') {
      t.kind = Tok::Kind::RParen;
      advance();
    } else if (c == '"') {
      t.kind = Tok::Kind::String;
      advance();
      while (true) {
        if (i >= text.size())
          throw ParseError("unterminated string literal", t.line, t.col);
        if (text[i] == '"') {
          advance();
          if (i < text.size() && text[i] == '"') {  // "" escapes a quote
            t.text += '"';
            advance();
            continue;
          }
          break;
        }
        t.text += text[i];
        advance();
      }
    } else if (c == '|') {
      t.kind = Tok::Kind::Symbol;
      advance();
      while (true) {
        if (i >= text.size())
          throw ParseError("unterminated quoted symbol", t.line, t.col);
        if (text[i] == '|') {
          advance();
          break;
        }
        t.text += text[i];
        advance();
      }
    } else if (c == ':') {
      t.kind = Tok::Kind::Keyword;
      t.text += c;
      advance();
      while (i < text.size() && symbol_char(text[i])) {
        t.text += text[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      t.kind = Tok::Kind::Numeral;
      if (c == '-') {
        t.text += c;
        advance();
      }
      bool seen_dot = false;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) ||
              (text[i] == '.' && !seen_dot))) {
        seen_dot = seen_dot || text[i] == '.';
        t.text += text[i];
        advance();
      }
      if (t.text.back() == '.')
        throw ParseError("malformed decimal numeral '" + t.text + "'", t.line,
                         t.col);
    } else if (symbol_char(c)) {
      t.kind = Tok::Kind::Symbol;
      while (i < text.size() && symbol_char(text[i])) {
        t.text += text[i];
        advance();
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       col);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Tok{Tok::Kind::End, "", line, col});
  return out;
}

std::optional<Relation> relation_of(const std::string& s) {
  if (s == "<") return Relation::Lt;
  if (s == "<=") return Relation::Le;
  if (s == "=") return Relation::Eq;
  if (s == ">=") return Relation::Ge;
  if (s == ">") return Relation::Gt;
  return std::nullopt;
}

class SmtParser {
 public:
  explicit SmtParser(const std::string& text) : toks_(lex(text)) {}

  ParsedProblem parse() {
    collect_declarations();
    order_ = VarOrder::make(names_);
    for (unsigned k = 0; k < order_->size(); ++k)
      vars_.emplace(names_[k], order_->var(k));
    while (peek().kind != Tok::Kind::End) command();
    ParsedProblem p;
    p.variables = names_;
    p.formula = Formula{order_, std::move(constraints_)};
    p.source_spans = std::move(spans_);
    return p;
  }

 private:
  // Declarations may be interleaved with asserts, but every polynomial needs
  // the complete variable order up front, so names are gathered in a shallow
  // pre-scan of the top-level commands.
  void collect_declarations() {
    int depth = 0;
    for (size_t i = 0; i + 2 < toks_.size(); ++i) {
      if (toks_[i].kind == Tok::Kind::LParen) {
        if (depth == 0 && toks_[i + 1].kind == Tok::Kind::Symbol &&
            (toks_[i + 1].text == "declare-fun" ||
             toks_[i + 1].text == "declare-const") &&
            toks_[i + 2].kind == Tok::Kind::Symbol) {
          const Tok& name = toks_[i + 2];
          for (const std::string& seen : names_)
            if (seen == name.text)
              throw ParseError("variable '" + name.text + "' already declared",
                               name.line, name.col);
          names_.push_back(name.text);
        }
        ++depth;
      } else if (toks_[i].kind == Tok::Kind::RParen) {
        --depth;
      }
    }
  }

  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_++]; }

  const Tok& expect(Tok::Kind kind, const std::string& what) {
    const Tok& t = next();
    if (t.kind != kind)
      throw ParseError("expected " + what, t.line, t.col);
    return t;
  }

  static std::string at(const Tok& t) {
    return "at " + std::to_string(t.line) + ":" + std::to_string(t.col) +
           ": ";
  }

  void skip_to_rparen() {
    int depth = 1;
    while (depth > 0) {
      const Tok& t = next();
      if (t.kind == Tok::Kind::End)
        throw ParseError("unexpected end of input", t.line, t.col);
      if (t.kind == Tok::Kind::LParen) ++depth;
      if (t.kind == Tok::Kind::RParen) --depth;
    }
  }

  void command() {
    expect(Tok::Kind::LParen, "'('");
    const Tok& head = expect(Tok::Kind::Symbol, "a command name");
    const std::string& c = head.text;
    if (c == "set-logic") {
      const Tok& logic = expect(Tok::Kind::Symbol, "a logic name");
      if (logic.text != "QF_NRA")
        throw UnsupportedFeature(at(logic) + "logic '" + logic.text +
                                 "' is not supported (expected QF_NRA)");
      expect(Tok::Kind::RParen, "')'");
    } else if (c == "set-info" || c == "set-option") {
      skip_to_rparen();
    } else if (c == "declare-fun") {
      expect(Tok::Kind::Symbol, "a variable name");
      expect(Tok::Kind::LParen, "'('");
      const Tok& args = next();
      if (args.kind != Tok::Kind::RParen)
        throw UnsupportedFeature(
            at(args) + "functions with arguments are not supported");
      check_sort(expect(Tok::Kind::Symbol, "a sort"));
      expect(Tok::Kind::RParen, "')'");
    } else if (c == "declare-const") {
      expect(Tok::Kind::Symbol, "a variable name");
      check_sort(expect(Tok::Kind::Symbol, "a sort"));
      expect(Tok::Kind::RParen, "')'");
    } else if (c == "assert") {
      bool_term(false);
      expect(Tok::Kind::RParen, "')'");
    } else if (c == "check-sat" || c == "exit") {
      expect(Tok::Kind::RParen, "')'");
    } else {
      throw ParseError("unsupported command '" + c + "'", head.line, head.col);
    }
  }

  static void check_sort(const Tok& sort) {
    if (sort.text != "Real")
      throw UnsupportedFeature(at(sort) + "sort '" + sort.text +
                               "' is not supported (only Real)");
  }

  void bool_term(bool negated) {
    const Tok& open = peek();
    if (open.kind != Tok::Kind::LParen)
      throw ParseError("expected an atom", open.line, open.col);
    next();
    const Tok& head = expect(Tok::Kind::Symbol, "an operator");
    const std::string& h = head.text;
    if (h == "and") {
      if (negated)
        throw UnsupportedFeature(
            at(head) + "negated conjunctions are not supported");
      int args = 0;
      while (peek().kind != Tok::Kind::RParen &&
             peek().kind != Tok::Kind::End) {
        bool_term(false);
        ++args;
      }
      if (args == 0)
        throw ParseError("'and' needs at least one argument", head.line,
                         head.col);
      expect(Tok::Kind::RParen, "')'");
    } else if (h == "not") {
      bool_term(!negated);
      expect(Tok::Kind::RParen, "')'");
    } else if (h == "or" || h == "xor" || h == "=>" || h == "ite" ||
               h == "let" || h == "distinct" || h == "forall" ||
               h == "exists") {
      throw UnsupportedFeature(
          at(head) + "'" + h +
          "' is not supported (conjunctions of atoms only)");
    } else if (std::optional<Relation> rel = relation_of(h)) {
      MultiPoly lhs = arith_term();
      MultiPoly rhs = arith_term();
      const Tok& close = peek();
      if (close.kind != Tok::Kind::RParen)
        throw UnsupportedFeature(
            at(close) + "chained comparisons are not supported");
      next();
      int id = static_cast<int>(constraints_.size());
      constraints_.push_back(
          {lhs - rhs, negated ? negate_relation(*rel) : *rel, id});
      spans_.emplace(id, SourceSpan{head.line, head.col});
    } else {
      throw ParseError("unknown operator '" + h + "'", head.line, head.col);
    }
  }

  MultiPoly arith_term() {
    const Tok& t = next();
    switch (t.kind) {
      case Tok::Kind::Numeral:
        return MultiPoly(order_, numeral_value(t.text, t.line, t.col));
      case Tok::Kind::Symbol: {
        auto it = vars_.find(t.text);
        if (it == vars_.end())
          throw ParseError("unknown symbol '" + t.text + "'", t.line, t.col);
        return MultiPoly::var(order_, it->second);
      }
      case Tok::Kind::LParen:
        break;
      default:
        throw ParseError("expected a term", t.line, t.col);
    }
    const Tok& head = expect(Tok::Kind::Symbol, "an arithmetic operator");
    const std::string& h = head.text;
    if (h == "ite" || h == "let" || h == "and" || h == "or" || h == "not" ||
        h == "forall" || h == "exists")
      throw UnsupportedFeature(at(head) + "'" + h +
                               "' is not supported inside arithmetic terms");
    std::vector<MultiPoly> args;
    while (peek().kind != Tok::Kind::RParen && peek().kind != Tok::Kind::End)
      args.push_back(arith_term());
    expect(Tok::Kind::RParen, "')'");
    if (args.empty())
      throw ParseError("'" + h + "' needs arguments", head.line, head.col);
    if (h == "+") {
      MultiPoly acc = args[0];
      for (size_t i = 1; i < args.size(); ++i) acc = acc + args[i];
      return acc;
    }
    if (h == "-") {
      if (args.size() == 1) return -args[0];
      MultiPoly acc = args[0];
      for (size_t i = 1; i < args.size(); ++i) acc = acc - args[i];
      return acc;
    }
    if (h == "*") {
      MultiPoly acc = args[0];
      for (size_t i = 1; i < args.size(); ++i) acc = acc * args[i];
      return acc;
    }
    if (h == "/") {
      if (args.size() != 2)
        throw ParseError("'/' expects exactly two arguments", head.line,
                         head.col);
      if (!args[1].is_constant())
        throw UnsupportedFeature(
            at(head) + "division by a non-constant is not supported");
      Rational d = args[1].constant_value();
      if (d.is_zero())
        throw ParseError("division by zero", head.line, head.col);
      return args[0] * (Rational(1) / d);
    }
    throw ParseError("unknown function '" + h + "'", head.line, head.col);
  }

  std::vector<Tok> toks_;
  size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, Variable> vars_;
  VarOrderPtr order_;
  std::vector<Constraint> constraints_;
  std::map<int, SourceSpan> spans_;
};

}  // namespace

ParsedProblem parse_smtlib(const std::string& text) {
  return SmtParser(text).parse();
}

}  // namespace nracover
