#pragma once

#include <map>
#include <string>
#include <vector>

#include "nracover/constraint.hpp"

namespace nracover {

/// 1-based position of a construct in its source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

/// A parsed input problem.  The declared variables, in declaration order,
/// define the formula's default variable order; source_spans maps each
/// constraint id to the location of the atom it came from.
struct ParsedProblem {
  std::vector<std::string> variables;
  Formula formula;
  std::map<int, SourceSpan> source_spans;
};

/// Parses the SMT-LIB2 fragment for quantifier-free nonlinear real
/// arithmetic: `set-logic QF_NRA`, zero-arity `declare-fun` and
/// `declare-const` of sort Real, `assert` over `and`, `not` of atoms, the
/// relations <, <=, =, >=, >, arithmetic +, -, * and / by a nonzero
/// constant, exact integer and decimal numerals, and `check-sat`.
/// `set-info`, `set-option`, and `exit` are accepted and ignored.  Boolean
/// structure beyond a conjunction of (possibly negated) atoms — or, xor,
/// ite, let, quantifiers — raises UnsupportedFeature with a location in the
/// message; malformed input raises ParseError.
ParsedProblem parse_smtlib(const std::string& text);

/// Parses the native line-oriented format: a header line `vars x y ...`,
/// then one constraint per line in infix notation, e.g.
///   vars x y
///   x^2 + y^2 < 1
///   (x - 3/2)^2 + (y - 3/2)^2 < 1
/// Operators: + - * / ^ and parentheses; / requires a nonzero constant
/// divisor; numerals may be integers, fractions (3/2), or decimals (1.5,
/// exact); relations: < <= = != >= >.  `#` starts a comment; blank lines
/// are skipped.  Errors carry line and column.
ParsedProblem parse_native(const std::string& text);

/// Renders a problem in the native format.  Property: parse_native of the
/// result reconstructs a formula identical to p.formula.
std::string problem_str(const ParsedProblem& p);

/// Rebuilds the formula over a different variable order, which must be a
/// permutation of p.variables; throws Error otherwise.
Formula with_order(const ParsedProblem& p,
                   const std::vector<std::string>& names);

}  // namespace nracover
