#ifndef GLACALC_EXPR_HPP
#define GLACALC_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "glacalc/rational.hpp"

namespace glacalc {

/// Syntax error in an expression or definition file, with 1-based position.
struct ParseError : CalcError {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : CalcError("parse error at line " + std::to_string(line_) + ", column " +
                  std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Parses an expression built from integers, the declared variable names,
/// `+ - * / ^` and parentheses.  Exponents are non-negative integer
/// literals.  `line` seeds the reported position for errors.
RatFunc parse_ratfunc(std::string_view text,
                      const std::vector<std::string>& vars, int line = 1);

std::string rational_to_string(const Rational& c);
/// Deterministic rendering: terms in descending graded lex order, `*`
/// between factors, `^` for powers, no whitespace.
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);
/// `num` when the denominator is 1, otherwise `(num)/(den)`.
std::string ratfunc_to_string(const RatFunc& f,
                              const std::vector<std::string>& vars);

/// Whether a printed coefficient must be parenthesized before being glued
/// onto a basis symbol with `*`.
bool needs_parentheses(const std::string& printed);

}  // namespace glacalc

#endif
