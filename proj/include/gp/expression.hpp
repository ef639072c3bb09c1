#pragma once

// Expression trees over {rational literals, pi, e, sqrt2, + - * / ^int}.
//
// Grammar (whitespace ignored):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' ['-'] integer)?
//   base   := number | 'pi' | 'e' | 'sqrt2' | '(' expr ')'
//   number := digits ('.' digits)?
// Decimal literals are exact rationals ("0.2928" is 2928/10000). U+2212 is
// accepted as a minus sign.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gp/exact_arith.hpp"

namespace gp {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Pi, E, Sqrt2, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Literal;
  BigRat literal;      // Literal
  long exponent = 0;   // Pow
  ExprPtr lhs;         // unary operand or left operand
  ExprPtr rhs;         // right operand

  static ExprPtr make_literal(const BigRat& v);
  static ExprPtr make_pi();
  static ExprPtr make_e();
  static ExprPtr make_sqrt2();
  static ExprPtr make_neg(ExprPtr x);
  static ExprPtr make_binary(Kind op, ExprPtr l, ExprPtr r);
  static ExprPtr make_pow(ExprPtr base, long exponent);
};

/// Throws ParseError carrying the offending character offset.
ExprPtr parse_expression(std::string_view text);

/// Precedence-aware rendering that parses back to the same tree shape
/// (up to literal rationals, which reparse as a quotient of integers).
std::string to_string(const Expr& e);

/// True when the expression mentions neither pi nor e.
bool is_exact(const Expr& e);

/// Exact value in Q(sqrt2), or nullopt when the expression mentions pi or e.
/// Throws DomainError on an exact division by zero.
std::optional<QSqrt2> exact_value(const Expr& e);

}  // namespace gp
